#include "taylor/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "taylor/detail/odometer.hpp"
#include "taylor/error.hpp"

namespace taylor {

Term variable(unsigned index) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermNode::Kind::Variable;
  node->variable = index;
  return node;
}

Term apply(std::string symbol, std::vector<Term> args) {
  auto node = std::make_shared<TermNode>();
  node->kind = TermNode::Kind::Apply;
  node->symbol = std::move(symbol);
  node->args = std::move(args);
  return node;
}

Term substitute(const Term& t, const std::vector<Term>& subs) {
  std::unordered_map<const TermNode*, Term> memo;
  std::function<Term(const Term&)> go = [&](const Term& u) -> Term {
    if (auto it = memo.find(u.get()); it != memo.end()) return it->second;
    Term out;
    if (u->kind == TermNode::Kind::Variable) {
      if (u->variable >= subs.size()) throw ArityMismatch("substitute: variable x" + std::to_string(u->variable + 1) + " has no substitute");
      out = subs[u->variable];
    } else {
      std::vector<Term> args;
      args.reserve(u->args.size());
      for (const auto& a : u->args) args.push_back(go(a));
      out = apply(u->symbol, std::move(args));
    }
    memo.emplace(u.get(), out);
    return out;
  };
  return go(t);
}

namespace {

void collect_nodes(const Term& t, std::unordered_set<const TermNode*>& seen, std::vector<const TermNode*>& order) {
  if (!seen.insert(t.get()).second) return;
  for (const auto& a : t->args) collect_nodes(a, seen, order);
  order.push_back(t.get());
}

// Children before parents.
std::vector<const TermNode*> topological(const Term& t) {
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> order;
  collect_nodes(t, seen, order);
  return order;
}

}  // namespace

unsigned term_arity(const Term& t) {
  unsigned arity = 0;
  for (const auto* node : topological(t))
    if (node->kind == TermNode::Kind::Variable) arity = std::max(arity, node->variable + 1);
  return arity;
}

std::size_t term_size(const Term& t) { return topological(t).size(); }

std::string to_string(const Term& t, std::size_t max_len) {
  std::ostringstream os;
  bool truncated = false;
  std::function<void(const Term&)> go = [&](const Term& u) {
    if (truncated) return;
    if (static_cast<std::size_t>(os.tellp()) > max_len) {
      truncated = true;
      return;
    }
    if (u->kind == TermNode::Kind::Variable) {
      os << 'x' << (u->variable + 1);
      return;
    }
    os << u->symbol << '(';
    for (std::size_t i = 0; i < u->args.size(); ++i) {
      if (i) os << ',';
      go(u->args[i]);
      if (truncated) return;
    }
    os << ')';
  };
  go(t);
  std::string s = os.str();
  if (truncated) s += "...";
  return s;
}

Elem evaluate(const Term& t, const FiniteAlgebra& alg, std::span<const Elem> args) {
  std::unordered_map<const TermNode*, Elem> value;
  for (const auto* node : topological(t)) {
    if (node->kind == TermNode::Kind::Variable) {
      if (node->variable >= args.size()) throw ArityMismatch("evaluate: missing argument x" + std::to_string(node->variable + 1));
      value[node] = args[node->variable];
      continue;
    }
    const std::size_t o = alg.find_op(node->symbol);
    if (o == alg.op_count()) throw ArityMismatch("evaluate: unknown symbol " + node->symbol);
    if (alg.op(o).arity() != node->args.size()) throw ArityMismatch("evaluate: wrong arity for " + node->symbol);
    std::vector<Elem> vals;
    for (const auto& a : node->args) vals.push_back(value.at(a.get()));
    value[node] = alg.op(o)(vals);
  }
  return value.at(t.get());
}

TermOperation::TermOperation(unsigned arity, std::size_t n, std::vector<Elem> table, Term term)
    : arity_(arity), n_(n), table_(std::move(table)), term_(std::move(term)) {
  if (table_.size() != int_pow(n_, arity_)) throw ArityMismatch("TermOperation: table length does not match arity");
}

TermOperation TermOperation::projection(std::size_t n, unsigned arity, unsigned i) {
  if (i >= arity) throw ArityMismatch("projection index out of range");
  std::vector<Elem> table(int_pow(n, arity));
  const std::size_t stride = int_pow(n, arity - 1 - i);
  for (std::size_t flat = 0; flat < table.size(); ++flat) table[flat] = static_cast<Elem>((flat / stride) % n);
  return TermOperation(arity, n, std::move(table), variable(i));
}

bool TermOperation::is_idempotent() const {
  std::vector<Elem> args(arity_);
  for (Elem a = 0; a < n_; ++a) {
    std::fill(args.begin(), args.end(), a);
    if ((*this)(args) != a) return false;
  }
  return true;
}

bool TermOperation::is_cyclic() const {
  if (!is_idempotent()) return false;
  std::vector<Elem> rotated(arity_);
  return detail::for_each_index_tuple(arity_, n_, [&](const std::vector<std::size_t>& idx) {
    for (unsigned i = 0; i < arity_; ++i) rotated[i] = static_cast<Elem>(idx[(i + 1) % arity_]);
    std::vector<Elem> args(idx.begin(), idx.end());
    return (*this)(args) == (*this)(rotated);
  });
}

bool TermOperation::is_essential(unsigned position) const {
  const std::size_t stride = int_pow(n_, arity_ - 1 - position);
  for (std::size_t flat = 0; flat < table_.size(); ++flat) {
    const std::size_t digit = (flat / stride) % n_;
    const std::size_t base = flat - digit * stride;
    for (std::size_t other = digit + 1; other < n_; ++other)
      if (table_[base + other * stride] != table_[flat]) return true;
  }
  return false;
}

TermOperation TermOperation::restricted(const std::vector<Elem>& elems) const {
  std::vector<Elem> index(n_, static_cast<Elem>(-1));
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const std::size_t m = elems.size();
  std::vector<Elem> table(int_pow(m, arity_));
  std::vector<Elem> args(arity_);
  std::size_t flat = 0;
  detail::for_each_index_tuple(arity_, m, [&](const std::vector<std::size_t>& idx) {
    for (unsigned i = 0; i < arity_; ++i) args[i] = elems[idx[i]];
    const Elem v = index[(*this)(args)];
    if (v == static_cast<Elem>(-1)) throw NotClosed("restricted: subset not closed under operation");
    table[flat++] = v;
    return true;
  });
  return TermOperation(arity_, m, std::move(table), term_);
}

TermOperation compose(const TermOperation& outer, const std::vector<TermOperation>& inner) {
  if (inner.size() != outer.arity()) throw ArityMismatch("compose: expected " + std::to_string(outer.arity()) + " inner operations");
  if (inner.empty()) throw ArityMismatch("compose: no inner operations");
  const unsigned m = inner[0].arity();
  const std::size_t n = outer.base();
  for (const auto& g : inner)
    if (g.arity() != m || g.base() != n) throw ArityMismatch("compose: inner operations disagree in arity or carrier");
  std::vector<Elem> table(int_pow(n, m));
  std::vector<Elem> args(outer.arity());
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    for (unsigned i = 0; i < outer.arity(); ++i) args[i] = inner[i].at(flat);
    table[flat] = outer(args);
  }
  Term term;
  if (outer.has_term()) {
    std::vector<Term> subs;
    bool all = true;
    for (const auto& g : inner) {
      if (!g.has_term()) all = false;
      subs.push_back(g.term());
    }
    if (all) term = substitute(outer.term(), subs);
  }
  return TermOperation(m, n, std::move(table), std::move(term));
}

TermOperation full_composition(const TermOperation& s, const TermOperation& t) {
  const unsigned m = s.arity();
  const unsigned k = t.arity();
  const std::size_t n = s.base();
  if (t.base() != n) throw ArityMismatch("full_composition: carriers differ");
  std::vector<TermOperation> blocks;
  for (unsigned j = 0; j < m; ++j) {
    // t applied to variables j*k .. j*k+k-1 of an mk-ary operation.
    std::vector<TermOperation> projs;
    for (unsigned i = 0; i < k; ++i) projs.push_back(TermOperation::projection(n, m * k, j * k + i));
    blocks.push_back(compose(t, projs));
  }
  return compose(s, blocks);
}

Term full_composition(const Term& s, unsigned s_arity, const Term& t, unsigned t_arity) {
  std::vector<Term> blocks;
  for (unsigned j = 0; j < s_arity; ++j) {
    std::vector<Term> vars;
    for (unsigned i = 0; i < t_arity; ++i) vars.push_back(variable(j * t_arity + i));
    blocks.push_back(substitute(t, vars));
  }
  return substitute(s, blocks);
}

TermOperation realize(const Term& t, const FiniteAlgebra& alg, unsigned arity) {
  const std::size_t n = alg.size();
  const std::size_t len = int_pow(n, arity);
  std::unordered_map<const TermNode*, std::vector<Elem>> tables;
  for (const auto* node : topological(t)) {
    std::vector<Elem> table(len);
    if (node->kind == TermNode::Kind::Variable) {
      if (node->variable >= arity) throw ArityMismatch("realize: variable x" + std::to_string(node->variable + 1) + " exceeds arity");
      const std::size_t stride = int_pow(n, arity - 1 - node->variable);
      for (std::size_t flat = 0; flat < len; ++flat) table[flat] = static_cast<Elem>((flat / stride) % n);
    } else {
      const std::size_t o = alg.find_op(node->symbol);
      if (o == alg.op_count()) throw ArityMismatch("realize: unknown symbol " + node->symbol);
      const auto& op = alg.op(o);
      if (op.arity() != node->args.size()) throw ArityMismatch("realize: wrong arity for " + node->symbol);
      std::vector<const std::vector<Elem>*> child;
      for (const auto& a : node->args) child.push_back(&tables.at(a.get()));
      for (std::size_t flat = 0; flat < len; ++flat) {
        std::size_t idx = 0;
        for (const auto* c : child) idx = idx * n + (*c)[flat];
        table[flat] = op.at(idx);
      }
    }
    tables.emplace(node, std::move(table));
  }
  return TermOperation(arity, n, std::move(tables.at(t.get())), t);
}

TermOperation basic_operation(const FiniteAlgebra& alg, std::size_t op_index) {
  const auto& op = alg.op(op_index);
  std::vector<Term> vars;
  for (unsigned i = 0; i < op.arity(); ++i) vars.push_back(variable(i));
  return TermOperation(op.arity(), alg.size(), op.table(), apply(op.symbol(), std::move(vars)));
}

}  // namespace taylor
