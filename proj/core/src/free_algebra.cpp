#include "taylor/free_algebra.hpp"

#include <algorithm>

#include "taylor/closure.hpp"
#include "taylor/error.hpp"

namespace taylor {

std::size_t FreeAlgebra::find(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), table,
                             [](const TermOperation& e, const std::vector<Elem>& t) { return e.table() < t; });
  if (it != elements.end() && it->table() == table) return static_cast<std::size_t>(it - elements.begin());
  return elements.size();
}

namespace {

std::vector<Tuple> projection_tables(std::size_t n, unsigned k) {
  std::vector<Tuple> gens;
  for (unsigned i = 0; i < k; ++i) gens.push_back(TermOperation::projection(n, k, i).table());
  return gens;
}

// Builds terms for every closure element from the recorded origins.
std::vector<Term> origin_terms(const FiniteAlgebra& alg, const TupleClosure& closure) {
  std::vector<Term> terms(closure.tuples.size());
  unsigned next_var = 0;
  for (std::size_t i = 0; i < closure.tuples.size(); ++i) {
    const auto& o = closure.origin[i];
    if (o.op == TupleClosure::kGenerator) {
      terms[i] = variable(next_var++);
      continue;
    }
    std::vector<Term> args;
    for (auto a : o.args) args.push_back(terms[a]);
    terms[i] = apply(alg.op(o.op).symbol(), std::move(args));
  }
  return terms;
}

std::vector<TermOperation> sorted_elements(const FiniteAlgebra& alg, unsigned k, TupleClosure& closure) {
  const auto terms = origin_terms(alg, closure);
  std::vector<TermOperation> out;
  out.reserve(closure.tuples.size());
  for (std::size_t i = 0; i < closure.tuples.size(); ++i)
    out.emplace_back(k, alg.size(), std::move(closure.tuples[i]), terms[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FreeAlgebra free_algebra(const FiniteAlgebra& alg, unsigned k, std::size_t cap) {
  if (k == 0) throw PreconditionViolated("free_algebra: need at least one generator");
  ClosureOptions opts;
  opts.cap = cap;
  opts.track_origin = true;
  auto closure = close_power(alg, int_pow(alg.size(), k), projection_tables(alg.size(), k), opts);
  FreeAlgebra fa;
  fa.base = &alg;
  fa.generators = k;
  fa.complete = closure.complete;
  fa.elements = sorted_elements(alg, k, closure);
  return fa;
}

CyclicSearch cyclic_operations(const FiniteAlgebra& alg, unsigned p, std::size_t cap, bool first_only) {
  if (p < 2) throw PreconditionViolated("cyclic_operations: arity must be at least 2");
  const std::size_t n = alg.size();
  CyclicSearch out;
  ClosureOptions opts;
  opts.cap = cap;
  opts.track_origin = true;
  if (first_only) {
    opts.stop_when = [&](const Tuple& t) { return TermOperation(p, n, t).is_cyclic(); };
  }
  auto closure = close_power(alg, int_pow(n, p), projection_tables(n, p), opts);
  out.complete = closure.complete;
  for (auto& op : sorted_elements(alg, p, closure))
    if (op.is_cyclic()) {
      out.operations.push_back(std::move(op));
    }
  if (first_only && out.operations.size() > 1) out.operations.resize(1);
  return out;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::No: return "no";
    case Tristate::Yes: return "yes";
    default: return "unknown";
  }
}

std::size_t least_prime_above(std::size_t n) {
  for (std::size_t p = n + 1;; ++p) {
    bool prime = p >= 2;
    for (std::size_t d = 2; d * d <= p && prime; ++d)
      if (p % d == 0) prime = false;
    if (prime) return p;
  }
}

Tristate generates_basic_operations(const FiniteAlgebra& alg, const TermOperation& c, std::size_t cap) {
  FiniteAlgebra reduct(alg.name() + "[c]", alg.size(), {c.as_table("c")});
  Tristate result = Tristate::Yes;
  for (const auto& op : alg.ops()) {
    ClosureOptions opts;
    opts.cap = cap;
    const auto& target = op.table();
    opts.stop_when = [&](const Tuple& t) { return t == target; };
    auto closure = close_power(reduct, int_pow(alg.size(), op.arity()), projection_tables(alg.size(), op.arity()), opts);
    if (closure.stopped || closure.contains(target)) continue;
    if (!closure.complete) {
      result = Tristate::Unknown;
      continue;
    }
    return Tristate::No;
  }
  return result;
}

TaylorReport taylor_report(const FiniteAlgebra& alg, std::size_t cap) {
  TaylorReport report;
  const std::size_t p = least_prime_above(alg.size());
  bool complete_at_p = false;
  for (unsigned k = 2; k <= p; ++k) {
    report.arities_checked.push_back(k);
    auto found = cyclic_operations(alg, k, cap, true);
    if (!found.operations.empty()) {
      report.has_taylor = Tristate::Yes;
      report.witness = found.operations.front();
      report.witness_arity = k;
      break;
    }
    if (k == p) complete_at_p = found.complete;
  }
  if (report.has_taylor != Tristate::Yes) {
    report.has_taylor = complete_at_p ? Tristate::No : Tristate::Unknown;
    report.minimal_taylor_bounded = report.has_taylor == Tristate::No ? Tristate::No : Tristate::Unknown;
    return report;
  }
  auto all = cyclic_operations(alg, report.witness_arity, cap);
  std::vector<TermOperation> candidates = all.complete ? all.operations : std::vector<TermOperation>{*report.witness};
  report.minimal_taylor_bounded = Tristate::Yes;
  for (const auto& c : candidates) {
    const Tristate g = generates_basic_operations(alg, c, cap);
    if (g == Tristate::No) {
      report.minimal_taylor_bounded = Tristate::No;
      break;
    }
    if (g == Tristate::Unknown) report.minimal_taylor_bounded = Tristate::Unknown;
  }
  return report;
}

}  // namespace taylor
