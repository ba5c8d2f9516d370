#include "taylor/closure.hpp"

#include <sstream>

#include "taylor/detail/odometer.hpp"
#include "taylor/error.hpp"

namespace taylor {

namespace {

// Enumerates every k-tuple of indices into [0, m) that uses at least one index
// from [old, m), each exactly once: the first "new" index sits at position p.
template <class F>
bool for_each_new_tuple(unsigned k, std::size_t old, std::size_t m, F&& fn) {
  std::vector<std::size_t> idx(k);
  for (unsigned p = 0; p < k; ++p) {
    // positions < p range over [0, old), p over [old, m), > p over [0, m)
    std::vector<std::size_t> lo(k), hi(k);
    for (unsigned i = 0; i < k; ++i) {
      lo[i] = i < p ? 0 : (i == p ? old : 0);
      hi[i] = i < p ? old : m;
    }
    bool empty = false;
    for (unsigned i = 0; i < k; ++i)
      if (lo[i] >= hi[i]) empty = true;
    if (empty) continue;
    for (unsigned i = 0; i < k; ++i) idx[i] = lo[i];
    while (true) {
      if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
      unsigned pos = k;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < hi[pos]) {
          done = false;
          break;
        }
        idx[pos] = lo[pos];
      }
      if (done) break;
    }
  }
  return true;
}

}  // namespace

Subset sg(const FiniteAlgebra& alg, const Subset& seed) {
  Subset members = seed;
  std::vector<Elem> list = seed.elements();
  std::size_t old = 0;
  std::vector<Elem> args;
  while (old < list.size()) {
    const std::size_t m = list.size();
    for (const auto& op : alg.ops()) {
      const unsigned k = op.arity();
      args.resize(k);
      for_each_new_tuple(k, old, m, [&](const std::vector<std::size_t>& idx) {
        for (unsigned i = 0; i < k; ++i) args[i] = list[idx[i]];
        const Elem v = op(args);
        if (!members.contains(v)) {
          members.insert(v);
          list.push_back(v);
        }
        return true;
      });
    }
    old = m;
  }
  return members;
}

Subset sg(const FiniteAlgebra& alg, std::initializer_list<Elem> seed) {
  return sg(alg, Subset(alg.size(), seed));
}

bool is_subuniverse(const FiniteAlgebra& alg, const Subset& s) {
  const auto elems = s.elements();
  std::vector<Elem> args;
  for (const auto& op : alg.ops()) {
    const unsigned k = op.arity();
    args.resize(k);
    bool ok = detail::for_each_index_tuple(k, elems.size(), [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) args[i] = elems[idx[i]];
      return s.contains(op(args));
    });
    if (!ok) return false;
  }
  return true;
}

TupleClosure close_tuples(std::span<const FiniteAlgebra* const> factors, std::vector<Tuple> generators,
                          const ClosureOptions& options) {
  TupleClosure result;
  const std::size_t width = factors.size();
  if (width == 0) throw PreconditionViolated("close_tuples: no factors");
  const FiniteAlgebra& first = *factors[0];
  for (const auto* f : factors)
    if (f != &first && !f->same_signature(first)) throw SignatureMismatch("close_tuples: factor signatures differ");

  auto add = [&](Tuple t, TupleClosure::Origin origin) -> bool {
    if (result.lookup.count(t)) return true;
    if (result.tuples.size() >= options.cap) {
      result.complete = false;
      return false;
    }
    result.lookup.emplace(t, result.tuples.size());
    result.tuples.push_back(std::move(t));
    if (options.track_origin) result.origin.push_back(std::move(origin));
    if (options.stop_when && options.stop_when(result.tuples.back())) {
      result.complete = false;
      result.stopped = true;
      return false;
    }
    return true;
  };

  for (auto& g : generators) {
    if (g.size() != width) throw ArityMismatch("close_tuples: generator width mismatch");
    if (!add(std::move(g), {})) return result;
  }

  // Per-operation, per-coordinate table pointers.
  const std::size_t op_count = first.op_count();
  std::vector<std::vector<const Elem*>> tables(op_count, std::vector<const Elem*>(width));
  std::vector<std::size_t> bases(width);
  for (std::size_t c = 0; c < width; ++c) bases[c] = factors[c]->size();
  for (std::size_t o = 0; o < op_count; ++o)
    for (std::size_t c = 0; c < width; ++c) tables[o][c] = factors[c]->op(o).table().data();

  std::size_t old = 0;
  Tuple scratch(width);
  while (old < result.tuples.size()) {
    const std::size_t m = result.tuples.size();
    for (std::size_t o = 0; o < op_count; ++o) {
      const unsigned k = first.op(o).arity();
      bool keep_going = for_each_new_tuple(k, old, m, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t c = 0; c < width; ++c) {
          std::size_t flat = 0;
          for (unsigned i = 0; i < k; ++i) flat = flat * bases[c] + result.tuples[idx[i]][c];
          scratch[c] = tables[o][c][flat];
        }
        if (result.lookup.count(scratch)) return true;
        TupleClosure::Origin origin;
        if (options.track_origin) origin = {o, idx};
        return add(scratch, std::move(origin));
      });
      if (!keep_going) return result;
    }
    old = m;
  }
  return result;
}

TupleClosure close_power(const FiniteAlgebra& alg, std::size_t width, std::vector<Tuple> generators,
                         const ClosureOptions& options) {
  std::vector<const FiniteAlgebra*> factors(width, &alg);
  return close_tuples(factors, std::move(generators), options);
}

void next_closure(std::size_t n, const std::function<Subset(const Subset&)>& closure,
                  const std::function<bool(const Subset&)>& visit) {
  Subset current = closure(Subset(n));
  if (!current.empty() && !visit(current)) return;
  while (true) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const Elem ie = static_cast<Elem>(i);
      if (current.contains(ie)) {
        current.erase(ie);
        continue;
      }
      Subset candidate = current;
      candidate.insert(ie);
      Subset closed = closure(candidate);
      // Accept when the closure adds nothing below i.
      bool ok = true;
      for (Elem j = 0; j < ie; ++j)
        if (closed.contains(j) && !current.contains(j)) {
          ok = false;
          break;
        }
      if (ok) {
        current = closed;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    if (!visit(current)) return;
  }
}

SubuniverseList enumerate_subuniverses(const FiniteAlgebra& alg, bool proper_only, std::size_t size_cap) {
  if (alg.size() > size_cap) throw CapExceeded("enumerate_subuniverses: algebra " + alg.name() + " too large", size_cap);
  SubuniverseList out;
  std::vector<Subset> proper;
  next_closure(
      alg.size(), [&](const Subset& s) { return sg(alg, s); },
      [&](const Subset& s) {
        const bool is_full = s.is_full();
        if (!is_full) proper.push_back(s);
        if (!(proper_only && is_full)) out.subuniverses.push_back(s);
        return true;
      });
  UnionFind uf(alg.size());
  for (const auto& s : proper) {
    const auto elems = s.elements();
    for (std::size_t i = 1; i < elems.size(); ++i) uf.unite(elems[0], elems[i]);
  }
  out.proper_hypergraph_connected = uf.to_partition().block_count() <= 1;
  return out;
}

std::string subset_label(const Subset& s) {
  std::ostringstream os;
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ',';
    os << elems[i];
  }
  return os.str();
}

FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const Subset& universe) {
  if (universe.empty() || !is_subuniverse(alg, universe))
    throw NotClosed(alg.name() + ": " + universe.to_string() + " is not a subuniverse");
  const auto elems = universe.elements();
  std::vector<Elem> index(alg.size(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elem>(i);
  const std::size_t m = elems.size();
  std::vector<OperationTable> ops;
  for (const auto& op : alg.ops()) {
    const unsigned k = op.arity();
    std::vector<Elem> table(int_pow(m, k));
    std::vector<Elem> args(k);
    std::size_t flat = 0;
    detail::for_each_index_tuple(k, m, [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) args[i] = elems[idx[i]];
      table[flat++] = index[op(args)];
      return true;
    });
    ops.emplace_back(op.symbol(), k, std::move(table));
  }
  return FiniteAlgebra(alg.name() + "@sub(" + subset_label(universe) + ")", m, std::move(ops));
}

FiniteAlgebra quotient(const FiniteAlgebra& alg, const Partition& congruence) {
  if (congruence.size() != alg.size() || !congruence.is_congruence(alg))
    throw NotACongruence(alg.name() + ": " + congruence.to_string() + " is not a congruence");
  const auto reps = congruence.representatives();
  const std::size_t m = reps.size();
  std::vector<OperationTable> ops;
  for (const auto& op : alg.ops()) {
    const unsigned k = op.arity();
    std::vector<Elem> table(int_pow(m, k));
    std::vector<Elem> args(k);
    std::size_t flat = 0;
    detail::for_each_index_tuple(k, m, [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) args[i] = reps[idx[i]];
      table[flat++] = static_cast<Elem>(congruence.block(op(args)));
      return true;
    });
    ops.emplace_back(op.symbol(), k, std::move(table));
  }
  return FiniteAlgebra(alg.name() + "@quo(" + congruence.to_string() + ")", m, std::move(ops));
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.same_signature(b)) throw SignatureMismatch(a.name() + " and " + b.name() + " have different signatures");
  const std::size_t nb = b.size();
  const std::size_t m = a.size() * nb;
  std::vector<OperationTable> ops;
  for (std::size_t o = 0; o < a.op_count(); ++o) {
    const auto& opa = a.op(o);
    const auto& opb = b.op(o);
    const unsigned k = opa.arity();
    std::vector<Elem> table(int_pow(m, k));
    std::vector<Elem> left(k), right(k);
    std::size_t flat = 0;
    detail::for_each_index_tuple(k, m, [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) {
        left[i] = static_cast<Elem>(idx[i] / nb);
        right[i] = static_cast<Elem>(idx[i] % nb);
      }
      table[flat++] = static_cast<Elem>(opa(left) * nb + opb(right));
      return true;
    });
    ops.emplace_back(opa.symbol(), k, std::move(table));
  }
  return FiniteAlgebra(a.name() + "*" + b.name(), m, std::move(ops));
}

FiniteAlgebra power(const FiniteAlgebra& a, unsigned k) {
  if (k == 0) throw PreconditionViolated("power: exponent must be positive");
  FiniteAlgebra result = a;
  for (unsigned i = 1; i < k; ++i) result = product(result, a);
  return result.renamed(a.name() + "^" + std::to_string(k));
}

FiniteAlgebra derive_algebra(const FiniteAlgebra& alg, const Derivation& how) {
  return std::visit(
      [&](const auto& d) -> FiniteAlgebra {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, SubalgebraOf>) return subalgebra(alg, d.universe);
        else if constexpr (std::is_same_v<T, QuotientBy>) return quotient(alg, d.congruence);
        else if constexpr (std::is_same_v<T, ProductWith>) return product(alg, *d.other);
        else return power(alg, d.exponent);
      },
      how);
}

}  // namespace taylor
