#include "taylor/special_terms.hpp"

#include <sstream>

#include "taylor/centralizer.hpp"
#include "taylor/closure.hpp"
#include "taylor/congruence.hpp"
#include "taylor/error.hpp"

namespace taylor {

namespace {

TermOperation proj2(std::size_t n, unsigned i) { return TermOperation::projection(n, 2, i); }

// s(x, u(x,y)) for binary s and u.
TermOperation nest_second(const TermOperation& s, const TermOperation& u) {
  return compose(s, {proj2(s.base(), 0), u});
}

}  // namespace

TermOperation idempotent_power(const TermOperation& t, unsigned& power, unsigned max_power) {
  if (t.arity() != 2) throw ArityMismatch("idempotent_power: binary operation expected");
  TermOperation current = t;
  for (unsigned k = 1; k <= max_power; ++k) {
    if (nest_second(current, current).table() == current.table()) {
      power = k;
      return current;
    }
    current = nest_second(t, current);
  }
  throw CapExceeded("idempotent_power: no idempotent power found", max_power);
}

UniversalMeet universal_meet_from(const TermOperation& c) {
  if (!c.is_cyclic()) throw NoCyclicWitness("universal_meet: operation is not cyclic");
  const std::size_t n = c.base();
  UniversalMeet out;
  out.cyclic = c;
  std::vector<TermOperation> args{proj2(n, 0)};
  for (unsigned i = 1; i < c.arity(); ++i) args.push_back(proj2(n, 1));
  const TermOperation t = compose(c, args);
  const TermOperation tk = idempotent_power(t, out.t_power);
  const TermOperation swapped = compose(tk, {proj2(n, 1), proj2(n, 0)});
  const TermOperation q = nest_second(tk, swapped);
  out.f = idempotent_power(q, out.q_power);
  const auto& f = out.f;
  out.left_absorptive = nest_second(f, f).table() == f.table();
  out.right_absorptive = compose(f, {f, proj2(n, 0)}).table() == f.table();
  return out;
}

UniversalMeet universal_meet(const FiniteAlgebra& alg, std::size_t cap) {
  auto report = taylor_report(alg, cap);
  if (report.has_taylor != Tristate::Yes) throw NoCyclicWitness(alg.name() + ": no cyclic term found");
  return universal_meet_from(*report.witness);
}

bool is_majority_table(const TermOperation& t) {
  if (t.arity() != 3) return false;
  for (Elem x = 0; x < t.base(); ++x)
    for (Elem y = 0; y < t.base(); ++y)
      if (t({x, x, y}) != x || t({x, y, x}) != x || t({y, x, x}) != x) return false;
  return true;
}

bool is_semilattice_on(const TermOperation& t, Elem a, Elem b) {
  return t.arity() == 2 && t({a, a}) == a && t({a, b}) == b && t({b, a}) == b && t({b, b}) == b;
}

namespace {

// Action of a term operation on the quotient of Sg(a,b) by theta, via
// representatives. `elems` lists Sg(a,b) in ascending order.
TermOperation quotient_action(const TermOperation& t, const std::vector<Elem>& elems, const Partition& theta) {
  const TermOperation on_b = t.restricted(elems);
  const auto reps = theta.representatives();
  const std::size_t m = reps.size();
  std::vector<Elem> table(int_pow(m, t.arity()));
  std::vector<Elem> args(t.arity());
  for (std::size_t flat = 0; flat < table.size(); ++flat) {
    std::size_t rest = flat;
    for (unsigned i = t.arity(); i-- > 0;) {
      args[i] = reps[rest % m];
      rest /= m;
    }
    table[flat] = static_cast<Elem>(theta.block(on_b(args)));
  }
  return TermOperation(t.arity(), m, std::move(table));
}

bool is_maltsev(const TermOperation& t) {
  for (Elem x = 0; x < t.base(); ++x)
    for (Elem y = 0; y < t.base(); ++y)
      if (t({x, y, y}) != x || t({y, y, x}) != x) return false;
  return true;
}

bool has_majority_term(const FiniteAlgebra& alg, std::size_t cap, bool& complete) {
  auto f3 = free_algebra(alg, 3, cap);
  complete = f3.complete;
  for (const auto& e : f3.elements)
    if (is_majority_table(e)) return true;
  return false;
}

}  // namespace

ConditionChecks condition_checks(const FiniteAlgebra& alg, const TermOperation& t, std::size_t congruence_cap,
                                 std::size_t cap) {
  if (t.arity() != 3 || t.base() != alg.size()) throw ArityMismatch("condition_checks: ternary operation on the algebra expected");
  ConditionChecks out;
  const std::size_t n = alg.size();
  auto tyy = [&](Elem x, Elem y) { return t({x, y, y}); };
  out.majority.identity_holds = true;
  out.minority.identity_holds = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem v = tyy(x, y);
      if (out.majority.identity_holds && t({x, v, v}) != v) {
        out.majority.identity_holds = false;
        out.majority.failure = "identity fails at x=" + std::to_string(x) + ", y=" + std::to_string(y);
      }
      if (out.minority.identity_holds && t({v, y, y}) != v) {
        out.minority.identity_holds = false;
        out.minority.failure = "identity fails at x=" + std::to_string(x) + ", y=" + std::to_string(y);
      }
    }
  out.majority.quotient_condition = true;
  out.minority.quotient_condition = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      const Subset sab = sg(alg, {a, b});
      const auto elems = sab.elements();
      const FiniteAlgebra sub = subalgebra(alg, sab);
      for (const auto& theta : congruences(sub, congruence_cap).all) {
        if (theta.block_count() < 2) continue;
        const FiniteAlgebra quo = quotient(sub, theta);
        const TermOperation action = quotient_action(t, elems, theta);
        std::ostringstream where;
        where << "Sg(" << a << "," << b << ")/" << theta.to_string();
        if (theta.block_count() == 2 && out.majority.quotient_condition) {
          bool complete = true;
          if (has_majority_term(quo, cap, complete) && !is_majority_table(action)) {
            out.majority.quotient_condition = false;
            if (out.majority.failure.empty()) out.majority.failure = "not majority on " + where.str();
          }
        }
        if (out.minority.quotient_condition && is_affine(quo, cap) && !is_maltsev(action)) {
          out.minority.quotient_condition = false;
          if (out.minority.failure.empty()) out.minority.failure = "not x-y+z on " + where.str();
        }
      }
    }
  return out;
}

Tristate has_semilattice_term(const FiniteAlgebra& alg, Elem a, Elem b, std::size_t cap) {
  if (a == b) return Tristate::No;
  const Subset sab = sg(alg, {a, b});
  const auto elems = sab.elements();
  const FiniteAlgebra sub = subalgebra(alg, sab);
  Elem la = 0, lb = 0;
  for (Elem i = 0; i < elems.size(); ++i) {
    if (elems[i] == a) la = i;
    if (elems[i] == b) lb = i;
  }
  auto f2 = free_algebra(sub, 2, cap);
  for (const auto& e : f2.elements)
    if (e({la, lb}) == lb && e({lb, la}) == lb) return Tristate::Yes;
  return f2.complete ? Tristate::No : Tristate::Unknown;
}

LocalStructure local_structure(const FiniteAlgebra& alg, const Subset& B, std::size_t cap) {
  if (!is_subuniverse(alg, B) || B.empty()) throw NotClosed("local_structure: " + B.to_string() + " is not a subuniverse");
  LocalStructure out;
  const FiniteAlgebra sub = subalgebra(alg, B);
  bool complete = true;
  if (has_majority_term(sub, cap, complete))
    out.has_majority_term = Tristate::Yes;
  else
    out.has_majority_term = complete ? Tristate::No : Tristate::Unknown;
  const auto elems = B.elements();
  for (Elem a : elems)
    for (Elem b : elems) {
      if (a == b) continue;
      const Subset pair(alg.size(), {a, b});
      if (!is_subuniverse(alg, pair)) continue;
      if (has_semilattice_term(alg, a, b, cap) == Tristate::Yes) out.semilattice_pairs.emplace_back(a, b);
    }
  return out;
}

}  // namespace taylor
