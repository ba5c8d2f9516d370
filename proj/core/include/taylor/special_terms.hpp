#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/subset.hpp"
#include "taylor/term.hpp"

namespace taylor {

/// Least k with t_k(x, t_k(x,y)) = t_k(x,y), where t_1 = t and
/// t_{i+1}(x,y) = t(x, t_i(x,y)). Returns t_k and sets `power`.
TermOperation idempotent_power(const TermOperation& t, unsigned& power, unsigned max_power = 100000);

struct UniversalMeet {
  TermOperation f;
  TermOperation cyclic;  // the witness c the construction started from
  unsigned t_power = 0;
  unsigned q_power = 0;
  bool left_absorptive = false;  // f(x, f(x,y)) = f(x,y)
  bool right_absorptive = false;  // f(f(x,y), x) = f(x,y)
};

/// t(x,y) = c(x,y,...,y); t_k; q(x,y) = t_k(x, t_k(y,x)); f = q_k.
UniversalMeet universal_meet(const FiniteAlgebra& alg, std::size_t cap = kDefaultClosureCap);
/// Same construction from a given cyclic operation carrying a term.
UniversalMeet universal_meet_from(const TermOperation& cyclic);

struct ConditionReport {
  bool identity_holds = false;  // identity (b)
  bool quotient_condition = false;  // condition (a)
  bool holds() const noexcept { return identity_holds && quotient_condition; }
  std::string failure;
};

struct ConditionChecks {
  ConditionReport majority;
  ConditionReport minority;
};

/// Majority and minority conditions of a ternary term operation.
ConditionChecks condition_checks(const FiniteAlgebra& alg, const TermOperation& t,
                                 std::size_t congruence_cap = 10, std::size_t cap = kDefaultClosureCap);

bool is_majority_table(const TermOperation& t);
bool is_semilattice_on(const TermOperation& t, Elem a, Elem b);  // t acts on {a,b} with absorbing b

struct LocalStructure {
  Tristate has_majority_term = Tristate::Unknown;
  std::vector<std::pair<Elem, Elem>> semilattice_pairs;  // (a,b) with absorbing b
};

/// Majority term of the subalgebra on B and two-element semilattice pairs in B.
LocalStructure local_structure(const FiniteAlgebra& alg, const Subset& B, std::size_t cap = kDefaultClosureCap);

/// Some binary term acts on {a,b} as a semilattice with absorbing element b.
/// Decided exactly in F(2) of Sg(a,b).
Tristate has_semilattice_term(const FiniteAlgebra& alg, Elem a, Elem b, std::size_t cap = kDefaultClosureCap);

}  // namespace taylor
