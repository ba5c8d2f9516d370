#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/closure.hpp"
#include "taylor/congruence.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/relation.hpp"
#include "taylor/subset.hpp"
#include "taylor/term.hpp"

namespace taylor {

/// Scope is strictly ascending; tuples are sorted and distinct, one value per
/// scope variable.
struct Constraint {
  std::vector<std::size_t> scope;
  std::vector<Tuple> tuples;

  bool contains(const Tuple& t) const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

using Assignment = std::vector<Elem>;

/// Multisorted CSP instance. Constraints on the same variable set are
/// intersected as they are added.
class Instance {
 public:
  std::size_t add_variable(std::string name, FiniteAlgebra domain);
  /// Reorders the scope ascending, drops repeated variables (keeping only
  /// tuples that agree on them) and intersects with any constraint on the same
  /// scope. Throws ArityMismatch or PreconditionViolated on malformed input.
  void add_constraint(std::vector<std::size_t> scope, std::vector<Tuple> tuples);

  std::size_t variable_count() const noexcept { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  const FiniteAlgebra& domain(std::size_t v) const { return domains_[v]; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  /// Index of the constraint on exactly this ascending scope, or constraints().size().
  std::size_t find_constraint(const std::vector<std::size_t>& scope) const;
  std::size_t find_variable(const std::string& name) const;  // variable_count() when absent

  bool satisfies(const Assignment& a) const;
  /// Product of the domain sizes, saturating at SIZE_MAX.
  std::size_t search_space() const;
  /// Every constraint projects onto each scope variable's full domain.
  bool is_subdirect() const;
  /// Every constraint relation is a subuniverse of the product of its domains.
  bool relations_compatible() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<FiniteAlgebra> domains_;
  std::vector<Constraint> constraints_;
};

struct SolveResult {
  bool satisfiable = false;
  std::vector<Assignment> solutions;  // lexicographic; only the first unless all were requested
  std::size_t nodes = 0;
};

/// Exhaustive backtracking in variable order. Throws LimitExceeded when the
/// search space exceeds `limit`.
SolveResult brute_force_solve(const Instance& inst, bool all_solutions = true, std::size_t limit = 1000000);

struct MinimizeResult {
  Instance instance;
  bool unsat = false;
  std::size_t rounds = 0;
};

/// (k,l)-minimality: one constraint per variable set of size <= l, initialized
/// from the constraints inside it, then projections onto sets of size <= k
/// propagated to a fixpoint. Preserves the solution set.
MinimizeResult kl_minimize(const Instance& inst, unsigned k = 2, unsigned l = 3);

bool is_kl_minimal(const Instance& inst, unsigned k, unsigned l);

/// Replaces each domain by the subalgebra on its unary constraint. Throws
/// NotClosed when a unary relation is not a subuniverse.
Instance restrict_to_unary(const Instance& inst);

struct ConsistentMapSet {
  std::vector<UnaryMap> maps;  // one per variable

  static ConsistentMapSet identity(const Instance& inst);
  bool is_retractive() const;
};

struct ConsistentMapsResult {
  bool consistent = false;
  bool retractive = false;
  std::optional<Instance> retracted;  // apply mode only
};

/// Checks that the maps are consistent: each p_i is a unary polynomial of its domain
/// and maps every constraint tuple into the relation. With `apply`, also
/// builds the retraction p(P). Throws NotPolynomial, NotConsistent or
/// NotRetractive.
ConsistentMapsResult consistent_maps(const Instance& inst, const ConsistentMapSet& p, bool apply = false);

/// The algebra on p(A) with operations p o g, elements renumbered ascending.
FiniteAlgebra polynomial_retract(const FiniteAlgebra& alg, const UnaryMap& p);

/// Replaces domains by quotients and relations by blockwise images. Empty
/// optionals leave the variable unchanged.
Instance quotient_instance(const Instance& inst, const std::vector<std::optional<Partition>>& congruences);

struct SiDecomposition {
  Instance instance;
  /// origin[v] = (original variable, congruence it was factored by).
  std::vector<std::pair<std::size_t, Partition>> origin;
};

/// Birkhoff factoring: each non-SI domain with at least two elements is split
/// into SI quotients by meet-irreducible congruences with zero meet, in
/// variable order, plus a constraint tying the factors to the original domain.
SiDecomposition si_decompose(const Instance& inst, std::size_t congruence_cap = 10);

/// Lifts a solution of the decomposed instance back to the original variables.
Assignment si_lift(const Instance& original, const SiDecomposition& d, const Assignment& solution);

struct DomainAnalysis {
  bool subdirectly_irreducible = false;
  std::optional<Partition> monolith;
  bool large_centralizer = false;  // SI and C(1, monolith; 0)
  bool has_s_edge = false;
};

std::vector<DomainAnalysis> large_centralizer_analysis(const Instance& inst, std::size_t congruence_cap = 10);

/// Solution oracle for P/mu: a solution whose value at `variable` is `point`
/// (an element of the quotient domain), or nullopt.
using QuotientSolutions = std::function<std::optional<Assignment>(std::size_t variable, Elem point)>;

/// Oracle answering by brute force on `quotient`.
QuotientSolutions brute_force_oracle(const Instance& quotient, std::size_t limit = 1000000);

struct RetractionResult {
  ConsistentMapSet maps;
  bool vacuous = false;  // no large-centralizer domain has an s-edge
  std::vector<std::size_t> shrunk;  // large-centralizer domains with s-edges
  std::vector<std::pair<Elem, Elem>> chosen_edges;  // a_i ->s b_i, parallel to `shrunk`
  std::vector<unsigned> powers;  // least idempotent power of p'_j per variable
  bool consistent = false;
  bool retractive = false;
  bool strictly_shrinks = false;
  std::string failure;  // empty when every certificate holds
};

/// The retraction construction for SI instances with (1,1)-minimal constraints.
/// `targets[i]`, when set for a large-centralizer domain, is a proper binary
/// absorbing subuniverse B_i; the chosen s-edge then ends in B_i and p_i maps
/// into B_i. Throws HypothesisUnmet when a hypothesis fails or the oracle lacks
/// a required solution.
RetractionResult largecentred_retraction(const Instance& inst, const QuotientSolutions& quotient_solutions,
                                         const std::vector<std::optional<Subset>>& targets = {},
                                         std::size_t cap = kDefaultClosureCap);

/// Congruences factoring every large-centralizer domain by its monolith.
std::vector<std::optional<Partition>> monolith_factors(const Instance& inst);

struct MarotiWitness {
  TermOperation t;
  Subset C;  // c with x -> t(x,c) a permutation
  Subset generated;  // Sg(C), proper
};

/// Searches the complete F(2) for a binary t whose every t_b is a
/// non-surjective retraction and whose permutation columns generate a proper
/// subuniverse. Throws CapExceeded if F(2) is incomplete.
std::optional<MarotiWitness> maroti_witness(const FiniteAlgebra& alg, std::size_t cap = kDefaultClosureCap);

struct SEdgeInjectionReport {
  bool unique_target = false;  // each b in B has exactly one c in C with b ->s c
  bool injective = false;
  bool meet_agrees = false;  // f(b,c) is that element for every b, c
  std::vector<std::pair<Elem, Elem>> edges;  // s-edges from B into C
  std::string failure;
  bool holds() const noexcept { return unique_target && injective && meet_agrees; }
};

/// Checks the hypotheses (congruences, affine beta-blocks, C(eta,beta;0),
/// B ->s C in alg/beta, B and C in one eta-block) and then the conclusions
/// exhaustively. Throws HypothesisUnmet naming the failed hypothesis.
SEdgeInjectionReport sedge_injection_check(const FiniteAlgebra& alg, const Partition& beta, const Partition& eta,
                                           const Subset& B, const Subset& C, std::size_t cap = kDefaultClosureCap);

}  // namespace taylor
