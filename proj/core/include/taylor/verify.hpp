#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/edges.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/relation.hpp"
#include "taylor/term.hpp"

namespace taylor {

enum class AxiomStatus { Pass, Fail, Skipped, Reported };
std::string to_string(AxiomStatus s);

struct AxiomCheck {
  std::string name;
  AxiomStatus status = AxiomStatus::Pass;
  std::string detail;  // counterexample, skip reason or discrepancy
  std::size_t instances = 0;  // premises examined
  std::size_t undecided = 0;  // instances lost to caps
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  /// No check failed or was skipped.
  bool all_pass() const;
  bool any_fail() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// An algebra together with the edge digraphs under test (possibly edited).
struct EdgedAlgebra {
  FiniteAlgebra algebra;
  EdgeGraph edges;
};

struct VerifyBudget {
  /// Products up to this size get every subuniverse enumerated.
  std::size_t lectic_product_cap = 16;
  std::size_t tuple_cap = 200000;
  std::size_t hom_node_cap = 1000000;
  std::size_t closure_cap = kDefaultClosureCap;
};

/// Edges for every algebra, computed with default settings.
std::vector<EdgedAlgebra> with_edges(const std::vector<FiniteAlgebra>& algebras, const EdgeConfig& config = {});

/// Base, Stronger Base, Homomorphism and Relational Axioms over the catalog.
/// Axioms relating two or three algebras range over members sharing a signature.
AxiomReport verify_edge_axioms(const std::vector<EdgedAlgebra>& catalog, const VerifyBudget& budget = {});

/// Structural consequences of the Edge Axioms on a single algebra. Subset-wide
/// checks are skipped above `subset_cap` elements.
AxiomReport verify_edge_theorems(const FiniteAlgebra& alg, const EdgeGraph& edges, std::size_t subset_cap = 6,
                                 std::size_t cap = kDefaultClosureCap);

/// Least tolerance containing `pairs`: the subuniverse of A^2 generated by the
/// diagonal and the pairs in both orders.
BinaryRelation tolerance_generated(const FiniteAlgebra& alg, const std::vector<std::pair<Elem, Elem>>& pairs);

/// Given a chain c_0..c_k consecutive in the tolerance S and c_i ->*_s d_i,
/// returns d_0..d_k with c_j ->*_s d_j and consecutive d's in S, built by
/// e_{j,l+1} = f(e_{j,l}, e_{i,l+1}) along a shortest s-path from c_i to d_i.
/// Throws PreconditionViolated on bad input, CrossCheckFailed if a conclusion fails.
std::vector<Elem> shift_tolerance_chain(const FiniteAlgebra& alg, const EdgeGraph& edges, const BinaryRelation& S,
                                        const std::vector<Elem>& chain, std::size_t i, Elem d_i,
                                        const TermOperation& f);

}  // namespace taylor
