#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/relation.hpp"

namespace taylor {

/// A unary map on {0..n-1} as a value vector.
using UnaryMap = std::vector<Elem>;

/// Sg of {identity, constants} inside A^A under pointwise basic operations,
/// sorted lexicographically. Throws CapExceeded past `cap` maps.
std::vector<UnaryMap> unary_polynomials(const FiniteAlgebra& alg, std::size_t cap = 200000);

bool is_unary_polynomial(const FiniteAlgebra& alg, const UnaryMap& p, std::size_t cap = 200000);

/// Cg(a,b) from a precomputed polynomial list.
Partition principal_congruence(std::size_t n, const std::vector<UnaryMap>& polys, Elem a, Elem b);
Partition principal_congruence(const FiniteAlgebra& alg, Elem a, Elem b);

/// Least congruence containing all given pairs.
Partition congruence_generated(const FiniteAlgebra& alg, const std::vector<std::pair<Elem, Elem>>& pairs);

struct PrincipalCongruence {
  Elem a, b;
  Partition theta;
};

struct CongruenceReport {
  std::vector<PrincipalCongruence> principal;  // a < b, ascending
  std::vector<Partition> all;  // sorted by block count descending, then labels
  std::optional<Partition> monolith;
  bool subdirectly_irreducible = false;
};

/// Throws CapExceeded when alg.size() > size_cap.
CongruenceReport congruences(const FiniteAlgebra& alg, std::size_t size_cap = 10);

struct LinkStructure {
  BinaryRelation tol;
  Partition lk;
  bool tol_connected = false;
  /// Some element on the other side is related to every element on side i.
  bool full_row_exists = false;
};

/// Link tolerance and congruence of a subdirect R on coordinate i (1 or 2).
LinkStructure link_structure(const BinaryRelation& r, unsigned i);

}  // namespace taylor
