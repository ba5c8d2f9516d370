#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/closure.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/relation.hpp"

namespace taylor {

/// C(alpha, beta; 0) by the 2x2 matrix method. Matrices are stored as
/// (top-left, top-right, bottom-left, bottom-right) in A^4.
bool centralizer_condition(const FiniteAlgebra& alg, const Partition& alpha, const Partition& beta);

struct AffineReport {
  bool is_abelian = false;
  Tristate has_taylor = Tristate::Unknown;
  bool is_affine = false;
  /// Only set when a ternary relation was supplied.
  std::optional<bool> r3_criterion;
  std::string r3_failure;  // first failing section, empty on success
};

/// `r3` holds triples of a compatible ternary relation; NotCompatible otherwise.
AffineReport affine_checks(const FiniteAlgebra& alg, const std::optional<std::vector<Tuple>>& r3 = std::nullopt,
                           std::size_t cap = kDefaultClosureCap);

/// Abelian and Taylor; the cheap entry point for callers that only need the flag.
bool is_affine(const FiniteAlgebra& alg, std::size_t cap = kDefaultClosureCap);

}  // namespace taylor
