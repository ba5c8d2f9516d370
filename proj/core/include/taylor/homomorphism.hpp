#pragma once

#include <cstddef>
#include <vector>

#include "taylor/algebra.hpp"

namespace taylor {

struct Homomorphism {
  const FiniteAlgebra* source = nullptr;
  const FiniteAlgebra* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool is_surjective() const;
};

/// Checks that `map` commutes with every operation.
bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const std::vector<Elem>& map);

/// All homomorphisms src -> dst in lexicographic order of their value vectors.
/// Backtracks over element images and propagates forced values through the
/// operations. Throws SignatureMismatch, or CapExceeded after `node_cap`
/// search nodes.
std::vector<Homomorphism> homomorphisms_between(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                                std::size_t node_cap = 1000000);

}  // namespace taylor
