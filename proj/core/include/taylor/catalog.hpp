#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"

namespace taylor {

/// Two-element meet semilattice, 0 absorbing. Operation "meet".
FiniteAlgebra semilattice2();
/// Z2 with the ternary minority x+y+z. Operation "minority".
FiniteAlgebra z2_minority();
/// Two-element majority algebra. Operation "maj".
FiniteAlgebra majority2();
/// The four-element cyclic algebra A1 on {0,1,2,3}. Operation "f".
FiniteAlgebra a1();

/// The four built-in seeds in the order above.
std::vector<FiniteAlgebra> builtin_catalog();

/// Isomorphism-invariant key: signature plus the lexicographically least
/// relabelled table concatenation. Throws CapExceeded above `size_cap`.
std::string canonical_form(const FiniteAlgebra& alg, std::size_t size_cap = 8);
bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct TemplateMember {
  FiniteAlgebra algebra;
  std::size_t seed = 0;  // index of the seed it was derived from
  std::size_t group = 0;  // signature group
  std::string canonical;
};

/// Isomorphism types reachable from the seeds by subalgebras and quotients.
class Template {
 public:
  /// Breadth-first HS closure; members keep the name of their first derivation.
  static Template hs_closure(const std::vector<FiniteAlgebra>& seeds, std::size_t size_cap = 8);

  const std::vector<TemplateMember>& members() const noexcept { return members_; }
  std::size_t group_count() const noexcept { return group_count_; }
  std::vector<std::size_t> group(std::size_t g) const;  // member indices
  /// Index of a member isomorphic to `alg`, or members().size().
  std::size_t find(const FiniteAlgebra& alg) const;
  /// Index of the member with this name, or members().size().
  std::size_t find_name(const std::string& name) const;

 private:
  std::vector<TemplateMember> members_;
  std::size_t group_count_ = 0;
};

}  // namespace taylor
