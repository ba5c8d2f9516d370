#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/term.hpp"

namespace taylor {

inline constexpr std::size_t kDefaultClosureCap = 20000;

/// The k-generated free algebra of the variety of `base`, realized as the
/// k-ary term operations of `base`.
struct FreeAlgebra {
  const FiniteAlgebra* base = nullptr;
  unsigned generators = 0;
  std::vector<TermOperation> elements;  // ascending by table
  bool complete = false;

  std::size_t size() const noexcept { return elements.size(); }
  /// Index of the element with this table, or size() when absent.
  std::size_t find(const std::vector<Elem>& table) const;
  bool contains(const std::vector<Elem>& table) const { return find(table) != size(); }
};

/// Closure of the k projections under the basic operations. A cap overflow
/// returns the partial set with complete == false.
FreeAlgebra free_algebra(const FiniteAlgebra& alg, unsigned k, std::size_t cap = kDefaultClosureCap);

struct CyclicSearch {
  std::vector<TermOperation> operations;  // ascending by table
  bool complete = false;  // the whole F(p) was examined
};

/// Cyclic elements of F(p). With first_only, stops at the first one found
/// during closure.
CyclicSearch cyclic_operations(const FiniteAlgebra& alg, unsigned p, std::size_t cap = kDefaultClosureCap,
                               bool first_only = false);

enum class Tristate { No, Yes, Unknown };
std::string to_string(Tristate t);

struct TaylorReport {
  Tristate has_taylor = Tristate::Unknown;
  std::optional<TermOperation> witness;
  unsigned witness_arity = 0;
  std::vector<unsigned> arities_checked;
  /// Some found cyclic operation generates every basic operation at its arity.
  Tristate minimal_taylor_bounded = Tristate::Unknown;
};

std::size_t least_prime_above(std::size_t n);

/// Searches arities 2..p, p the least prime above |A|, and stops at the first
/// cyclic witness.
TaylorReport taylor_report(const FiniteAlgebra& alg, std::size_t cap = kDefaultClosureCap);

/// Whether the clone generated by `c` alone contains every basic operation.
Tristate generates_basic_operations(const FiniteAlgebra& alg, const TermOperation& c,
                                    std::size_t cap = kDefaultClosureCap);

}  // namespace taylor
