#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <span>
#include <variant>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/relation.hpp"
#include "taylor/subset.hpp"

namespace taylor {

using Tuple = std::vector<Elem>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Elem e : t) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

/// Least subuniverse of `alg` containing `seed`.
Subset sg(const FiniteAlgebra& alg, const Subset& seed);
Subset sg(const FiniteAlgebra& alg, std::initializer_list<Elem> seed);
bool is_subuniverse(const FiniteAlgebra& alg, const Subset& s);

struct ClosureOptions {
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  bool track_origin = false;
  /// Checked on every tuple as it is added; returning true stops the closure.
  std::function<bool(const Tuple&)> stop_when;
};

/// Result of closing a set of tuples under coordinatewise basic operations.
struct TupleClosure {
  static constexpr std::size_t kGenerator = std::numeric_limits<std::size_t>::max();
  struct Origin {
    std::size_t op = kGenerator;  // kGenerator for seeds, else operation index
    std::vector<std::size_t> args;  // indices into `tuples`
  };

  std::vector<Tuple> tuples;  // discovery order
  std::vector<Origin> origin;  // filled when ClosureOptions::track_origin
  bool complete = true;  // false when the cap or stop_when cut the closure short
  bool stopped = false;  // stop_when fired

  bool contains(const Tuple& t) const { return lookup.count(t) != 0; }
  std::size_t index_of(const Tuple& t) const {  // tuples.size() when absent
    auto it = lookup.find(t);
    return it == lookup.end() ? tuples.size() : it->second;
  }

  std::unordered_map<Tuple, std::size_t, TupleHash> lookup;
};

/// Closes `generators` inside the product of `factors` (which must share a
/// signature) under all basic operations, applied coordinatewise.
TupleClosure close_tuples(std::span<const FiniteAlgebra* const> factors, std::vector<Tuple> generators,
                          const ClosureOptions& options = {});

/// Same as close_tuples with every factor equal to `alg`.
TupleClosure close_power(const FiniteAlgebra& alg, std::size_t width, std::vector<Tuple> generators,
                         const ClosureOptions& options = {});

struct SubuniverseList {
  std::vector<Subset> subuniverses;  // lectic order, nonempty only
  bool proper_hypergraph_connected = true;
};

/// All nonempty subuniverses by lectic closed-set enumeration.
/// Throws CapExceeded when alg.size() > size_cap.
SubuniverseList enumerate_subuniverses(const FiniteAlgebra& alg, bool proper_only, std::size_t size_cap = 8);

/// Calls visit(closed) for each nonempty closed set in lectic order; visit may
/// return false to stop. Uses `closure` as the closure operator on {0..n-1}.
void next_closure(std::size_t n, const std::function<Subset(const Subset&)>& closure,
                  const std::function<bool(const Subset&)>& visit);

// Derived algebras. Element numbering is canonical: subalgebra elements in
// ascending original order, quotient classes by ascending least member,
// product pairs lexicographically ((a,b) -> a*|B| + b).
FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const Subset& universe);
FiniteAlgebra quotient(const FiniteAlgebra& alg, const Partition& congruence);
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);
FiniteAlgebra power(const FiniteAlgebra& a, unsigned k);

struct SubalgebraOf { Subset universe; };
struct QuotientBy { Partition congruence; };
struct ProductWith { const FiniteAlgebra* other; };
struct PowerOf { unsigned exponent; };
using Derivation = std::variant<SubalgebraOf, QuotientBy, ProductWith, PowerOf>;

FiniteAlgebra derive_algebra(const FiniteAlgebra& alg, const Derivation& how);

std::string subset_label(const Subset& s);

}  // namespace taylor
