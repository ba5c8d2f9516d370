#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/subset.hpp"

namespace taylor {

enum class EdgeStatus : std::uint8_t { Absent, Present, Unknown };
enum class Flavor { S, AS, SM, ASM };
std::string to_string(Flavor f);

struct EdgeConfig {
  /// Cyclic arities to quantify over; empty means the least prime above |Sg(a,b)|.
  std::vector<unsigned> arities;
  std::size_t closure_cap = kDefaultClosureCap;
  /// Compare every s-edge with the two-element semilattice test.
  bool cross_check_sedges = true;
};

struct PairProvenance {
  Elem a = 0, b = 0;
  std::size_t subalgebra_size = 0;
  std::vector<unsigned> arities;
  bool complete = true;
};

/// The as- and sm-digraphs of one algebra. Diagonal entries are loops, always
/// present; component analysis ignores them.
class EdgeGraph {
 public:
  EdgeGraph() = default;
  EdgeGraph(std::string algebra, std::size_t n);

  const std::string& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return n_; }

  EdgeStatus as_status(Elem a, Elem b) const { return as_[a * n_ + b]; }
  EdgeStatus sm_status(Elem a, Elem b) const { return sm_[a * n_ + b]; }
  void set_as(Elem a, Elem b, EdgeStatus s) { as_[a * n_ + b] = s; }
  void set_sm(Elem a, Elem b, EdgeStatus s) { sm_[a * n_ + b] = s; }

  bool as(Elem a, Elem b) const { return as_status(a, b) == EdgeStatus::Present; }
  bool sm(Elem a, Elem b) const { return sm_status(a, b) == EdgeStatus::Present; }
  bool s(Elem a, Elem b) const { return as(a, b) && sm(a, b); }
  bool asm_(Elem a, Elem b) const { return as(a, b) || sm(a, b); }
  bool has(Flavor f, Elem a, Elem b) const;

  /// Non-loop edges of the given flavor, ascending.
  std::vector<std::pair<Elem, Elem>> edges(Flavor f) const;
  /// Ordered pairs with an Unknown status in either digraph.
  std::vector<std::pair<Elem, Elem>> unknown_pairs() const;
  bool has_unknowns() const { return !unknown_pairs().empty(); }

  std::vector<PairProvenance> provenance;

  friend bool operator==(const EdgeGraph& x, const EdgeGraph& y) {
    return x.n_ == y.n_ && x.as_ == y.as_ && x.sm_ == y.sm_;
  }

 private:
  std::string algebra_;
  std::size_t n_ = 0;
  std::vector<EdgeStatus> as_, sm_;
};

/// Edges per ordered pair, computed inside Sg(a,b). Throws SEdgeMismatch when
/// an s-edge disagrees with the two-element semilattice test.
EdgeGraph compute_edges(const FiniteAlgebra& alg, const EdgeConfig& config = {});

struct ComponentDecomposition {
  Flavor flavor = Flavor::ASM;
  std::vector<std::vector<Elem>> components;  // strong components, numbered by least element
  std::vector<std::size_t> component_of;
  std::vector<std::pair<std::size_t, std::size_t>> condensation;  // component edges, ascending
  std::vector<std::size_t> sinks;
  std::vector<std::size_t> sources;
  Subset min;  // union of sink components
  std::vector<std::vector<Elem>> weak_components;
};

ComponentDecomposition component_analysis(const EdgeGraph& edges, Flavor flavor);

/// Reflexive-transitive closure of the flavor's digraph as an n*n matrix.
std::vector<std::uint8_t> reachability(const EdgeGraph& edges, Flavor flavor);

/// No edge of the flavor leaves B.
bool is_closed(const EdgeGraph& edges, Flavor flavor, const Subset& B);

}  // namespace taylor
