#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/subset.hpp"

namespace taylor {

/// Bit matrix relation between {0..rows-1} and {0..cols-1}.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  BinaryRelation(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  static BinaryRelation diagonal(std::size_t n);
  static BinaryRelation full(std::size_t rows, std::size_t cols);
  static BinaryRelation from_pairs(std::size_t rows, std::size_t cols,
                                   const std::vector<std::pair<Elem, Elem>>& pairs);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool contains(Elem a, Elem b) const { return bits_[a * cols_ + b] != 0; }
  void insert(Elem a, Elem b) { bits_[a * cols_ + b] = 1; }
  void erase(Elem a, Elem b) { bits_[a * cols_ + b] = 0; }
  std::size_t count() const;
  std::vector<std::pair<Elem, Elem>> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  /// Closed under every operation of `left` x `right` applied coordinatewise.
  bool is_compatible(const FiniteAlgebra& left, const FiniteAlgebra& right) const;
  bool is_tolerance(const FiniteAlgebra& alg) const {
    return rows_ == alg.size() && cols_ == alg.size() && is_reflexive() && is_symmetric() && is_compatible(alg, alg);
  }
  /// Every row and every column is hit.
  bool is_subdirect() const;

  BinaryRelation transitive_closure() const;
  BinaryRelation converse() const;
  /// Right neighbours {b : (a,b) in R}.
  Subset right_neighbors(Elem a) const;
  /// Left neighbours {a : (a,b) in R}.
  Subset left_neighbors(Elem b) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<unsigned char> bits_;
};

/// Partition of {0..n-1}; blocks are numbered in order of their least element.
class Partition {
 public:
  Partition() = default;
  /// Accepts any block labelling and canonicalizes it.
  explicit Partition(std::vector<std::size_t> block_of);

  static Partition discrete(std::size_t n);  // 0_A
  static Partition indiscrete(std::size_t n);  // 1_A
  static Partition from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs);
  static Partition from_relation(const BinaryRelation& equivalence_or_generator);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block(Elem e) const { return block_of_[e]; }
  const std::vector<std::size_t>& labels() const noexcept { return block_of_; }
  bool related(Elem a, Elem b) const { return block_of_[a] == block_of_[b]; }
  std::vector<std::vector<Elem>> blocks() const;
  Subset block_set(std::size_t b) const;
  /// Least element of each block, in block order.
  std::vector<Elem> representatives() const;

  bool is_discrete() const noexcept { return blocks_ == block_of_.size(); }
  bool is_indiscrete() const noexcept { return blocks_ <= 1; }
  bool refines(const Partition& coarser) const;  // this <= coarser
  Partition join(const Partition& other) const;
  Partition meet(const Partition& other) const;
  bool is_congruence(const FiniteAlgebra& alg) const;
  BinaryRelation as_relation() const;

  /// "0|1,2" style rendering.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) { return a.block_of_ < b.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::size_t blocks_ = 0;
};

/// Minimal union-find used by partition and congruence code.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  Partition to_partition();

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace taylor
