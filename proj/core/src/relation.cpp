#include "taylor/relation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "taylor/detail/odometer.hpp"

namespace taylor {

BinaryRelation BinaryRelation::diagonal(std::size_t n) {
  BinaryRelation r(n, n);
  for (Elem a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t rows, std::size_t cols) {
  BinaryRelation r(rows, cols);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

BinaryRelation BinaryRelation::from_pairs(std::size_t rows, std::size_t cols,
                                          const std::vector<std::pair<Elem, Elem>>& pairs) {
  BinaryRelation r(rows, cols);
  for (auto [a, b] : pairs) r.insert(a, b);
  return r;
}

std::size_t BinaryRelation::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::vector<std::pair<Elem, Elem>> BinaryRelation::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < rows_; ++a)
    for (Elem b = 0; b < cols_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool BinaryRelation::is_reflexive() const {
  if (rows_ != cols_) return false;
  for (Elem a = 0; a < rows_; ++a)
    if (!contains(a, a)) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (Elem a = 0; a < rows_; ++a)
    for (Elem b = a + 1; b < cols_; ++b)
      if (contains(a, b) != contains(b, a)) return false;
  return true;
}

bool BinaryRelation::is_transitive() const {
  if (rows_ != cols_) return false;
  for (Elem a = 0; a < rows_; ++a)
    for (Elem b = 0; b < rows_; ++b)
      if (contains(a, b))
        for (Elem c = 0; c < rows_; ++c)
          if (contains(b, c) && !contains(a, c)) return false;
  return true;
}

bool BinaryRelation::is_compatible(const FiniteAlgebra& left, const FiniteAlgebra& right) const {
  const auto ps = pairs();
  for (std::size_t o = 0; o < left.op_count(); ++o) {
    const auto& lop = left.op(o);
    const auto& rop = right.op(o);
    const unsigned k = lop.arity();
    std::vector<Elem> la(k), ra(k);
    bool ok = detail::for_each_index_tuple(k, ps.size(), [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) {
        la[i] = ps[idx[i]].first;
        ra[i] = ps[idx[i]].second;
      }
      return contains(lop(la), rop(ra));
    });
    if (!ok) return false;
  }
  return true;
}

bool BinaryRelation::is_subdirect() const {
  for (Elem a = 0; a < rows_; ++a)
    if (right_neighbors(a).empty()) return false;
  for (Elem b = 0; b < cols_; ++b)
    if (left_neighbors(b).empty()) return false;
  return true;
}

BinaryRelation BinaryRelation::transitive_closure() const {
  BinaryRelation r = *this;
  const std::size_t n = rows_;
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (r.contains(i, k))
        for (Elem j = 0; j < n; ++j)
          if (r.contains(k, j)) r.insert(i, j);
  return r;
}

BinaryRelation BinaryRelation::converse() const {
  BinaryRelation r(cols_, rows_);
  for (auto [a, b] : pairs()) r.insert(b, a);
  return r;
}

Subset BinaryRelation::right_neighbors(Elem a) const {
  Subset s(cols_);
  for (Elem b = 0; b < cols_; ++b)
    if (contains(a, b)) s.insert(b);
  return s;
}

Subset BinaryRelation::left_neighbors(Elem b) const {
  Subset s(rows_);
  for (Elem a = 0; a < rows_; ++a)
    if (contains(a, b)) s.insert(a);
  return s;
}

Partition::Partition(std::vector<std::size_t> block_of) {
  std::vector<std::size_t> seen_label;
  block_of_.resize(block_of.size());
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    std::size_t label = block_of[i];
    std::size_t idx = 0;
    while (idx < seen_label.size() && seen_label[idx] != label) ++idx;
    if (idx == seen_label.size()) seen_label.push_back(label);
    block_of_[i] = idx;
  }
  blocks_ = seen_label.size();
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), 0);
  return Partition(std::move(b));
}

Partition Partition::indiscrete(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_pairs(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  return uf.to_partition();
}

Partition Partition::from_relation(const BinaryRelation& r) { return from_pairs(r.rows(), r.pairs()); }

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(blocks_);
  for (Elem e = 0; e < block_of_.size(); ++e) out[block_of_[e]].push_back(e);
  return out;
}

Subset Partition::block_set(std::size_t b) const {
  Subset s(size());
  for (Elem e = 0; e < block_of_.size(); ++e)
    if (block_of_[e] == b) s.insert(e);
  return s;
}

std::vector<Elem> Partition::representatives() const {
  std::vector<Elem> reps(blocks_, 0);
  std::vector<bool> set(blocks_, false);
  for (Elem e = 0; e < block_of_.size(); ++e)
    if (!set[block_of_[e]]) {
      set[block_of_[e]] = true;
      reps[block_of_[e]] = e;
    }
  return reps;
}

bool Partition::refines(const Partition& coarser) const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = a + 1; b < size(); ++b)
      if (related(a, b) && !coarser.related(a, b)) return false;
  return true;
}

Partition Partition::join(const Partition& other) const {
  UnionFind uf(size());
  const auto mine = representatives();
  const auto theirs = other.representatives();
  for (Elem e = 0; e < size(); ++e) {
    uf.unite(e, mine[block_of_[e]]);
    uf.unite(e, theirs[other.block(e)]);
  }
  return uf.to_partition();
}

Partition Partition::meet(const Partition& other) const {
  std::vector<std::size_t> labels(size());
  for (Elem e = 0; e < size(); ++e) labels[e] = block_of_[e] * (other.block_count() + 1) + other.block(e);
  return Partition(std::move(labels));
}

bool Partition::is_congruence(const FiniteAlgebra& alg) const {
  if (size() != alg.size()) return false;
  // Checking one coordinate change at a time suffices for compatibility.
  for (const auto& op : alg.ops()) {
    const unsigned k = op.arity();
    const std::size_t total = op.table().size();
    std::vector<Elem> args(k);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rest = flat;
      for (unsigned i = k; i-- > 0;) {
        args[i] = static_cast<Elem>(rest % alg.size());
        rest /= alg.size();
      }
      const Elem base = op.at(flat);
      for (unsigned i = 0; i < k; ++i) {
        const Elem keep = args[i];
        for (Elem other = keep + 1; other < alg.size(); ++other) {
          if (!related(keep, other)) continue;
          args[i] = other;
          if (!related(base, op(args))) return false;
        }
        args[i] = keep;
      }
    }
  }
  return true;
}

BinaryRelation Partition::as_relation() const {
  BinaryRelation r(size(), size());
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (related(a, b)) r.insert(a, b);
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& blk : blocks()) {
    if (!first_block) os << '|';
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ',';
      os << blk[i];
    }
    first_block = false;
  }
  return os.str();
}

UnionFind::UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a < b)
    parent_[b] = a;
  else
    parent_[a] = b;
  return true;
}

Partition UnionFind::to_partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(i);
  return Partition(std::move(labels));
}

}  // namespace taylor
