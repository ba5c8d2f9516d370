#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace taylor {

using Elem = std::uint32_t;

/// A subset of {0, ..., n-1} stored as a packed bitset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<Elem> elems) : Subset(universe) {
    for (Elem e : elems) insert(e);
  }
  template <class Range>
  static Subset of(std::size_t universe, const Range& elems) {
    Subset s(universe);
    for (auto e : elems) s.insert(static_cast<Elem>(e));
    return s;
  }
  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  std::size_t universe() const noexcept { return n_; }

  bool contains(Elem e) const noexcept {
    return e < n_ && ((words_[e >> 6] >> (e & 63)) & 1u);
  }
  void insert(Elem e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const noexcept { return count() == n_; }

  bool is_subset_of(const Subset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const Subset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Subset& operator|=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  Subset complement() const {
    Subset c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!contains(static_cast<Elem>(i))) c.insert(static_cast<Elem>(i));
    return c;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(static_cast<Elem>(i))) out.push_back(static_cast<Elem>(i));
    return out;
  }
  /// Least element; undefined on the empty set.
  Elem first() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(static_cast<Elem>(i))) return static_cast<Elem>(i);
    return static_cast<Elem>(n_);
  }

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Total order comparing as binary numbers with element n-1 most significant.
  friend bool operator<(const Subset& a, const Subset& b) {
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace taylor
