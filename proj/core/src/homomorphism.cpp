#include "taylor/homomorphism.hpp"

#include "taylor/detail/odometer.hpp"
#include "taylor/error.hpp"

namespace taylor {

bool Homomorphism::is_surjective() const {
  std::vector<bool> hit(target->size(), false);
  for (Elem v : map) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

bool is_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const std::vector<Elem>& map) {
  if (!src.same_signature(dst) || map.size() != src.size()) return false;
  for (Elem v : map)
    if (v >= dst.size()) return false;
  for (std::size_t o = 0; o < src.op_count(); ++o) {
    const auto& s = src.op(o);
    const auto& d = dst.op(o);
    const unsigned k = s.arity();
    std::vector<Elem> args(k), images(k);
    bool ok = detail::for_each_index_tuple(k, src.size(), [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) {
        args[i] = static_cast<Elem>(idx[i]);
        images[i] = map[idx[i]];
      }
      return map[s(args)] == d(images);
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

struct Search {
  const FiniteAlgebra& src;
  const FiniteAlgebra& dst;
  std::size_t node_cap;
  std::size_t nodes = 0;
  std::vector<Homomorphism> found;

  // Extends `map` with every value forced by the operations on assigned
  // elements. Returns false on a conflict.
  bool propagate(std::vector<Elem>& map) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Elem> assigned;
      for (Elem a = 0; a < src.size(); ++a)
        if (map[a] != kUnset) assigned.push_back(a);
      for (std::size_t o = 0; o < src.op_count(); ++o) {
        const auto& s = src.op(o);
        const auto& d = dst.op(o);
        const unsigned k = s.arity();
        std::vector<Elem> args(k), images(k);
        bool ok = detail::for_each_index_tuple(k, assigned.size(), [&](const std::vector<std::size_t>& idx) {
          for (unsigned i = 0; i < k; ++i) {
            args[i] = assigned[idx[i]];
            images[i] = map[args[i]];
          }
          const Elem r = s(args);
          const Elem v = d(images);
          if (map[r] == kUnset) {
            map[r] = v;
            changed = true;
          } else if (map[r] != v) {
            return false;
          }
          return true;
        });
        if (!ok) return false;
      }
    }
    return true;
  }

  void run(std::vector<Elem> map) {
    if (++nodes > node_cap) throw CapExceeded("homomorphisms " + src.name() + " -> " + dst.name(), node_cap);
    if (!propagate(map)) return;
    Elem next = kUnset;
    for (Elem a = 0; a < src.size(); ++a)
      if (map[a] == kUnset) {
        next = a;
        break;
      }
    if (next == kUnset) {
      found.push_back({&src, &dst, map});
      return;
    }
    for (Elem v = 0; v < dst.size(); ++v) {
      auto copy = map;
      copy[next] = v;
      run(std::move(copy));
    }
  }
};

}  // namespace

std::vector<Homomorphism> homomorphisms_between(const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                                std::size_t node_cap) {
  if (!src.same_signature(dst))
    throw SignatureMismatch(src.name() + " and " + dst.name() + " have different signatures");
  Search search{src, dst, node_cap, 0, {}};
  search.run(std::vector<Elem>(src.size(), kUnset));
  return std::move(search.found);
}

}  // namespace taylor
