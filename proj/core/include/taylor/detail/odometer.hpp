#pragma once

#include <cstddef>
#include <vector>

namespace taylor::detail {

/// Calls fn(idx) for every idx in [0,m)^k in lexicographic order. Stops and
/// returns false as soon as fn returns false.
template <class F>
bool for_each_index_tuple(unsigned k, std::size_t m, F&& fn) {
  if (m == 0 && k > 0) return true;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    unsigned pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < m) break;
      idx[pos] = 0;
      if (pos == 0) return true;
    }
    if (k == 0) return true;
  }
}

}  // namespace taylor::detail
