#include "taylor/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "taylor/closure.hpp"
#include "taylor/congruence.hpp"
#include "taylor/detail/odometer.hpp"
#include "taylor/error.hpp"

namespace taylor {

FiniteAlgebra semilattice2() {
  return FiniteAlgebra("semilattice", 2, {OperationTable("meet", 2, {0, 0, 0, 1})});
}

FiniteAlgebra z2_minority() {
  std::vector<Elem> t(8);
  for (std::size_t i = 0; i < 8; ++i) t[i] = static_cast<Elem>(((i >> 2) + (i >> 1) + i) & 1);
  return FiniteAlgebra("Z2", 2, {OperationTable("minority", 3, std::move(t))});
}

FiniteAlgebra majority2() {
  std::vector<Elem> t(8);
  for (std::size_t i = 0; i < 8; ++i) t[i] = static_cast<Elem>(((i >> 2) & 1) + ((i >> 1) & 1) + (i & 1) >= 2);
  return FiniteAlgebra("majority", 2, {OperationTable("maj", 3, std::move(t))});
}

FiniteAlgebra a1() {
  std::vector<Elem> t(64);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y)
      for (Elem z = 0; z < 4; ++z) {
        Elem v;
        if (x == 0 || y == 0 || z == 0)
          v = 0;
        else if (x != y && y != z && x != z)
          v = 0;
        else
          v = x ^ y ^ z;  // minority on two values from {1,2,3}
        t[x * 16 + y * 4 + z] = v;
      }
  return FiniteAlgebra("A1", 4, {OperationTable("f", 3, std::move(t))});
}

std::vector<FiniteAlgebra> builtin_catalog() { return {semilattice2(), z2_minority(), majority2(), a1()}; }

std::string canonical_form(const FiniteAlgebra& alg, std::size_t size_cap) {
  const std::size_t n = alg.size();
  if (n > size_cap) throw CapExceeded("canonical_form: " + alg.name() + " too large", size_cap);
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> best;
  std::vector<Elem> candidate;
  std::vector<Elem> args;
  do {
    // perm maps old element -> new element.
    candidate.clear();
    for (const auto& op : alg.ops()) {
      const unsigned k = op.arity();
      std::vector<Elem> table(op.table().size());
      args.resize(k);
      std::size_t flat = 0;
      detail::for_each_index_tuple(k, n, [&](const std::vector<std::size_t>& idx) {
        std::size_t target = 0;
        for (unsigned i = 0; i < k; ++i) {
          args[i] = static_cast<Elem>(idx[i]);
          target = target * n + perm[idx[i]];
        }
        table[target] = perm[op.at(flat++)];
        return true;
      });
      candidate.insert(candidate.end(), table.begin(), table.end());
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::ostringstream os;
  os << n;
  for (const auto& [sym, ar] : alg.signature()) os << ';' << sym << '/' << ar;
  os << ':';
  for (Elem e : best) os << e << ',';
  return os.str();
}

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size() == b.size() && a.same_signature(b) && canonical_form(a) == canonical_form(b);
}

Template Template::hs_closure(const std::vector<FiniteAlgebra>& seeds, std::size_t size_cap) {
  Template tpl;
  std::map<std::string, std::size_t> seen;
  std::vector<Signature> groups;
  std::deque<std::size_t> queue;
  auto add = [&](FiniteAlgebra alg, std::size_t seed) {
    auto key = canonical_form(alg, size_cap);
    if (seen.count(key)) return;
    const auto sig = alg.signature();
    auto g = std::find(groups.begin(), groups.end(), sig);
    if (g == groups.end()) {
      groups.push_back(sig);
      g = groups.end() - 1;
    }
    seen.emplace(key, tpl.members_.size());
    queue.push_back(tpl.members_.size());
    tpl.members_.push_back({std::move(alg), seed, static_cast<std::size_t>(g - groups.begin()), std::move(key)});
  };
  for (std::size_t s = 0; s < seeds.size(); ++s) add(seeds[s], s);
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const FiniteAlgebra alg = tpl.members_[idx].algebra;
    const std::size_t seed = tpl.members_[idx].seed;
    for (const auto& s : enumerate_subuniverses(alg, true, size_cap).subuniverses) add(subalgebra(alg, s), seed);
    for (const auto& theta : congruences(alg, size_cap).all)
      if (!theta.is_discrete()) add(quotient(alg, theta), seed);
  }
  tpl.group_count_ = groups.size();
  return tpl;
}

std::vector<std::size_t> Template::group(std::size_t g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].group == g) out.push_back(i);
  return out;
}

std::size_t Template::find(const FiniteAlgebra& alg) const {
  const auto key = canonical_form(alg);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].canonical == key) return i;
  return members_.size();
}

std::size_t Template::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].algebra.name() == name) return i;
  return members_.size();
}

}  // namespace taylor
