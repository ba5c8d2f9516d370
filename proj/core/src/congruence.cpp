#include "taylor/congruence.hpp"

#include <algorithm>
#include <set>

#include "taylor/closure.hpp"
#include "taylor/error.hpp"

namespace taylor {

namespace {

std::vector<Tuple> polynomial_generators(std::size_t n) {
  std::vector<Tuple> gens;
  Tuple id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
  gens.push_back(id);
  for (std::size_t c = 0; c < n; ++c) gens.emplace_back(n, static_cast<Elem>(c));
  return gens;
}

}  // namespace

std::vector<UnaryMap> unary_polynomials(const FiniteAlgebra& alg, std::size_t cap) {
  ClosureOptions opts;
  opts.cap = cap;
  auto closure = close_power(alg, alg.size(), polynomial_generators(alg.size()), opts);
  if (!closure.complete) throw CapExceeded("unary polynomials of " + alg.name(), cap);
  auto maps = std::move(closure.tuples);
  std::sort(maps.begin(), maps.end());
  return maps;
}

bool is_unary_polynomial(const FiniteAlgebra& alg, const UnaryMap& p, std::size_t cap) {
  if (p.size() != alg.size()) return false;
  ClosureOptions opts;
  opts.cap = cap;
  opts.stop_when = [&](const Tuple& t) { return t == p; };
  auto closure = close_power(alg, alg.size(), polynomial_generators(alg.size()), opts);
  if (closure.stopped) return true;
  if (!closure.complete) throw CapExceeded("unary polynomials of " + alg.name(), cap);
  return false;
}

Partition principal_congruence(std::size_t n, const std::vector<UnaryMap>& polys, Elem a, Elem b) {
  UnionFind uf(n);
  for (const auto& p : polys) uf.unite(p[a], p[b]);
  return uf.to_partition();
}

Partition principal_congruence(const FiniteAlgebra& alg, Elem a, Elem b) {
  return principal_congruence(alg.size(), unary_polynomials(alg), a, b);
}

Partition congruence_generated(const FiniteAlgebra& alg, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const auto polys = unary_polynomials(alg);
  UnionFind uf(alg.size());
  for (auto [a, b] : pairs)
    for (const auto& p : polys) uf.unite(p[a], p[b]);
  return uf.to_partition();
}

CongruenceReport congruences(const FiniteAlgebra& alg, std::size_t size_cap) {
  const std::size_t n = alg.size();
  if (n > size_cap) throw CapExceeded("congruences of " + alg.name(), size_cap);
  const auto polys = unary_polynomials(alg);
  CongruenceReport report;
  std::set<Partition> all{Partition::discrete(n)};
  std::vector<Partition> distinct_principal;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      auto theta = principal_congruence(n, polys, a, b);
      report.principal.push_back({a, b, theta});
      if (all.insert(theta).second) distinct_principal.push_back(theta);
    }
  // Join-closure: every congruence is a join of principal ones.
  std::vector<Partition> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& x : frontier)
      for (const auto& p : distinct_principal) {
        auto j = x.join(p);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  report.all.assign(all.begin(), all.end());
  std::sort(report.all.begin(), report.all.end(), [](const Partition& x, const Partition& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x < y;
  });
  if (!distinct_principal.empty()) {
    Partition m = distinct_principal.front();
    for (const auto& p : distinct_principal) m = m.meet(p);
    if (!m.is_discrete()) report.monolith = m;
  }
  report.subdirectly_irreducible = report.monolith.has_value();
  return report;
}

LinkStructure link_structure(const BinaryRelation& r, unsigned i) {
  if (i != 1 && i != 2) throw PreconditionViolated("link_structure: coordinate must be 1 or 2");
  if (!r.is_subdirect()) throw NotSubdirect("link_structure: relation is not subdirect");
  const BinaryRelation rel = i == 1 ? r : r.converse();
  const std::size_t n = rel.rows();
  const std::size_t m = rel.cols();
  LinkStructure out;
  out.tol = BinaryRelation(n, n);
  for (Elem b = 0; b < m; ++b) {
    const auto col = rel.left_neighbors(b);
    const auto elems = col.elements();
    for (Elem x : elems)
      for (Elem y : elems) out.tol.insert(x, y);
    if (col.is_full()) out.full_row_exists = true;
  }
  out.lk = Partition::from_relation(out.tol);
  out.tol_connected = out.lk.is_indiscrete();
  return out;
}

}  // namespace taylor
