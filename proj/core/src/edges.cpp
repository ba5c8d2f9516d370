#include "taylor/edges.hpp"

#include <algorithm>
#include <map>

#include "taylor/closure.hpp"
#include "taylor/error.hpp"
#include "taylor/relation.hpp"
#include "taylor/special_terms.hpp"

namespace taylor {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::S: return "s";
    case Flavor::AS: return "as";
    case Flavor::SM: return "sm";
    default: return "asm";
  }
}

EdgeGraph::EdgeGraph(std::string algebra, std::size_t n)
    : algebra_(std::move(algebra)), n_(n), as_(n * n, EdgeStatus::Absent), sm_(n * n, EdgeStatus::Absent) {
  for (Elem a = 0; a < n; ++a) {
    set_as(a, a, EdgeStatus::Present);
    set_sm(a, a, EdgeStatus::Present);
  }
}

bool EdgeGraph::has(Flavor f, Elem a, Elem b) const {
  switch (f) {
    case Flavor::S: return s(a, b);
    case Flavor::AS: return as(a, b);
    case Flavor::SM: return sm(a, b);
    default: return asm_(a, b);
  }
}

std::vector<std::pair<Elem, Elem>> EdgeGraph::edges(Flavor f) const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (a != b && has(f, a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Elem, Elem>> EdgeGraph::unknown_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (as_status(a, b) == EdgeStatus::Unknown || sm_status(a, b) == EdgeStatus::Unknown) out.emplace_back(a, b);
  return out;
}

namespace {

struct LocalData {
  FiniteAlgebra sub;
  std::vector<Elem> elems;
  std::vector<std::pair<unsigned, CyclicSearch>> cyclic;  // per arity
  FreeAlgebra f2;
};

Elem local_index(const std::vector<Elem>& elems, Elem e) {
  return static_cast<Elem>(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
}

// c(a^k b^(p-k))
Elem cyclic_at(const TermOperation& c, Elem a, Elem b, unsigned k) {
  std::vector<Elem> args(c.arity(), b);
  for (unsigned i = 0; i < k; ++i) args[i] = a;
  return c(args);
}

}  // namespace

EdgeGraph compute_edges(const FiniteAlgebra& alg, const EdgeConfig& config) {
  const std::size_t n = alg.size();
  EdgeGraph graph(alg.name(), n);
  std::map<std::vector<Elem>, LocalData> cache;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b) continue;
      const Subset B = sg(alg, {a, b});
      auto elems = B.elements();
      auto it = cache.find(elems);
      if (it == cache.end()) {
        LocalData d{subalgebra(alg, B), elems, {}, {}};
        std::vector<unsigned> arities = config.arities;
        if (arities.empty()) arities.push_back(static_cast<unsigned>(least_prime_above(elems.size())));
        for (unsigned p : arities) d.cyclic.emplace_back(p, cyclic_operations(d.sub, p, config.closure_cap));
        d.f2 = free_algebra(d.sub, 2, config.closure_cap);
        it = cache.emplace(elems, std::move(d)).first;
      }
      const LocalData& d = it->second;
      const Elem la = local_index(d.elems, a);
      const Elem lb = local_index(d.elems, b);

      PairProvenance prov{a, b, d.elems.size(), {}, d.f2.complete};
      bool any_cyclic = false;
      bool as_violated = false, sm_violated = false;
      bool as_complete = true, sm_complete = d.f2.complete;
      for (const auto& [p, search] : d.cyclic) {
        prov.arities.push_back(p);
        if (!search.complete) {
          as_complete = false;
          sm_complete = false;
          prov.complete = false;
        }
        for (const auto& c : search.operations) {
          any_cyclic = true;
          if (!as_violated && !sg(d.sub, {la, cyclic_at(c, la, lb, p - 1)}).contains(lb)) as_violated = true;
          for (unsigned k = 1; 2 * k <= p && !sm_violated; ++k) {
            const Elem w = cyclic_at(c, la, lb, k);
            for (const auto& t : d.f2.elements)
              if (!sg(d.sub, {la, t({lb, w})}).contains(lb)) {
                sm_violated = true;
                break;
              }
          }
        }
      }
      if (!any_cyclic && as_complete)
        throw NoCyclicWitness(alg.name() + ": Sg(" + std::to_string(a) + "," + std::to_string(b) +
                              ") has no cyclic operation at the configured arities");
      graph.set_as(a, b, as_violated ? EdgeStatus::Absent : (as_complete ? EdgeStatus::Present : EdgeStatus::Unknown));
      graph.set_sm(a, b, sm_violated ? EdgeStatus::Absent : (sm_complete ? EdgeStatus::Present : EdgeStatus::Unknown));
      graph.provenance.push_back(std::move(prov));
    }

  if (config.cross_check_sedges) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == b) continue;
        if (graph.as_status(a, b) == EdgeStatus::Unknown || graph.sm_status(a, b) == EdgeStatus::Unknown) continue;
        const bool pair_closed = is_subuniverse(alg, Subset(n, {a, b}));
        Tristate semilattice = Tristate::No;
        if (pair_closed) semilattice = has_semilattice_term(alg, a, b, config.closure_cap);
        if (semilattice == Tristate::Unknown) continue;
        if (graph.s(a, b) != (semilattice == Tristate::Yes))
          throw SEdgeMismatch(alg.name() + ": s-edge " + std::to_string(a) + "->" + std::to_string(b) +
                              (graph.s(a, b) ? " computed but no semilattice term on the pair"
                                             : " missing although the pair is a semilattice with absorbing " +
                                                   std::to_string(b)));
      }
  }
  return graph;
}

std::vector<std::uint8_t> reachability(const EdgeGraph& edges, Flavor flavor) {
  const std::size_t n = edges.size();
  std::vector<std::uint8_t> r(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) r[a * n + b] = (a == b || edges.has(flavor, a, b)) ? 1 : 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k * n + j]) r[i * n + j] = 1;
  return r;
}

bool is_closed(const EdgeGraph& edges, Flavor flavor, const Subset& B) {
  for (Elem b : B.elements())
    for (Elem a = 0; a < edges.size(); ++a)
      if (!B.contains(a) && edges.has(flavor, b, a)) return false;
  return true;
}

ComponentDecomposition component_analysis(const EdgeGraph& edges, Flavor flavor) {
  const std::size_t n = edges.size();
  ComponentDecomposition out;
  out.flavor = flavor;
  const auto r = reachability(edges, flavor);
  out.component_of.assign(n, static_cast<std::size_t>(-1));
  for (Elem a = 0; a < n; ++a) {
    if (out.component_of[a] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = out.components.size();
    out.components.emplace_back();
    for (Elem b = a; b < n; ++b)
      if (r[a * n + b] && r[b * n + a]) {
        out.component_of[b] = id;
        out.components.back().push_back(b);
      }
  }
  const std::size_t m = out.components.size();
  std::vector<std::uint8_t> cedge(m * m, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && edges.has(flavor, a, b) && out.component_of[a] != out.component_of[b])
        cedge[out.component_of[a] * m + out.component_of[b]] = 1;
  std::vector<bool> has_out(m, false), has_in(m, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (cedge[i * m + j]) {
        out.condensation.emplace_back(i, j);
        has_out[i] = true;
        has_in[j] = true;
      }
  out.min = Subset(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!has_out[i]) {
      out.sinks.push_back(i);
      for (Elem e : out.components[i]) out.min.insert(e);
    }
    if (!has_in[i]) out.sources.push_back(i);
  }
  UnionFind uf(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (a != b && edges.has(flavor, a, b)) uf.unite(a, b);
  out.weak_components = uf.to_partition().blocks();
  return out;
}

}  // namespace taylor
