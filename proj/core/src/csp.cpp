#include "taylor/csp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <unordered_set>

#include "taylor/absorption.hpp"
#include "taylor/centralizer.hpp"
#include "taylor/detail/odometer.hpp"
#include "taylor/edges.hpp"
#include "taylor/error.hpp"
#include "taylor/special_terms.hpp"

namespace taylor {

namespace {

std::string map_label(const UnaryMap& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string tuple_label(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Tuple project(const Tuple& t, const std::vector<std::size_t>& positions) {
  Tuple out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) out[i] = t[positions[i]];
  return out;
}

// Positions of `sub` inside the ascending `scope`, or empty if not contained.
std::vector<std::size_t> positions_in(const std::vector<std::size_t>& scope, const std::vector<std::size_t>& sub) {
  std::vector<std::size_t> pos;
  for (std::size_t v : sub) {
    auto it = std::lower_bound(scope.begin(), scope.end(), v);
    if (it == scope.end() || *it != v) return {};
    pos.push_back(static_cast<std::size_t>(it - scope.begin()));
  }
  return pos;
}

void normalize(std::vector<Tuple>& tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

UnaryMap compose_maps(const UnaryMap& outer, const UnaryMap& inner) {
  UnaryMap out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

bool idempotent_map(const UnaryMap& p) { return compose_maps(p, p) == p; }

}  // namespace

bool Constraint::contains(const Tuple& t) const { return std::binary_search(tuples.begin(), tuples.end(), t); }

std::size_t Instance::add_variable(std::string name, FiniteAlgebra domain) {
  names_.push_back(std::move(name));
  domains_.push_back(std::move(domain));
  return names_.size() - 1;
}

void Instance::add_constraint(std::vector<std::size_t> scope, std::vector<Tuple> tuples) {
  for (std::size_t v : scope)
    if (v >= names_.size()) throw PreconditionViolated("constraint scope names an unknown variable");
  for (const auto& t : tuples) {
    if (t.size() != scope.size())
      throw ArityMismatch("constraint tuple " + tuple_label(t) + " does not match a scope of size " +
                          std::to_string(scope.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] >= domains_[scope[i]].size())
        throw PreconditionViolated("value " + std::to_string(t[i]) + " outside the domain of " + names_[scope[i]]);
  }
  std::vector<std::size_t> canonical = scope;
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());
  std::vector<Tuple> rows;
  for (const auto& t : tuples) {
    Tuple row(canonical.size(), 0);
    std::vector<bool> set(canonical.size(), false);
    bool agree = true;
    for (std::size_t i = 0; i < scope.size() && agree; ++i) {
      const std::size_t pos = static_cast<std::size_t>(std::lower_bound(canonical.begin(), canonical.end(), scope[i]) -
                                                       canonical.begin());
      if (set[pos] && row[pos] != t[i]) agree = false;
      row[pos] = t[i];
      set[pos] = true;
    }
    if (agree) rows.push_back(std::move(row));
  }
  normalize(rows);
  const std::size_t existing = find_constraint(canonical);
  if (existing == constraints_.size()) {
    constraints_.push_back({std::move(canonical), std::move(rows)});
    return;
  }
  auto& old = constraints_[existing].tuples;
  std::vector<Tuple> both;
  std::set_intersection(old.begin(), old.end(), rows.begin(), rows.end(), std::back_inserter(both));
  old = std::move(both);
}

std::size_t Instance::find_constraint(const std::vector<std::size_t>& scope) const {
  for (std::size_t i = 0; i < constraints_.size(); ++i)
    if (constraints_[i].scope == scope) return i;
  return constraints_.size();
}

std::size_t Instance::find_variable(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

bool Instance::satisfies(const Assignment& a) const {
  if (a.size() != names_.size()) return false;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] >= domains_[v].size()) return false;
  for (const auto& c : constraints_) {
    Tuple t(c.scope.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = a[c.scope[i]];
    if (!c.contains(t)) return false;
  }
  return true;
}

std::size_t Instance::search_space() const {
  std::size_t total = 1;
  for (const auto& d : domains_) {
    if (d.size() != 0 && total > std::numeric_limits<std::size_t>::max() / d.size())
      return std::numeric_limits<std::size_t>::max();
    total *= d.size();
  }
  return total;
}

bool Instance::is_subdirect() const {
  for (const auto& c : constraints_)
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      Subset seen(domains_[c.scope[i]].size());
      for (const auto& t : c.tuples) seen.insert(t[i]);
      if (!seen.is_full()) return false;
    }
  return true;
}

bool Instance::relations_compatible() const {
  for (const auto& c : constraints_) {
    if (c.tuples.empty()) continue;
    std::vector<const FiniteAlgebra*> factors;
    for (std::size_t v : c.scope) factors.push_back(&domains_[v]);
    ClosureOptions opts;
    opts.stop_when = [&](const Tuple& t) { return !c.contains(t); };
    if (close_tuples(factors, c.tuples, opts).stopped) return false;
  }
  return true;
}

// ------------------------------------------------------------------ solving

SolveResult brute_force_solve(const Instance& inst, bool all_solutions, std::size_t limit) {
  if (inst.search_space() > limit)
    throw LimitExceeded("brute_force_solve: search space exceeds " + std::to_string(limit));
  const std::size_t n = inst.variable_count();
  std::vector<std::vector<const Constraint*>> due(n + 1);
  for (const auto& c : inst.constraints()) due[c.scope.empty() ? 0 : c.scope.back() + 1].push_back(&c);

  SolveResult result;
  for (const Constraint* c : due[0])
    if (!c->contains({})) return result;
  Assignment a(n, 0);
  auto ok_at = [&](std::size_t v) {
    for (const Constraint* c : due[v + 1]) {
      Tuple t(c->scope.size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = a[c->scope[i]];
      if (!c->contains(t)) return false;
    }
    return true;
  };
  if (n == 0) {
    result.satisfiable = true;
    result.solutions.push_back({});
    return result;
  }
  std::size_t v = 0;
  std::vector<bool> fresh(n, true);
  while (true) {
    const std::size_t size = inst.domain(v).size();
    if (fresh[v]) {
      a[v] = 0;
      fresh[v] = false;
    } else {
      ++a[v];
    }
    if (a[v] >= size) {
      fresh[v] = true;
      if (v == 0) break;
      --v;
      continue;
    }
    ++result.nodes;
    if (!ok_at(v)) continue;
    if (v + 1 == n) {
      result.satisfiable = true;
      result.solutions.push_back(a);
      if (!all_solutions) break;
      continue;
    }
    ++v;
  }
  return result;
}

// -------------------------------------------------------------- minimality

namespace {

struct Rel {
  std::vector<std::size_t> scope;
  std::set<Tuple> tuples;
};

std::vector<std::vector<std::size_t>> subsets_up_to(std::size_t n, unsigned l) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == l) return;
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace

MinimizeResult kl_minimize(const Instance& inst, unsigned k, unsigned l) {
  if (k > l) throw PreconditionViolated("kl_minimize: k must not exceed l");
  const std::size_t n = inst.variable_count();
  std::vector<Rel> rels;
  for (const auto& scope : subsets_up_to(n, l)) {
    Rel r{scope, {}};
    std::vector<std::pair<const Constraint*, std::vector<std::size_t>>> inside;
    for (const auto& c : inst.constraints()) {
      if (c.scope.size() > scope.size()) continue;
      auto pos = positions_in(scope, c.scope);
      if (pos.size() == c.scope.size()) inside.emplace_back(&c, std::move(pos));
    }
    std::vector<std::size_t> sizes;
    for (std::size_t v : scope) sizes.push_back(inst.domain(v).size());
    Tuple t(scope.size());
    // Odometer over the mixed-radix product.
    std::vector<std::size_t> idx(scope.size(), 0);
    bool done = std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; });
    while (!done) {
      for (std::size_t i = 0; i < idx.size(); ++i) t[i] = static_cast<Elem>(idx[i]);
      bool keep = true;
      for (const auto& [c, pos] : inside)
        if (!c->contains(project(t, pos))) {
          keep = false;
          break;
        }
      if (keep) r.tuples.insert(t);
      std::size_t p = idx.size();
      while (p > 0) {
        --p;
        if (++idx[p] < sizes[p]) break;
        idx[p] = 0;
        if (p == 0) done = true;
      }
      if (idx.empty()) done = true;
    }
    rels.push_back(std::move(r));
  }
  for (const auto& c : inst.constraints())
    if (c.scope.size() > l) rels.push_back({c.scope, std::set<Tuple>(c.tuples.begin(), c.tuples.end())});

  struct Link {
    std::size_t big, small;
    std::vector<std::size_t> pos;
  };
  std::vector<Link> links;
  for (std::size_t b = 0; b < rels.size(); ++b)
    for (std::size_t s = 0; s < rels.size(); ++s) {
      if (s == b || rels[s].scope.size() > k || rels[s].scope.size() >= rels[b].scope.size()) continue;
      auto pos = positions_in(rels[b].scope, rels[s].scope);
      if (pos.size() == rels[s].scope.size()) links.push_back({b, s, std::move(pos)});
    }

  MinimizeResult result;
  bool changed = true;
  while (changed) {
    changed = false;
    ++result.rounds;
    for (const auto& link : links) {
      auto& big = rels[link.big].tuples;
      auto& small = rels[link.small].tuples;
      std::set<Tuple> proj;
      for (const auto& t : big) proj.insert(project(t, link.pos));
      for (auto it = small.begin(); it != small.end();)
        if (!proj.count(*it)) {
          it = small.erase(it);
          changed = true;
        } else {
          ++it;
        }
      for (auto it = big.begin(); it != big.end();)
        if (!small.count(project(*it, link.pos))) {
          it = big.erase(it);
          changed = true;
        } else {
          ++it;
        }
    }
  }
  for (std::size_t v = 0; v < n; ++v) result.instance.add_variable(inst.name(v), inst.domain(v));
  for (auto& r : rels) {
    if (r.tuples.empty()) result.unsat = true;
    result.instance.add_constraint(r.scope, std::vector<Tuple>(r.tuples.begin(), r.tuples.end()));
  }
  if (n == 0)
    for (const auto& c : inst.constraints())
      if (c.tuples.empty()) result.unsat = true;
  return result;
}

bool is_kl_minimal(const Instance& inst, unsigned k, unsigned l) {
  const auto& cs = inst.constraints();
  for (const auto& scope : subsets_up_to(inst.variable_count(), l))
    if (inst.find_constraint(scope) == cs.size()) return false;
  for (const auto& big : cs)
    for (const auto& small : cs) {
      if (&big == &small || small.scope.size() > k || small.scope.size() >= big.scope.size()) continue;
      const auto pos = positions_in(big.scope, small.scope);
      if (pos.size() != small.scope.size()) continue;
      std::vector<Tuple> proj;
      for (const auto& t : big.tuples) proj.push_back(project(t, pos));
      normalize(proj);
      if (proj != small.tuples) return false;
    }
  return true;
}

Instance restrict_to_unary(const Instance& inst) {
  const std::size_t n = inst.variable_count();
  std::vector<std::vector<Elem>> relabel(n);
  Instance out;
  for (std::size_t v = 0; v < n; ++v) {
    const FiniteAlgebra& A = inst.domain(v);
    const std::size_t c = inst.find_constraint({v});
    if (c == inst.constraints().size()) {
      relabel[v].resize(A.size());
      for (Elem e = 0; e < A.size(); ++e) relabel[v][e] = e;
      out.add_variable(inst.name(v), A);
      continue;
    }
    Subset U(A.size());
    for (const auto& t : inst.constraints()[c].tuples) U.insert(t[0]);
    if (U.empty() || !is_subuniverse(A, U))
      throw NotClosed("unary constraint on " + inst.name(v) + " is not a nonempty subuniverse");
    relabel[v].assign(A.size(), static_cast<Elem>(A.size()));
    Elem next = 0;
    for (Elem e : U.elements()) relabel[v][e] = next++;
    out.add_variable(inst.name(v), U.is_full() ? A : subalgebra(A, U));
  }
  for (const auto& c : inst.constraints()) {
    std::vector<Tuple> rows;
    for (const auto& t : c.tuples) {
      Tuple r(t.size());
      bool inside = true;
      for (std::size_t i = 0; i < t.size() && inside; ++i) {
        r[i] = relabel[c.scope[i]][t[i]];
        inside = r[i] < out.domain(c.scope[i]).size();
      }
      if (inside) rows.push_back(std::move(r));
    }
    out.add_constraint(c.scope, std::move(rows));
  }
  return out;
}

// --------------------------------------------------------- consistent maps

ConsistentMapSet ConsistentMapSet::identity(const Instance& inst) {
  ConsistentMapSet p;
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    UnaryMap id(inst.domain(v).size());
    for (Elem e = 0; e < id.size(); ++e) id[e] = e;
    p.maps.push_back(std::move(id));
  }
  return p;
}

bool ConsistentMapSet::is_retractive() const {
  return std::all_of(maps.begin(), maps.end(), idempotent_map);
}

FiniteAlgebra polynomial_retract(const FiniteAlgebra& alg, const UnaryMap& p) {
  std::vector<Elem> image(p.begin(), p.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<Elem> index(alg.size(), 0);
  for (Elem i = 0; i < image.size(); ++i) index[image[i]] = i;
  std::vector<OperationTable> ops;
  std::vector<Elem> args;
  for (const auto& op : alg.ops()) {
    const unsigned k = op.arity();
    std::vector<Elem> table(int_pow(image.size(), k));
    args.resize(k);
    std::size_t flat = 0;
    detail::for_each_index_tuple(k, image.size(), [&](const std::vector<std::size_t>& idx) {
      for (unsigned i = 0; i < k; ++i) args[i] = image[idx[i]];
      table[flat++] = index[p[op(args)]];
      return true;
    });
    ops.emplace_back(op.symbol(), k, std::move(table));
  }
  return FiniteAlgebra(alg.name() + "@ret(" + subset_label(Subset::of(alg.size(), image)) + ")", image.size(),
                       std::move(ops));
}

ConsistentMapsResult consistent_maps(const Instance& inst, const ConsistentMapSet& p, bool apply) {
  const std::size_t n = inst.variable_count();
  if (p.maps.size() != n) throw ArityMismatch("consistent_maps: expected one map per variable");
  for (std::size_t v = 0; v < n; ++v) {
    const auto& A = inst.domain(v);
    if (p.maps[v].size() != A.size())
      throw ArityMismatch("consistent_maps: map of " + inst.name(v) + " has the wrong length");
    for (Elem e : p.maps[v])
      if (e >= A.size()) throw ArityMismatch("consistent_maps: map of " + inst.name(v) + " leaves the domain");
    if (!is_unary_polynomial(A, p.maps[v]))
      throw NotPolynomial(inst.name(v) + ": " + map_label(p.maps[v]) + " is not a unary polynomial of " + A.name());
  }
  for (const auto& c : inst.constraints())
    for (const auto& t : c.tuples) {
      Tuple img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = p.maps[c.scope[i]][t[i]];
      if (!c.contains(img)) {
        std::string scope;
        for (std::size_t v : c.scope) scope += (scope.empty() ? "" : ",") + inst.name(v);
        throw NotConsistent("constraint on (" + scope + "): " + tuple_label(t) + " maps to " + tuple_label(img) +
                            " outside the relation");
      }
    }
  ConsistentMapsResult result;
  result.consistent = true;
  result.retractive = p.is_retractive();
  if (!apply) return result;
  if (!result.retractive) throw NotRetractive("consistent_maps: some map is not idempotent");
  Instance out;
  std::vector<std::vector<Elem>> index(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& A = inst.domain(v);
    const bool identity = std::all_of(p.maps[v].begin(), p.maps[v].end(), [&, e = Elem{0}](Elem x) mutable {
      return x == e++;
    });
    index[v].assign(A.size(), 0);
    Elem next = 0;
    for (Elem e = 0; e < A.size(); ++e)
      if (p.maps[v][e] == e) index[v][e] = next++;
    out.add_variable(inst.name(v), identity ? A : polynomial_retract(A, p.maps[v]));
  }
  for (const auto& c : inst.constraints()) {
    std::vector<Tuple> rows;
    for (const auto& t : c.tuples) {
      Tuple r(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) r[i] = index[c.scope[i]][p.maps[c.scope[i]][t[i]]];
      rows.push_back(std::move(r));
    }
    out.add_constraint(c.scope, std::move(rows));
  }
  result.retracted = std::move(out);
  return result;
}

// ------------------------------------------------------------- quotients

Instance quotient_instance(const Instance& inst, const std::vector<std::optional<Partition>>& congruences) {
  const std::size_t n = inst.variable_count();
  if (congruences.size() != n) throw ArityMismatch("quotient_instance: expected one entry per variable");
  Instance out;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& theta = congruences[v];
    if (!theta) {
      out.add_variable(inst.name(v), inst.domain(v));
      continue;
    }
    if (theta->size() != inst.domain(v).size() || !theta->is_congruence(inst.domain(v)))
      throw NotACongruence(inst.name(v) + ": " + theta->to_string() + " is not a congruence of " +
                           inst.domain(v).name());
    out.add_variable(inst.name(v), quotient(inst.domain(v), *theta));
  }
  for (const auto& c : inst.constraints()) {
    std::vector<Tuple> rows;
    for (const auto& t : c.tuples) {
      Tuple r(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& theta = congruences[c.scope[i]];
        r[i] = theta ? static_cast<Elem>(theta->block(t[i])) : t[i];
      }
      rows.push_back(std::move(r));
    }
    out.add_constraint(c.scope, std::move(rows));
  }
  return out;
}

SiDecomposition si_decompose(const Instance& inst, std::size_t congruence_cap) {
  const std::size_t n = inst.variable_count();
  SiDecomposition d;
  std::vector<std::vector<std::size_t>> factors(n);
  std::vector<std::vector<Partition>> thetas(n);
  for (std::size_t v = 0; v < n; ++v) {
    const FiniteAlgebra& A = inst.domain(v);
    const std::size_t size = A.size();
    std::vector<Partition> chosen;
    if (size >= 2) {
      const auto report = congruences(A, congruence_cap);
      if (!report.subdirectly_irreducible) {
        for (const auto& theta : report.all) {
          if (theta.is_indiscrete()) continue;
          std::optional<Partition> above;
          for (const auto& psi : report.all)
            if (psi != theta && theta.refines(psi)) above = above ? above->meet(psi) : psi;
          if (above && *above != theta) chosen.push_back(theta);
        }
        for (std::size_t i = 0; i < chosen.size() && chosen.size() > 1;) {
          Partition m = Partition::indiscrete(size);
          for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) m = m.meet(chosen[j]);
          if (m.is_discrete())
            chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
          else
            ++i;
        }
      }
    }
    if (chosen.empty()) {
      factors[v].push_back(d.instance.add_variable(inst.name(v), A));
      thetas[v].push_back(Partition::discrete(size));
      d.origin.emplace_back(v, Partition::discrete(size));
      continue;
    }
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      factors[v].push_back(d.instance.add_variable(inst.name(v) + "." + std::to_string(j + 1), quotient(A, chosen[j])));
      d.origin.emplace_back(v, chosen[j]);
    }
    thetas[v] = chosen;
    std::vector<Tuple> tie;
    for (Elem a = 0; a < size; ++a) {
      Tuple t;
      for (const auto& theta : chosen) t.push_back(static_cast<Elem>(theta.block(a)));
      tie.push_back(std::move(t));
    }
    d.instance.add_constraint(factors[v], std::move(tie));
  }
  for (const auto& c : inst.constraints()) {
    std::vector<std::size_t> scope;
    for (std::size_t v : c.scope) scope.insert(scope.end(), factors[v].begin(), factors[v].end());
    std::vector<Tuple> rows;
    for (const auto& t : c.tuples) {
      Tuple r;
      for (std::size_t i = 0; i < t.size(); ++i)
        for (const auto& theta : thetas[c.scope[i]]) r.push_back(static_cast<Elem>(theta.block(t[i])));
      rows.push_back(std::move(r));
    }
    d.instance.add_constraint(std::move(scope), std::move(rows));
  }
  return d;
}

Assignment si_lift(const Instance& original, const SiDecomposition& d, const Assignment& solution) {
  Assignment out(original.variable_count(), 0);
  std::vector<std::vector<std::size_t>> factors(original.variable_count());
  for (std::size_t w = 0; w < d.origin.size(); ++w) factors[d.origin[w].first].push_back(w);
  for (std::size_t v = 0; v < original.variable_count(); ++v) {
    bool found = false;
    for (Elem a = 0; a < original.domain(v).size() && !found; ++a) {
      found = std::all_of(factors[v].begin(), factors[v].end(),
                          [&](std::size_t w) { return d.origin[w].second.block(a) == solution[w]; });
      if (found) out[v] = a;
    }
    if (!found) throw PreconditionViolated("si_lift: factor values of " + original.name(v) + " do not glue");
  }
  return out;
}

// -------------------------------------------------- large centralizer domains

std::vector<DomainAnalysis> large_centralizer_analysis(const Instance& inst, std::size_t congruence_cap) {
  std::vector<DomainAnalysis> out;
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    const FiniteAlgebra& A = inst.domain(v);
    DomainAnalysis d;
    if (A.size() >= 2) {
      const auto report = congruences(A, congruence_cap);
      d.subdirectly_irreducible = report.subdirectly_irreducible;
      d.monolith = report.monolith;
      if (d.monolith)
        d.large_centralizer = centralizer_condition(A, Partition::indiscrete(A.size()), *d.monolith);
      d.has_s_edge = !compute_edges(A).edges(Flavor::S).empty();
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::optional<Partition>> monolith_factors(const Instance& inst) {
  std::vector<std::optional<Partition>> out;
  for (const auto& d : large_centralizer_analysis(inst))
    out.push_back(d.large_centralizer ? d.monolith : std::nullopt);
  return out;
}

QuotientSolutions brute_force_oracle(const Instance& quotient, std::size_t limit) {
  auto solutions = std::make_shared<std::vector<Assignment>>(brute_force_solve(quotient, true, limit).solutions);
  return [solutions](std::size_t variable, Elem point) -> std::optional<Assignment> {
    for (const auto& s : *solutions)
      if (s[variable] == point) return s;
    return std::nullopt;
  };
}

RetractionResult largecentred_retraction(const Instance& inst, const QuotientSolutions& quotient_solutions,
                                         const std::vector<std::optional<Subset>>& targets, std::size_t cap) {
  const std::size_t n = inst.variable_count();
  if (!inst.is_subdirect()) throw HypothesisUnmet("largecentred_retraction: constraints are not subdirect");
  const auto analysis = large_centralizer_analysis(inst);
  for (std::size_t v = 0; v < n; ++v)
    if (inst.domain(v).size() >= 2 && !analysis[v].subdirectly_irreducible)
      throw HypothesisUnmet("largecentred_retraction: domain of " + inst.name(v) + " is not subdirectly irreducible");

  RetractionResult result;
  std::vector<Elem> a_of, b_of;
  for (std::size_t i = 0; i < n; ++i) {
    if (!analysis[i].large_centralizer || !analysis[i].has_s_edge) continue;
    const FiniteAlgebra& A = inst.domain(i);
    const EdgeGraph edges = compute_edges(A);
    const auto s_edges = edges.edges(Flavor::S);
    std::optional<std::pair<Elem, Elem>> pick;
    if (i < targets.size() && targets[i]) {
      const Subset& B = *targets[i];
      if (B.universe() != A.size() || B.empty() || B.is_full() || !is_2_absorbing(A, B, &edges, cap).absorbing)
        throw HypothesisUnmet("largecentred_retraction: target of " + inst.name(i) +
                              " is not a proper binary absorbing subuniverse");
      for (auto [a, b] : s_edges)
        if (!B.contains(a) && B.contains(b)) {
          pick = std::make_pair(a, b);
          break;
        }
      if (!pick)
        throw CrossCheckFailed("largecentred_retraction: no s-edge enters the absorbing target of " + inst.name(i));
    } else {
      pick = s_edges.front();
    }
    result.shrunk.push_back(i);
    result.chosen_edges.push_back(*pick);
  }

  std::vector<std::optional<TermOperation>> meets(n);
  auto meet_of = [&](std::size_t j) -> const TermOperation& {
    if (!meets[j]) {
      for (std::size_t q = 0; q < j; ++q)
        if (meets[q] && inst.domain(q) == inst.domain(j)) {
          meets[j] = meets[q];
          return *meets[j];
        }
      meets[j] = universal_meet(inst.domain(j), cap).f;
    }
    return *meets[j];
  };

  if (result.shrunk.empty()) {
    result.vacuous = true;
    result.maps = ConsistentMapSet::identity(inst);
    result.powers.assign(n, 1);
  } else {
    // h_i for each chosen domain i, lifted from a solution of P/mu through [b_i].
    std::vector<std::vector<Elem>> h;
    for (std::size_t idx = 0; idx < result.shrunk.size(); ++idx) {
      const std::size_t i = result.shrunk[idx];
      const Elem b = result.chosen_edges[idx].second;
      const Elem point = static_cast<Elem>(analysis[i].monolith->block(b));
      const auto g = quotient_solutions(i, point);
      if (!g || g->size() != n)
        throw HypothesisUnmet("largecentred_retraction: P/mu has no solution with " + inst.name(i) + " = [" +
                              std::to_string(b) + "]");
      std::vector<Elem> hi(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (!analysis[j].large_centralizer) {
          hi[j] = (*g)[j];
          continue;
        }
        const Partition& mu = *analysis[j].monolith;
        if (j == i) {
          hi[j] = b;
        } else {
          hi[j] = mu.representatives().at((*g)[j]);
        }
      }
      h.push_back(std::move(hi));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t size = inst.domain(j).size();
      const TermOperation& f = meet_of(j);
      UnaryMap step(size);
      for (Elem x = 0; x < size; ++x) {
        Elem y = x;
        for (const auto& hi : h) y = f({y, hi[j]});
        step[x] = y;
      }
      UnaryMap power = step;
      unsigned m = 1;
      while (!idempotent_map(power)) {
        power = compose_maps(step, power);
        if (++m > 100000) throw LimitExceeded("largecentred_retraction: no idempotent power");
      }
      result.maps.maps.push_back(std::move(power));
      result.powers.push_back(m);
    }
  }

  result.retractive = result.maps.is_retractive();
  try {
    result.consistent = consistent_maps(inst, result.maps).consistent;
  } catch (const Error& e) {
    result.failure = e.what();
  }
  result.strictly_shrinks = true;
  for (std::size_t idx = 0; idx < result.shrunk.size(); ++idx) {
    const std::size_t i = result.shrunk[idx];
    Subset image(inst.domain(i).size());
    for (Elem e : result.maps.maps[i]) image.insert(e);
    if (image.is_full()) {
      result.strictly_shrinks = false;
      if (result.failure.empty()) result.failure = "the map of " + inst.name(i) + " is onto";
    }
    if (i < targets.size() && targets[i] && !image.is_subset_of(*targets[i]) && result.failure.empty())
      result.failure = "the map of " + inst.name(i) + " leaves the absorbing target";
  }
  if (!result.retractive && result.failure.empty()) result.failure = "some map is not idempotent";
  return result;
}

// ------------------------------------------------------------ elimination

std::optional<MarotiWitness> maroti_witness(const FiniteAlgebra& alg, std::size_t cap) {
  const auto f2 = free_algebra(alg, 2, cap);
  if (!f2.complete) throw CapExceeded("maroti_witness: F(2) of " + alg.name(), cap);
  const std::size_t n = alg.size();
  for (const auto& t : f2.elements) {
    bool rows_ok = true;
    for (Elem b = 0; b < n && rows_ok; ++b) {
      UnaryMap row(n);
      Subset image(n);
      for (Elem x = 0; x < n; ++x) {
        row[x] = t({b, x});
        image.insert(row[x]);
      }
      rows_ok = idempotent_map(row) && !image.is_full();
    }
    if (!rows_ok) continue;
    Subset C(n);
    for (Elem c = 0; c < n; ++c) {
      Subset image(n);
      for (Elem x = 0; x < n; ++x) image.insert(t({x, c}));
      if (image.is_full()) C.insert(c);
    }
    const Subset G = sg(alg, C);
    if (!G.is_full()) return MarotiWitness{t, C, G};
  }
  return std::nullopt;
}

SEdgeInjectionReport sedge_injection_check(const FiniteAlgebra& alg, const Partition& beta, const Partition& eta,
                                           const Subset& B, const Subset& C, std::size_t cap) {
  const std::size_t n = alg.size();
  if (beta.size() != n || !beta.is_congruence(alg)) throw HypothesisUnmet("beta is not a congruence");
  if (eta.size() != n || !eta.is_congruence(alg)) throw HypothesisUnmet("eta is not a congruence");
  auto is_block = [&](const Subset& X) {
    return !X.empty() && X == beta.block_set(beta.block(X.elements().front()));
  };
  if (!is_block(B)) throw HypothesisUnmet("B is not a beta-block");
  if (!is_block(C)) throw HypothesisUnmet("C is not a beta-block");
  if (B == C) throw PreconditionViolated("sedge_injection_check: B and C must be distinct blocks");
  const Elem b0 = B.elements().front();
  for (Elem x : (B | C).elements())
    if (!eta.related(b0, x)) throw HypothesisUnmet("B and C are not inside one eta-block");
  for (std::size_t blk = 0; blk < beta.block_count(); ++blk) {
    const Subset X = beta.block_set(blk);
    if (X.count() >= 2 && !is_affine(subalgebra(alg, X), cap))
      throw HypothesisUnmet("beta-block {" + subset_label(X) + "} is not affine");
  }
  if (!centralizer_condition(alg, eta, beta)) throw HypothesisUnmet("C(eta, beta; 0) fails");
  const EdgeGraph quotient_edges = compute_edges(quotient(alg, beta));
  if (!quotient_edges.s(static_cast<Elem>(beta.block(b0)), static_cast<Elem>(beta.block(C.elements().front()))))
    throw HypothesisUnmet("B ->s C fails in the quotient by beta");

  SEdgeInjectionReport report;
  const EdgeGraph edges = compute_edges(alg);
  const TermOperation f = universal_meet(alg, cap).f;
  std::map<Elem, std::vector<Elem>> targets, sources;
  for (Elem b : B.elements())
    for (Elem c : C.elements())
      if (edges.s(b, c)) {
        report.edges.emplace_back(b, c);
        targets[b].push_back(c);
        sources[c].push_back(b);
      }
  report.unique_target = true;
  for (Elem b : B.elements())
    if (targets[b].size() != 1) {
      report.unique_target = false;
      report.failure = std::to_string(b) + " has " + std::to_string(targets[b].size()) + " s-edges into C";
      break;
    }
  report.injective = true;
  for (const auto& [c, bs] : sources)
    if (bs.size() > 1) {
      report.injective = false;
      if (report.failure.empty()) report.failure = std::to_string(c) + " receives s-edges from several elements of B";
    }
  report.meet_agrees = report.unique_target;
  for (Elem b : B.elements())
    for (Elem c : C.elements())
      if (report.unique_target && f({b, c}) != targets[b].front()) {
        report.meet_agrees = false;
        if (report.failure.empty())
          report.failure = "f(" + std::to_string(b) + "," + std::to_string(c) + ") = " + std::to_string(f({b, c})) +
                           " is not the s-target of " + std::to_string(b);
      }
  return report;
}

}  // namespace taylor
