#include "taylor/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "taylor/absorption.hpp"
#include "taylor/centralizer.hpp"
#include "taylor/closure.hpp"
#include "taylor/error.hpp"
#include "taylor/homomorphism.hpp"
#include "taylor/special_terms.hpp"

namespace taylor {

std::string to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::Fail: return "fail";
    case AxiomStatus::Skipped: return "skipped";
    default: return "reported";
  }
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) {
    return c.status == AxiomStatus::Pass || c.status == AxiomStatus::Reported;
  });
}

bool AxiomReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.status == AxiomStatus::Fail; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<EdgedAlgebra> with_edges(const std::vector<FiniteAlgebra>& algebras, const EdgeConfig& config) {
  std::vector<EdgedAlgebra> out;
  for (const auto& a : algebras) out.push_back({a, compute_edges(a, config)});
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  void count() { ++check_.instances; }
  void undecided() { ++check_.undecided; }
  void fail(const std::string& counterexample) {
    if (check_.status == AxiomStatus::Fail) return;
    check_.status = AxiomStatus::Fail;
    check_.detail = counterexample;
  }
  bool failed() const { return check_.status == AxiomStatus::Fail; }

  AxiomCheck finish() {
    if (check_.status != AxiomStatus::Fail && check_.undecided > 0) {
      check_.status = AxiomStatus::Skipped;
      check_.detail = std::to_string(check_.undecided) + " of " + std::to_string(check_.instances) +
                      " instances undecided within caps";
    }
    return check_;
  }

 private:
  AxiomCheck check_;
};

AxiomCheck skipped(std::string name, std::string reason) {
  AxiomCheck c;
  c.name = std::move(name);
  c.status = AxiomStatus::Skipped;
  c.detail = std::move(reason);
  return c;
}

std::string edge(Elem a, const char* flavor, Elem b) {
  return std::to_string(a) + " ->" + flavor + " " + std::to_string(b);
}

std::string non_edge(Elem a, const char* flavor, Elem b) {
  return std::to_string(a) + " -/->" + flavor + " " + std::to_string(b);
}

std::string tuple_label(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// Some binary term acts on {a,b} as a semilattice with absorbing b.
bool semilattice_on_pair(const FiniteAlgebra& alg, Elem a, Elem b) {
  const Tuple target{a, b, b, b};
  ClosureOptions opts;
  opts.stop_when = [&](const Tuple& t) { return t == target; };
  return close_power(alg, 4, {{a, a, b, b}, {a, b, a, b}}, opts).stopped;
}

// ---------------------------------------------------------------- base axioms

void base_axioms(const std::vector<EdgedAlgebra>& catalog, const VerifyBudget& budget, AxiomReport& report) {
  Recorder ba1("Base Axiom 1"), ba2("Base Axiom 2"), ba3("Base Axiom 3");
  Recorder sba1("Stronger Base Axiom 1"), sba2("Stronger Base Axiom 2"), sba3("Stronger Base Axiom 3");
  for (const auto& [alg, g] : catalog) {
    const std::string& name = alg.name();
    std::vector<Subset> subs;
    try {
      subs = enumerate_subuniverses(alg, false).subuniverses;
    } catch (const CapExceeded&) {
      ba1.count(), ba1.undecided(), ba2.count(), ba2.undecided();
      sba1.count(), sba1.undecided(), sba2.count(), sba2.undecided();
    }
    for (const auto& U : subs) {
      if (U.count() < 2) continue;
      const auto elems = U.elements();
      const std::string where = name + ", subalgebra {" + subset_label(U) + "}";
      ba1.count(), sba1.count();
      if (is_affine(subalgebra(alg, U), budget.closure_cap)) {
        for (Elem a : elems)
          for (Elem b : elems) {
            if (a == b) continue;
            if (!g.as(a, b)) ba1.fail(where + " is affine but " + non_edge(a, "as", b));
            if (!g.as(a, b) || g.sm(a, b))
              sba1.fail(where + " is affine but " + (g.sm(a, b) ? edge(a, "sm", b) : non_edge(a, "as", b)));
          }
      }
      ba2.count(), sba2.count();
      const Tristate maj = local_structure(alg, U, budget.closure_cap).has_majority_term;
      if (maj == Tristate::Unknown) {
        ba2.undecided(), sba2.undecided();
      } else if (maj == Tristate::Yes) {
        for (Elem a : elems)
          for (Elem b : elems) {
            if (a == b) continue;
            if (!g.sm(a, b)) ba2.fail(where + " has a majority term but " + non_edge(a, "sm", b));
            if (!g.sm(a, b) || g.as(a, b))
              sba2.fail(where + " has a majority term but " + (g.as(a, b) ? edge(a, "as", b) : non_edge(a, "sm", b)));
          }
      }
    }
    for (Elem a = 0; a < alg.size(); ++a)
      for (Elem b = 0; b < alg.size(); ++b) {
        if (a == b) continue;
        ba3.count(), sba3.count();
        const bool sl = semilattice_on_pair(alg, a, b);
        const std::string pair = name + ": ";
        if (sl && !g.s(a, b))
          ba3.fail(pair + "a binary term is a semilattice on {" + std::to_string(a) + "," + std::to_string(b) +
                   "} absorbing " + std::to_string(b) + " but " + non_edge(a, "s", b));
        if (sl != g.s(a, b))
          sba3.fail(pair + (sl ? "semilattice term absorbing " + std::to_string(b) + " but " + non_edge(a, "s", b)
                               : edge(a, "s", b) + " without a semilattice term absorbing " + std::to_string(b)));
        if (g.s(a, b) && g.asm_(b, a)) sba3.fail(pair + edge(a, "s", b) + " and " + edge(b, "asm", a));
      }
  }
  for (auto* r : {&ba1, &ba2, &ba3, &sba1, &sba2, &sba3}) report.checks.push_back(r->finish());
}

// ---------------------------------------------------------- homomorphism axioms

void homomorphism_axioms(const std::vector<EdgedAlgebra>& catalog, const std::vector<std::vector<std::size_t>>& groups,
                         const VerifyBudget& budget, AxiomReport& report) {
  Recorder ha1("Homomorphism Axiom 1"), ha2("Homomorphism Axiom 2");
  for (const auto& group : groups)
    for (std::size_t xi : group)
      for (std::size_t yi : group) {
        const auto& X = catalog[xi];
        const auto& Y = catalog[yi];
        std::vector<Homomorphism> homs;
        try {
          homs = homomorphisms_between(X.algebra, Y.algebra, budget.hom_node_cap);
        } catch (const CapExceeded&) {
          ha1.count(), ha1.undecided(), ha2.count(), ha2.undecided();
          continue;
        }
        const std::size_t n = X.algebra.size();
        std::vector<Subset> generated(n * n);
        for (Elem a = 0; a < n; ++a)
          for (Elem c = 0; c < n; ++c) generated[a * n + c] = sg(X.algebra, {a, c});
        for (const auto& h : homs) {
          std::string map = "[";
          for (std::size_t i = 0; i < h.map.size(); ++i) map += (i ? "," : "") + std::to_string(h.map[i]);
          map += "]";
          const std::string where = X.algebra.name() + " -> " + Y.algebra.name() + " by " + map + ": ";
          ha1.count();
          for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
              if (X.edges.as(a, b) && !Y.edges.as(h(a), h(b)))
                ha1.fail(where + edge(a, "as", b) + " but " + non_edge(h(a), "as", h(b)));
              if (X.edges.sm(a, b) && !Y.edges.sm(h(a), h(b)))
                ha1.fail(where + edge(a, "sm", b) + " but " + non_edge(h(a), "sm", h(b)));
            }
          ha2.count();
          for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
              std::vector<Elem> fiber;
              for (Elem c = 0; c < n; ++c)
                if (h(c) == h(b)) fiber.push_back(c);
              for (Elem b2 : fiber) {
                const Subset& mine = generated[a * n + b2];
                bool minimal = true;
                for (Elem c : fiber) {
                  const Subset& other = generated[a * n + c];
                  if (other != mine && other.is_subset_of(mine)) minimal = false;
                }
                if (!minimal) continue;
                const std::pair<Flavor, const char*> flavors[] = {
                    {Flavor::AS, "as"}, {Flavor::SM, "sm"}, {Flavor::S, "s"}};
                for (const auto& [fl, tag] : flavors)
                  if (Y.edges.has(fl, h(a), h(b)) && !X.edges.has(fl, a, b2))
                    ha2.fail(where + edge(h(a), tag, h(b)) + " but " + non_edge(a, tag, b2) + " with Sg(" +
                             std::to_string(a) + "," + std::to_string(b2) + ") minimal");
              }
            }
        }
      }
  report.checks.push_back(ha1.finish());
  report.checks.push_back(ha2.finish());
}

// ------------------------------------------------------------ relational axioms

struct BinaryPremise {
  Elem a1, a2, b1, b2;
  bool with_diagonal;  // (a1,b1) is also a premise
};

std::vector<Tuple> premise_tuples(const BinaryPremise& p) {
  std::vector<Tuple> gens{{p.a1, p.b2}, {p.a2, p.b1}};
  if (p.with_diagonal) gens.push_back({p.a1, p.b1});
  return gens;
}

std::string binary_counterexample(const FiniteAlgebra& X, const FiniteAlgebra& Y, const BinaryPremise& p,
                                  const char* fa, const char* fb, std::size_t r_size) {
  std::string gens;
  for (const auto& t : premise_tuples(p)) gens += (gens.empty() ? "" : ",") + tuple_label(t);
  return X.name() + " x " + Y.name() + ": " + edge(p.a1, fa, p.a2) + " in " + X.name() + ", " +
         edge(p.b1, fb, p.b2) + " in " + Y.name() + ", R = Sg(" + gens + ") has " + std::to_string(r_size) +
         " pairs and misses " + tuple_label({p.a2, p.b2});
}

void relational_axioms(const std::vector<EdgedAlgebra>& catalog, const std::vector<std::vector<std::size_t>>& groups,
                       const VerifyBudget& budget, AxiomReport& report) {
  Recorder ra1("Relational Axiom 1"), ra2("Relational Axiom 2"), ra3("Relational Axiom 3");
  std::size_t enumerated = 0;
  for (const auto& group : groups) {
    for (std::size_t xi : group)
      for (std::size_t yi : group) {
        const auto& X = catalog[xi];
        const auto& Y = catalog[yi];
        const std::size_t m = Y.algebra.size();
        std::vector<std::pair<BinaryPremise, Recorder*>> premises;
        for (auto [a1, a2] : X.edges.edges(Flavor::AS)) {
          for (auto [b1, b2] : Y.edges.edges(Flavor::SM)) premises.push_back({{a1, a2, b1, b2, false}, &ra1});
          for (auto [b1, b2] : Y.edges.edges(Flavor::AS)) premises.push_back({{a1, a2, b1, b2, true}, &ra2});
        }
        if (premises.empty()) continue;
        const std::array<const FiniteAlgebra*, 2> factors{&X.algebra, &Y.algebra};
        auto generated_size = [&](const BinaryPremise& p) {
          return close_tuples(factors, premise_tuples(p)).tuples.size();
        };
        if (X.algebra.size() * m <= budget.lectic_product_cap) {
          const FiniteAlgebra P = product(X.algebra, Y.algebra);
          const auto subs = enumerate_subuniverses(P, false, budget.lectic_product_cap).subuniverses;
          enumerated += subs.size();
          for (const auto& [p, rec] : premises) {
            rec->count();
            for (const auto& R : subs) {
              if (!R.contains(p.a1 * m + p.b2) || !R.contains(p.a2 * m + p.b1)) continue;
              if (p.with_diagonal && !R.contains(p.a1 * m + p.b1)) continue;
              if (!R.contains(p.a2 * m + p.b2)) {
                rec->fail(binary_counterexample(X.algebra, Y.algebra, p, "as", rec == &ra1 ? "sm" : "as",
                                                generated_size(p)));
                break;
              }
            }
          }
        } else {
          for (const auto& [p, rec] : premises) {
            rec->count();
            const Tuple target{p.a2, p.b2};
            ClosureOptions opts;
            opts.cap = budget.tuple_cap;
            opts.stop_when = [&](const Tuple& t) { return t == target; };
            const auto closure = close_tuples(factors, premise_tuples(p), opts);
            if (closure.stopped) continue;
            if (!closure.complete) {
              rec->undecided();
              continue;
            }
            rec->fail(binary_counterexample(X.algebra, Y.algebra, p, "as", rec == &ra1 ? "sm" : "as",
                                            closure.tuples.size()));
          }
        }
      }
    for (std::size_t xi : group)
      for (std::size_t yi : group)
        for (std::size_t zi : group) {
          const auto& X = catalog[xi];
          const auto& Y = catalog[yi];
          const auto& Z = catalog[zi];
          const auto ex = X.edges.edges(Flavor::SM);
          const auto ey = Y.edges.edges(Flavor::SM);
          const auto ez = Z.edges.edges(Flavor::SM);
          const std::array<const FiniteAlgebra*, 3> factors{&X.algebra, &Y.algebra, &Z.algebra};
          for (auto [a1, a2] : ex)
            for (auto [b1, b2] : ey)
              for (auto [c1, c2] : ez) {
                ra3.count();
                const Tuple target{a2, b2, c2};
                std::vector<Tuple> gens{{a1, b2, c2}, {a2, b1, c2}, {a2, b2, c1}};
                ClosureOptions opts;
                opts.cap = budget.tuple_cap;
                opts.stop_when = [&](const Tuple& t) { return t == target; };
                const auto closure = close_tuples(factors, gens, opts);
                if (closure.stopped) continue;
                if (!closure.complete) {
                  ra3.undecided();
                  continue;
                }
                ra3.fail(X.algebra.name() + " x " + Y.algebra.name() + " x " + Z.algebra.name() + ": " +
                         edge(a1, "sm", a2) + ", " + edge(b1, "sm", b2) + ", " + edge(c1, "sm", c2) + ", R = Sg(" +
                         tuple_label(gens[0]) + "," + tuple_label(gens[1]) + "," + tuple_label(gens[2]) +
                         ") misses " + tuple_label(target));
              }
        }
  }
  auto c1 = ra1.finish();
  auto c2 = ra2.finish();
  const std::string coverage = std::to_string(enumerated) + " product subuniverses enumerated";
  if (enumerated && c1.status == AxiomStatus::Pass) c1.detail = coverage;
  if (enumerated && c2.status == AxiomStatus::Pass) c2.detail = coverage;
  report.checks.push_back(c1);
  report.checks.push_back(c2);
  report.checks.push_back(ra3.finish());
}

}  // namespace

AxiomReport verify_edge_axioms(const std::vector<EdgedAlgebra>& catalog, const VerifyBudget& budget) {
  AxiomReport report;
  for (const auto& m : catalog)
    if (m.edges.has_unknowns() || m.edges.size() != m.algebra.size()) {
      const std::string reason = "edge graph of " + m.algebra.name() + " is incomplete";
      for (const char* name : {"Base Axiom 1", "Base Axiom 2", "Base Axiom 3", "Stronger Base Axiom 1",
                               "Stronger Base Axiom 2", "Stronger Base Axiom 3", "Homomorphism Axiom 1",
                               "Homomorphism Axiom 2", "Relational Axiom 1", "Relational Axiom 2",
                               "Relational Axiom 3"})
        report.checks.push_back(skipped(name, reason));
      return report;
    }
  std::vector<Signature> sigs;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto sig = catalog[i].algebra.signature();
    const auto it = std::find(sigs.begin(), sigs.end(), sig);
    if (it == sigs.end()) {
      sigs.push_back(sig);
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(it - sigs.begin())].push_back(i);
    }
  }
  base_axioms(catalog, budget, report);
  homomorphism_axioms(catalog, groups, budget, report);
  relational_axioms(catalog, groups, budget, report);
  return report;
}

AxiomReport verify_edge_theorems(const FiniteAlgebra& alg, const EdgeGraph& edges, std::size_t subset_cap,
                                 std::size_t cap) {
  AxiomReport report;
  const char* names[] = {"weak connectivity",     "s-min asm-reachability", "single asm-min component",
                         "no reverse edge",       "edge witness terms",     "binary absorption iff asm-closed",
                         "s-edge semilattice",    "arity invariance"};
  if (edges.has_unknowns() || edges.size() != alg.size()) {
    for (const char* name : names) report.checks.push_back(skipped(name, "edge graph is incomplete"));
    return report;
  }
  const std::size_t n = alg.size();
  const auto asm_ca = component_analysis(edges, Flavor::ASM);
  const auto s_ca = component_analysis(edges, Flavor::S);
  const auto reach = reachability(edges, Flavor::ASM);

  {
    Recorder r(names[0]);
    r.count();
    if (asm_ca.weak_components.size() > 1)
      r.fail(alg.name() + ": asm has " + std::to_string(asm_ca.weak_components.size()) + " weak components");
    report.checks.push_back(r.finish());
  }
  {
    Recorder r(names[1]);
    const auto smin = s_ca.min.elements();
    for (Elem a : smin)
      for (Elem b : smin) {
        r.count();
        if (!reach[a * n + b])
          r.fail(alg.name() + ": " + std::to_string(a) + ", " + std::to_string(b) + " in s-min but " +
                 std::to_string(b) + " not asm-reachable from " + std::to_string(a));
      }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r(names[2]);
    r.count();
    if (asm_ca.sinks.size() != 1)
      r.fail(alg.name() + ": asm-min has " + std::to_string(asm_ca.sinks.size()) + " strong components");
    else if (!s_ca.min.is_subset_of(asm_ca.min))
      r.fail(alg.name() + ": s-min {" + subset_label(s_ca.min) + "} not inside asm-min {" + subset_label(asm_ca.min) +
             "}");
    report.checks.push_back(r.finish());
  }
  {
    Recorder r(names[3]);
    for (auto [a, b] : edges.edges(Flavor::S)) {
      r.count();
      if (edges.asm_(b, a)) r.fail(alg.name() + ": " + edge(a, "s", b) + " and " + edge(b, "asm", a));
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r(names[4]);
    const auto f2 = free_algebra(alg, 2, cap);
    std::optional<FreeAlgebra> f3;
    for (auto [a, b] : edges.edges(Flavor::ASM)) {
      r.count();
      bool found = false;
      for (const auto& t : f2.elements)
        if (t.is_essential(0) && t.is_essential(1) && t({a, b}) == b) {
          found = true;
          break;
        }
      if (!found) {
        if (!f3) f3 = free_algebra(alg, 3, cap);
        for (const auto& t : f3->elements) {
          if (!t.is_essential(0) || !t.is_essential(2)) continue;
          for (Elem c = 0; c < n && !found; ++c) found = t({a, c, b}) == b;
          if (found) break;
        }
      }
      if (found) continue;
      if (f2.complete && f3->complete)
        r.fail(alg.name() + ": " + edge(a, "asm", b) + " has no binary or ternary witness term");
      else
        r.undecided();
    }
    report.checks.push_back(r.finish());
  }
  if (n > subset_cap) {
    report.checks.push_back(skipped(names[5], "more than " + std::to_string(subset_cap) + " elements"));
  } else {
    Recorder r(names[5]);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Subset B(n);
      for (Elem e = 0; e < n; ++e)
        if (mask >> e & 1) B.insert(e);
      r.count();
      try {
        const auto res = is_2_absorbing(alg, B, &edges, cap);
        if (!res.two_methods) r.undecided();
        if (res.absorbing && !res.subuniverse)
          r.fail(alg.name() + ": {" + subset_label(B) + "} binary absorbing but not a subuniverse");
      } catch (const CrossCheckFailed& e) {
        r.fail(e.what());
      }
    }
    report.checks.push_back(r.finish());
  }
  {
    Recorder r(names[6]);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (a == b) continue;
        r.count();
        const bool sl = is_subuniverse(alg, Subset(n, {a, b})) && semilattice_on_pair(alg, a, b);
        if (sl != edges.s(a, b))
          r.fail(alg.name() + ": " + (sl ? "{" + std::to_string(a) + "," + std::to_string(b) +
                                               "} is a semilattice absorbing " + std::to_string(b) + " but " +
                                               non_edge(a, "s", b)
                                         : edge(a, "s", b) + " but {" + std::to_string(a) + "," +
                                               std::to_string(b) + "} is no such semilattice"));
      }
    report.checks.push_back(r.finish());
  }
  {
    AxiomCheck c;
    c.name = names[7];
    EdgeConfig config;
    config.closure_cap = cap;
    config.cross_check_sedges = false;
    const unsigned q = static_cast<unsigned>(least_prime_above(n));
    config.arities = {q};
    c.instances = 1;
    try {
      const EdgeGraph other = compute_edges(alg, config);
      if (other.has_unknowns()) {
        c.status = AxiomStatus::Skipped;
        c.detail = "arity " + std::to_string(q) + " exceeds the closure cap";
      } else if (!(other == edges)) {
        c.status = AxiomStatus::Reported;
        std::ostringstream os;
        os << alg.name() << ": edges at arity " << q << " differ from the per-pair default";
        c.detail = os.str();
      } else {
        c.detail = "default arities and arity " + std::to_string(q) + " agree";
      }
    } catch (const NoCyclicWitness& e) {
      c.status = AxiomStatus::Skipped;
      c.detail = e.what();
    }
    report.checks.push_back(c);
  }
  return report;
}

BinaryRelation tolerance_generated(const FiniteAlgebra& alg, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = alg.size();
  std::vector<Tuple> gens;
  for (Elem a = 0; a < n; ++a) gens.push_back({a, a});
  for (auto [a, b] : pairs) {
    gens.push_back({a, b});
    gens.push_back({b, a});
  }
  BinaryRelation r(n, n);
  for (const auto& t : close_power(alg, 2, std::move(gens)).tuples) r.insert(t[0], t[1]);
  return r;
}

std::vector<Elem> shift_tolerance_chain(const FiniteAlgebra& alg, const EdgeGraph& edges, const BinaryRelation& S,
                                        const std::vector<Elem>& chain, std::size_t i, Elem d_i,
                                        const TermOperation& f) {
  const std::size_t n = alg.size();
  if (chain.empty() || i >= chain.size()) throw PreconditionViolated("shift_tolerance_chain: index out of range");
  if (S.rows() != n || S.cols() != n || !S.is_tolerance(alg))
    throw PreconditionViolated("shift_tolerance_chain: S is not a tolerance");
  if (f.arity() != 2 || f.base() != n) throw PreconditionViolated("shift_tolerance_chain: f must be binary on A");
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    if (!S.contains(chain[j], chain[j + 1]))
      throw PreconditionViolated("shift_tolerance_chain: (" + std::to_string(chain[j]) + "," +
                                 std::to_string(chain[j + 1]) + ") not in S");

  // Shortest s-path from c_i to d_i.
  std::vector<Elem> prev(n, static_cast<Elem>(n));
  std::deque<Elem> queue{chain[i]};
  prev[chain[i]] = chain[i];
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem y = 0; y < n; ++y)
      if (prev[y] == n && x != y && edges.s(x, y)) {
        prev[y] = x;
        queue.push_back(y);
      }
  }
  if (prev[d_i] == n)
    throw PreconditionViolated("shift_tolerance_chain: no s-path from " + std::to_string(chain[i]) + " to " +
                               std::to_string(d_i));
  std::vector<Elem> path{d_i};
  while (path.back() != chain[i]) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());

  std::vector<Elem> d = chain;
  for (std::size_t l = 1; l < path.size(); ++l)
    for (auto& e : d) e = f({e, path[l]});

  if (d[i] != d_i) throw CrossCheckFailed("shift_tolerance_chain: f does not follow the s-path");
  const auto sreach = reachability(edges, Flavor::S);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (!sreach[chain[j] * n + d[j]])
      throw CrossCheckFailed("shift_tolerance_chain: " + std::to_string(d[j]) + " not s-reachable from " +
                             std::to_string(chain[j]));
    if (j + 1 < d.size() && !S.contains(d[j], d[j + 1]))
      throw CrossCheckFailed("shift_tolerance_chain: shifted pair (" + std::to_string(d[j]) + "," +
                             std::to_string(d[j + 1]) + ") left S");
  }
  return d;
}

}  // namespace taylor
