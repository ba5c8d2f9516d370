#include "taylor/absorption.hpp"

#include <algorithm>

#include "taylor/congruence.hpp"
#include "taylor/detail/odometer.hpp"
#include "taylor/error.hpp"

namespace taylor {

std::string to_string(AbsorptionKind k) {
  switch (k) {
    case AbsorptionKind::Binary: return "binary";
    case AbsorptionKind::Ternary: return "ternary";
    case AbsorptionKind::NAry: return "n-ary";
    case AbsorptionKind::Projective: return "projective";
    case AbsorptionKind::StronglyProjective: return "strongly-projective";
    default: return "absorbing-element";
  }
}

bool witnesses_absorption(const TermOperation& t, const Subset& B) {
  const unsigned k = t.arity();
  std::size_t flat = 0;
  return detail::for_each_index_tuple(k, t.base(), [&](const std::vector<std::size_t>& idx) {
    const Elem value = t.at(flat++);
    unsigned outside = 0;
    for (std::size_t e : idx)
      if (!B.contains(static_cast<Elem>(e))) ++outside;
    return outside > 1 || B.contains(value);
  });
}

namespace {

// Smallest witness term among the candidates, or nullopt.
std::optional<TermOperation> find_witness(const FreeAlgebra& f, const Subset& B) {
  std::optional<TermOperation> best;
  for (const auto& t : f.elements) {
    if (!witnesses_absorption(t, B)) continue;
    if (!best || (t.has_term() && best->has_term() && term_size(t.term()) < term_size(best->term()))) best = t;
  }
  return best;
}

AbsorptionWitness make_witness(const Subset& B, AbsorptionKind kind, TermOperation t, std::string method) {
  if (!witnesses_absorption(t, B)) throw CrossCheckFailed("absorption witness does not replay");
  return AbsorptionWitness{B, kind, std::move(t), {}, std::move(method)};
}

BinaryAbsorption binary_with(const FiniteAlgebra& alg, const Subset& B, const EdgeGraph& edges,
                             const FreeAlgebra& f2) {
  BinaryAbsorption out;
  out.subuniverse = is_subuniverse(alg, B);
  out.asm_closed = is_closed(edges, Flavor::ASM, B);
  const auto w = find_witness(f2, B);
  if (w) out.witness = make_witness(B, AbsorptionKind::Binary, *w, "F(2) witness search");
  if (f2.complete) {
    out.absorbing = w.has_value();
    if (out.absorbing != out.asm_closed && !edges.has_unknowns())
      throw CrossCheckFailed(alg.name() + ": {" + subset_label(B) + "} binary absorption " +
                             (out.absorbing ? "holds" : "fails") + " but asm-closedness " +
                             (out.asm_closed ? "holds" : "fails"));
  } else {
    out.two_methods = false;
    out.absorbing = w.has_value() || out.asm_closed;
  }
  return out;
}

TernaryAbsorption ternary_with(const FiniteAlgebra& alg, const Subset& B, const FreeAlgebra* f3) {
  const std::size_t n = alg.size();
  std::vector<Tuple> gens;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (B.contains(x) || B.contains(y)) gens.push_back({x, y});
  ClosureOptions opts;
  opts.stop_when = [&](const Tuple& t) { return !B.contains(t[0]) && !B.contains(t[1]); };
  const auto closure = close_power(alg, 2, gens, opts);

  TernaryAbsorption out;
  out.absorbing = !closure.stopped;
  out.certificate.B = B;
  out.certificate.kind = AbsorptionKind::Ternary;
  if (out.absorbing) {
    out.certificate.certificate = std::move(gens);
    out.certificate.method = "(B x A) u (A x B) closed in A^2";
  } else {
    out.certificate.certificate = {closure.tuples.back()};
    out.certificate.method = "(B x A) u (A x B) generates an outside pair";
  }
  if (f3 && f3->complete) {
    out.cross_checked = true;
    const auto w = find_witness(*f3, B);
    if (w) out.witness = make_witness(B, AbsorptionKind::Ternary, *w, "F(3) witness search");
    if (w.has_value() != out.absorbing)
      throw CrossCheckFailed(alg.name() + ": {" + subset_label(B) + "} structural ternary absorption " +
                             (out.absorbing ? "holds" : "fails") + " but the F(3) search disagrees");
  }
  return out;
}

Projectivity projectivity_with(const Subset& B, const std::vector<FreeAlgebra>& frees) {
  Projectivity out;
  out.verified_cap = 1;
  for (const auto& f : frees) {
    if (!f.complete) break;
    for (const auto& t : f.elements) {
      const unsigned k = t.arity();
      std::vector<bool> pulls(k, true);
      std::size_t flat = 0;
      detail::for_each_index_tuple(k, t.base(), [&](const std::vector<std::size_t>& idx) {
        if (!B.contains(t.at(flat++)))
          for (unsigned i = 0; i < k; ++i)
            if (B.contains(static_cast<Elem>(idx[i]))) pulls[i] = false;
        return true;
      });
      bool some = false, every_essential = true;
      for (unsigned i = 0; i < k; ++i) {
        some = some || pulls[i];
        if (!pulls[i] && t.is_essential(i)) every_essential = false;
      }
      if (!some && out.projective_upto) {
        out.projective_upto = false;
        out.projective_counterexample = t;
      }
      if (!every_essential && out.strongly_projective_upto) {
        out.strongly_projective_upto = false;
        out.strong_counterexample = t;
      }
    }
    out.verified_cap = f.generators;
  }
  out.absorbing_element = B.count() == 1 && out.strongly_projective_upto;
  return out;
}

std::vector<FreeAlgebra> frees_upto(const FiniteAlgebra& alg, unsigned arity_cap, std::size_t cap) {
  std::vector<FreeAlgebra> out;
  for (unsigned k = 2; k <= arity_cap; ++k) {
    out.push_back(free_algebra(alg, k, cap));
    if (!out.back().complete) break;
  }
  return out;
}

Subset image(const Partition& theta, const Subset& C) {
  Subset d(theta.block_count());
  for (Elem e : C.elements()) d.insert(static_cast<Elem>(theta.block(e)));
  return d;
}

Subset preimage(const Partition& theta, const Subset& D) {
  Subset c(theta.size());
  for (Elem e = 0; e < theta.size(); ++e)
    if (D.contains(static_cast<Elem>(theta.block(e)))) c.insert(e);
  return c;
}

}  // namespace

BinaryAbsorption is_2_absorbing(const FiniteAlgebra& alg, const Subset& B, const EdgeGraph* edges,
                                std::size_t cap) {
  if (B.empty()) throw PreconditionViolated("is_2_absorbing: empty subset");
  std::optional<EdgeGraph> own;
  if (!edges) {
    EdgeConfig config;
    config.closure_cap = cap;
    own = compute_edges(alg, config);
    edges = &*own;
  }
  return binary_with(alg, B, *edges, free_algebra(alg, 2, cap));
}

TernaryAbsorption is_3_absorbing(const FiniteAlgebra& alg, const Subset& B, std::size_t cap) {
  if (B.empty()) throw PreconditionViolated("is_3_absorbing: empty subset");
  const auto f3 = free_algebra(alg, 3, cap);
  return ternary_with(alg, B, &f3);
}

Projectivity bounded_projectivity(const FiniteAlgebra& alg, const Subset& B, unsigned arity_cap, std::size_t cap) {
  if (B.empty() || !is_subuniverse(alg, B))
    throw PreconditionViolated("bounded_projectivity: {" + subset_label(B) + "} is not a subuniverse");
  return projectivity_with(B, frees_upto(alg, arity_cap, cap));
}

const SubsetClassification* AbsorptionReport::find(const Subset& B) const {
  for (const auto& s : subsets)
    if (s.B == B) return &s;
  return nullptr;
}

AbsorptionReport absorption_report(const FiniteAlgebra& alg, std::size_t subset_cap, unsigned projectivity_cap,
                                   std::size_t cap) {
  const std::size_t n = alg.size();
  if (n > subset_cap) throw CapExceeded("absorption report of " + alg.name(), subset_cap);
  AbsorptionReport report;
  report.algebra = alg.name();

  EdgeConfig config;
  config.closure_cap = cap;
  const EdgeGraph edges = compute_edges(alg, config);
  const auto frees = frees_upto(alg, std::max(projectivity_cap, 3u), cap);
  const FreeAlgebra f2 = frees.size() > 0 ? frees[0] : free_algebra(alg, 2, cap);
  const FreeAlgebra* f3 = frees.size() > 1 ? &frees[1] : nullptr;
  std::vector<FreeAlgebra> proj_frees;
  for (const auto& f : frees)
    if (f.generators <= projectivity_cap) proj_frees.push_back(f);

  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Subset B(n);
    for (Elem e = 0; e < n; ++e)
      if (mask >> e & 1) B.insert(e);
    SubsetClassification c;
    c.B = B;
    c.subuniverse = is_subuniverse(alg, B);
    c.binary = binary_with(alg, B, edges, f2);
    c.ternary = ternary_with(alg, B, f3);
    const std::string label = "{" + subset_label(B) + "}";
    if ((c.binary.absorbing || c.ternary.absorbing) && !c.subuniverse)
      report.failures.push_back(label + " absorbs but is not a subuniverse");
    if (c.subuniverse) {
      c.projectivity = projectivity_with(B, proj_frees);
      if (c.projectivity->verified_cap >= 2 && (c.binary.absorbing != c.projectivity->projective_upto ||
                                                c.binary.absorbing != c.projectivity->strongly_projective_upto))
        report.failures.push_back(label + " binary absorption, projectivity and strong projectivity disagree");
    }
    report.subsets.push_back(std::move(c));
  }
  std::sort(report.subsets.begin(), report.subsets.end(),
            [](const SubsetClassification& x, const SubsetClassification& y) { return x.B < y.B; });
  report.projectivity_cap = 1;
  for (const auto& f : proj_frees)
    if (f.complete) report.projectivity_cap = f.generators;

  // Transport of witnesses along every proper quotient map.
  for (const auto& theta : congruences(alg, subset_cap).all) {
    if (theta.is_discrete()) continue;
    const FiniteAlgebra q = quotient(alg, theta);
    auto replay = [&](const TermOperation& w, const FiniteAlgebra& target, const Subset& to) {
      return w.has_term() && witnesses_absorption(realize(w.term(), target, w.arity()), to);
    };
    for (const auto& c : report.subsets) {
      const std::optional<AbsorptionWitness>* ws[] = {&c.binary.witness, &c.ternary.witness};
      for (const auto* w : ws) {
        if (!w->has_value() || !(*w)->term) continue;
        TransportCheck t{q.name(), "image", c.B, image(theta, c.B), (*w)->kind, false};
        t.holds = replay(*(*w)->term, q, t.to);
        report.transports.push_back(t);
      }
    }
    const std::size_t m = q.size();
    const auto qf2 = free_algebra(q, 2, cap);
    const auto qf3 = free_algebra(q, 3, cap);
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      Subset D(m);
      for (Elem e = 0; e < m; ++e)
        if (mask >> e & 1) D.insert(e);
      const std::pair<const FreeAlgebra*, AbsorptionKind> searches[] = {{&qf2, AbsorptionKind::Binary},
                                                                        {&qf3, AbsorptionKind::Ternary}};
      for (const auto& [f, kind] : searches) {
        const auto w = find_witness(*f, D);
        if (!w) continue;
        TransportCheck t{q.name(), "preimage", D, preimage(theta, D), kind, false};
        t.holds = replay(*w, alg, t.to);
        report.transports.push_back(t);
      }
    }
  }
  for (const auto& t : report.transports)
    if (!t.holds)
      report.failures.push_back(t.direction + " of {" + subset_label(t.from) + "} along " + t.quotient + " loses " +
                                to_string(t.kind) + " absorption");
  return report;
}

}  // namespace taylor
