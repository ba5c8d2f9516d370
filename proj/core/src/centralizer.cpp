#include "taylor/centralizer.hpp"

#include <set>
#include <sstream>

#include "taylor/error.hpp"

namespace taylor {

bool centralizer_condition(const FiniteAlgebra& alg, const Partition& alpha, const Partition& beta) {
  if (!alpha.is_congruence(alg)) throw NotACongruence("centralizer_condition: alpha " + alpha.to_string());
  if (!beta.is_congruence(alg)) throw NotACongruence("centralizer_condition: beta " + beta.to_string());
  const std::size_t n = alg.size();
  std::vector<Tuple> gens;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (alpha.related(a, b)) gens.push_back({a, a, b, b});
      if (beta.related(a, b)) gens.push_back({a, b, a, b});
    }
  ClosureOptions opts;
  opts.stop_when = [](const Tuple& m) { return m[0] == m[1] && m[2] != m[3]; };
  auto closure = close_power(alg, 4, std::move(gens), opts);
  return !closure.stopped;
}

bool is_affine(const FiniteAlgebra& alg, std::size_t cap) {
  const auto one = Partition::indiscrete(alg.size());
  if (!centralizer_condition(alg, one, one)) return false;
  return taylor_report(alg, cap).has_taylor == Tristate::Yes;
}

namespace {

// Empty string when every section is a bijection graph.
std::string check_sections(std::size_t n, const std::set<Tuple>& rel) {
  for (Elem a = 0; a < n; ++a)
    for (unsigned fixed = 0; fixed < 3; ++fixed) {
      const unsigned u = fixed == 0 ? 1 : 0;
      const unsigned v = fixed == 2 ? 1 : 2;
      std::vector<int> fwd(n, -1), bwd(n, -1);
      bool ok = true;
      for (const auto& t : rel) {
        if (t[fixed] != a) continue;
        if (fwd[t[u]] != -1 || bwd[t[v]] != -1) ok = false;
        fwd[t[u]] = static_cast<int>(t[v]);
        bwd[t[v]] = static_cast<int>(t[u]);
      }
      for (std::size_t x = 0; x < n && ok; ++x)
        if (fwd[x] == -1 || bwd[x] == -1) ok = false;
      if (!ok) {
        std::ostringstream os;
        os << "section R_{" << a << "," << (fixed + 1) << "} is not the graph of a bijection";
        return os.str();
      }
    }
  return {};
}

}  // namespace

AffineReport affine_checks(const FiniteAlgebra& alg, const std::optional<std::vector<Tuple>>& r3, std::size_t cap) {
  AffineReport report;
  const auto one = Partition::indiscrete(alg.size());
  report.is_abelian = centralizer_condition(alg, one, one);
  report.has_taylor = taylor_report(alg, cap).has_taylor;
  report.is_affine = report.is_abelian && report.has_taylor == Tristate::Yes;
  if (r3) {
    std::set<Tuple> rel(r3->begin(), r3->end());
    for (const auto& t : rel)
      if (t.size() != 3 || t[0] >= alg.size() || t[1] >= alg.size() || t[2] >= alg.size())
        throw NotCompatible("affine_checks: malformed ternary tuple");
    auto closure = close_power(alg, 3, std::vector<Tuple>(rel.begin(), rel.end()));
    if (closure.tuples.size() != rel.size()) throw NotCompatible("affine_checks: relation is not a subuniverse of A^3");
    report.r3_failure = check_sections(alg.size(), rel);
    report.r3_criterion = report.r3_failure.empty();
  }
  return report;
}

}  // namespace taylor
