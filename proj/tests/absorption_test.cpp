#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "taylor/absorption.hpp"
#include "taylor/catalog.hpp"
#include "taylor/closure.hpp"
#include "taylor/edges.hpp"
#include "taylor/error.hpp"
#include "taylor/free_algebra.hpp"

namespace taylor {
namespace {

std::vector<FiniteAlgebra> hs_members() {
  const auto tmpl = Template::hs_closure(builtin_catalog());
  std::vector<FiniteAlgebra> out;
  for (const auto& m : tmpl.members()) out.push_back(m.algebra);
  return out;
}

std::vector<Subset> nonempty_subsets(std::size_t n) {
  std::vector<Subset> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Subset s(n);
    for (Elem e = 0; e < n; ++e)
      if (mask >> e & 1) s.insert(e);
    out.push_back(s);
  }
  return out;
}

std::set<Elem> as_set(const Subset& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

// Projectivity over every term table of arity <= 3.
struct OracleProjectivity {
  bool projective = true;
  bool strongly = true;
};

OracleProjectivity oracle_projectivity(const FiniteAlgebra& alg, const std::set<Elem>& B) {
  OracleProjectivity out;
  const std::size_t n = alg.size();
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& t : oracle::terms(alg, k)) {
      std::vector<bool> lands(k, true), essential(k, false);
      std::size_t flat = 0;
      oracle::each_tuple(n, k, [&](const std::vector<Elem>& x) {
        for (unsigned i = 0; i < k; ++i) {
          if (B.count(x[i]) && !B.count(t[flat])) lands[i] = false;
          std::vector<Elem> y = x;
          for (Elem v = 0; v < n; ++v) {
            y[i] = v;
            std::size_t idx = 0;
            for (Elem e : y) idx = idx * n + e;
            if (t[idx] != t[flat]) essential[i] = true;
          }
        }
        ++flat;
      });
      bool some = false;
      for (unsigned i = 0; i < k; ++i) {
        if (lands[i]) some = true;
        if (essential[i] && !lands[i]) out.strongly = false;
      }
      if (!some) out.projective = false;
    }
  return out;
}

TEST(Absorption, WitnessCheck) {
  const auto meet = basic_operation(semilattice2(), 0);
  EXPECT_TRUE(witnesses_absorption(meet, Subset(2, {0})));
  EXPECT_FALSE(witnesses_absorption(meet, Subset(2, {1})));
  const auto sum = basic_operation(z2_minority(), 0);
  EXPECT_FALSE(witnesses_absorption(sum, Subset(2, {0})));
  const auto maj = basic_operation(majority2(), 0);
  EXPECT_TRUE(witnesses_absorption(maj, Subset(2, {0})));
  EXPECT_TRUE(witnesses_absorption(maj, Subset(2, {1})));
}

TEST(Absorption, A1Examples) {
  const auto A = a1();
  const auto zero = is_2_absorbing(A, Subset(4, {0}));
  EXPECT_TRUE(zero.absorbing);
  EXPECT_TRUE(zero.subuniverse);
  ASSERT_TRUE(zero.witness.has_value());
  ASSERT_TRUE(zero.witness->term.has_value());
  EXPECT_TRUE(witnesses_absorption(*zero.witness->term, Subset(4, {0})));
  EXPECT_TRUE(is_3_absorbing(A, Subset(4, {0})).absorbing);
  const auto pair = is_2_absorbing(A, Subset(4, {1, 2}));
  EXPECT_TRUE(pair.subuniverse);
  EXPECT_FALSE(pair.absorbing);
  EXPECT_FALSE(pair.asm_closed);
}

TEST(Absorption, TwoElementSeeds) {
  EXPECT_TRUE(is_2_absorbing(semilattice2(), Subset(2, {0})).absorbing);
  EXPECT_FALSE(is_2_absorbing(semilattice2(), Subset(2, {1})).absorbing);
  EXPECT_FALSE(is_2_absorbing(z2_minority(), Subset(2, {0})).absorbing);
  EXPECT_FALSE(is_3_absorbing(z2_minority(), Subset(2, {1})).absorbing);
  EXPECT_FALSE(is_2_absorbing(majority2(), Subset(2, {0})).absorbing);
  EXPECT_TRUE(is_3_absorbing(majority2(), Subset(2, {0})).absorbing);
}

TEST(Absorption, AgreesWithTermSearchOnCatalog) {
  for (const auto& alg : hs_members()) {
    const auto edges = compute_edges(alg);
    for (const auto& B : nonempty_subsets(alg.size())) {
      const auto s = as_set(B);
      const auto two = is_2_absorbing(alg, B, &edges);
      const auto three = is_3_absorbing(alg, B);
      EXPECT_EQ(two.absorbing, oracle::two_absorbing(alg, s)) << alg.name() << " " << B.to_string();
      EXPECT_EQ(three.absorbing, oracle::three_absorbing(alg, s)) << alg.name() << " " << B.to_string();
      EXPECT_EQ(two.subuniverse, oracle::closed(alg, s));
      if (two.absorbing || three.absorbing) {
        EXPECT_TRUE(oracle::closed(alg, s));
      }
      if (two.absorbing) {
        EXPECT_TRUE(three.absorbing);
      }
      EXPECT_TRUE(two.two_methods);
      EXPECT_EQ(two.absorbing, two.asm_closed && two.subuniverse);
    }
  }
}

TEST(Absorption, ProjectivityAgreesWithTermSearch) {
  for (const auto& alg : hs_members())
    for (const auto& B : nonempty_subsets(alg.size())) {
      if (!is_subuniverse(alg, B)) continue;
      const auto got = bounded_projectivity(alg, B, 3);
      const auto want = oracle_projectivity(alg, as_set(B));
      EXPECT_EQ(got.verified_cap, 3u);
      EXPECT_EQ(got.projective_upto, want.projective) << alg.name() << " " << B.to_string();
      EXPECT_EQ(got.strongly_projective_upto, want.strongly) << alg.name() << " " << B.to_string();
    }
}

TEST(Absorption, MajorityProjectivity) {
  const auto p = bounded_projectivity(majority2(), Subset(2, {0}), 3);
  EXPECT_FALSE(p.projective_upto);
  EXPECT_FALSE(p.strongly_projective_upto);
  ASSERT_TRUE(p.projective_counterexample.has_value());
  EXPECT_EQ(p.projective_counterexample->arity(), 3u);
  const auto s = bounded_projectivity(semilattice2(), Subset(2, {0}), 3);
  EXPECT_TRUE(s.projective_upto);
  EXPECT_TRUE(s.strongly_projective_upto);
  EXPECT_TRUE(s.absorbing_element);
}

TEST(Absorption, ReportAuditsHold) {
  for (const auto& alg : hs_members()) {
    const auto r = absorption_report(alg);
    EXPECT_TRUE(r.ok()) << alg.name() << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_EQ(r.subsets.size(), (std::size_t{1} << alg.size()) - 1);
    for (const auto& t : r.transports) EXPECT_TRUE(t.holds) << alg.name() << " " << t.quotient << " " << t.direction;
    for (const auto& c : r.subsets)
      if (c.binary.absorbing) {
        ASSERT_TRUE(c.projectivity.has_value());
        EXPECT_TRUE(c.projectivity->strongly_projective_upto);
      }
  }
  const auto r = absorption_report(a1());
  const auto* zero = r.find(Subset(4, {0}));
  ASSERT_NE(zero, nullptr);
  EXPECT_TRUE(zero->binary.absorbing);
  EXPECT_TRUE(zero->projectivity->absorbing_element);
  EXPECT_FALSE(r.transports.empty());
}

TEST(Absorption, ReportRefusesLargeAlgebras) {
  const auto big = power(z2_minority(), 3);
  EXPECT_THROW(absorption_report(big, 6), CapExceeded);
}

}  // namespace
}  // namespace taylor
