#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "taylor/catalog.hpp"
#include "taylor/centralizer.hpp"
#include "taylor/closure.hpp"
#include "taylor/congruence.hpp"
#include "taylor/error.hpp"
#include "taylor/homomorphism.hpp"

namespace taylor {
namespace {

std::set<Elem> as_set(const Subset& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

FiniteAlgebra trivial_algebra() { return FiniteAlgebra("one", 1, {OperationTable("f", 3, {0})}); }

TEST(Validation, CatalogAlgebrasAreValidAndIdempotent) {
  for (const auto& alg : builtin_catalog()) {
    const auto r = validate_algebra(alg);
    EXPECT_TRUE(r.valid()) << alg.name();
    EXPECT_TRUE(r.idempotent()) << alg.name();
  }
}

TEST(Validation, ReportsMalformedTables) {
  const FiniteAlgebra bad("bad", 2, {OperationTable("m", 2, {0, 2, 1})});
  const auto r = validate_algebra(bad);
  EXPECT_FALSE(r.valid());
  EXPECT_THROW(require_valid(bad), Error);
  const FiniteAlgebra lazy("lazy", 2, {OperationTable("m", 2, {1, 0, 0, 1})});
  EXPECT_FALSE(validate_algebra(lazy).idempotent());
}

TEST(Subuniverses, GeneratedSubuniversesOfA1) {
  const auto A = a1();
  EXPECT_EQ(sg(A, {1, 2}), (Subset(4, {1, 2})));
  EXPECT_EQ(sg(A, {1, 2, 3}), Subset::full(4));
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(sg(A, {a}), (Subset(4, {a})));
}

TEST(Subuniverses, ClosureOperatorLawsOnCatalog) {
  for (const auto& alg : builtin_catalog()) {
    const std::size_t n = alg.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Subset s(n);
      for (Elem e = 0; e < n; ++e)
        if (mask >> e & 1) s.insert(e);
      const Subset c = sg(alg, s);
      EXPECT_TRUE(s.is_subset_of(c));
      EXPECT_EQ(sg(alg, c), c);
      EXPECT_EQ(as_set(c), oracle::sg(alg, as_set(s))) << alg.name() << " seed " << subset_label(s);
      for (Elem extra = 0; extra < n; ++extra) {
        Subset bigger = s;
        bigger.insert(extra);
        EXPECT_TRUE(c.is_subset_of(sg(alg, bigger)));
      }
    }
  }
}

TEST(Subuniverses, EnumerationMatchesBruteForce) {
  for (const auto& alg : builtin_catalog()) {
    const auto list = enumerate_subuniverses(alg, false);
    std::set<std::set<Elem>> got, want;
    for (const auto& s : list.subuniverses) got.insert(as_set(s));
    const std::size_t n = alg.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::set<Elem> s;
      for (Elem e = 0; e < n; ++e)
        if (mask >> e & 1) s.insert(e);
      if (oracle::closed(alg, s)) want.insert(s);
    }
    EXPECT_EQ(got, want) << alg.name();
  }
  const auto semi = enumerate_subuniverses(semilattice2(), false);
  EXPECT_EQ(semi.subuniverses.size(), 3u);
}

TEST(Subuniverses, A1PairsClosedAndTripleNot) {
  const auto A = a1();
  for (Elem i = 1; i < 4; ++i) {
    EXPECT_TRUE(is_subuniverse(A, Subset(4, {0, i})));
    for (Elem j = i + 1; j < 4; ++j) EXPECT_TRUE(is_subuniverse(A, Subset(4, {i, j})));
  }
  EXPECT_FALSE(is_subuniverse(A, Subset(4, {1, 2, 3})));
}

TEST(Subuniverses, OneElementAlgebraHasNoProperSubuniverse) {
  EXPECT_TRUE(enumerate_subuniverses(trivial_algebra(), true).subuniverses.empty());
}

TEST(Subuniverses, CapIsEnforced) {
  const auto big = power(z2_minority(), 4);
  EXPECT_THROW(enumerate_subuniverses(big, false, 8), CapExceeded);
}

TEST(Derivations, A1OnPairIsMinority) {
  const auto B = subalgebra(a1(), Subset(4, {1, 2}));
  EXPECT_EQ(B.size(), 2u);
  EXPECT_EQ(B.op(0).table(), z2_minority().op(0).table());
}

TEST(Derivations, QuotientByZeroIsACopy) {
  for (const auto& alg : builtin_catalog()) {
    const auto q = quotient(alg, Partition::discrete(alg.size()));
    EXPECT_EQ(q.size(), alg.size());
    EXPECT_EQ(q.op(0).table(), alg.op(0).table());
  }
}

TEST(Derivations, Z2SquaredActsCoordinatewise) {
  const auto Z = z2_minority();
  const auto sq = power(Z, 2);
  ASSERT_EQ(sq.size(), 4u);
  oracle::each_tuple(4, 3, [&](const std::vector<Elem>& x) {
    const Elem v = sq.op(0)(x);
    Elem hi = 0, lo = 0;
    for (Elem e : x) {
      hi ^= e >> 1;
      lo ^= e & 1;
    }
    EXPECT_EQ(v, hi * 2 + lo);
  });
}

TEST(Derivations, ErrorsOnBadInput) {
  EXPECT_THROW(derive_algebra(a1(), SubalgebraOf{Subset(4, {1, 2, 3})}), NotClosed);
  EXPECT_THROW(derive_algebra(a1(), QuotientBy{Partition(std::vector<std::size_t>{0, 0, 1, 1})}), NotACongruence);
  const auto semi = semilattice2();
  EXPECT_THROW(derive_algebra(a1(), ProductWith{&semi}), SignatureMismatch);
}

TEST(Congruences, MatchBruteForceOnCatalog) {
  for (const auto& alg : builtin_catalog()) {
    const auto report = congruences(alg);
    std::set<std::vector<std::size_t>> got, want;
    for (const auto& p : report.all) got.insert(p.labels());
    for (const auto& p : oracle::congruences(alg)) want.insert(p);
    EXPECT_EQ(got, want) << alg.name();
  }
}

TEST(Congruences, TwoElementAlgebrasAreSimple) {
  for (const auto& alg : {z2_minority(), semilattice2()}) {
    const auto r = congruences(alg);
    EXPECT_EQ(r.all.size(), 2u);
    ASSERT_TRUE(r.monolith);
    EXPECT_TRUE(r.monolith->is_indiscrete());
    EXPECT_TRUE(r.subdirectly_irreducible);
  }
}

TEST(Congruences, Z2SquaredHasProjectionKernelsAndIsNotSI) {
  const auto sq = power(z2_minority(), 2);
  const auto r = congruences(sq);
  const Partition first(std::vector<std::size_t>{0, 0, 1, 1});
  const Partition second(std::vector<std::size_t>{0, 1, 0, 1});
  EXPECT_NE(std::find(r.all.begin(), r.all.end(), first), r.all.end());
  EXPECT_NE(std::find(r.all.begin(), r.all.end(), second), r.all.end());
  EXPECT_FALSE(r.subdirectly_irreducible);
  EXPECT_FALSE(r.monolith);
}

TEST(Congruences, OneElementAlgebraIsNotSI) { EXPECT_FALSE(congruences(trivial_algebra()).subdirectly_irreducible); }

TEST(Links, IdentityGraphLinksNothing) {
  const auto l = link_structure(BinaryRelation::diagonal(2), 1);
  EXPECT_EQ(l.tol, BinaryRelation::diagonal(2));
  EXPECT_TRUE(l.lk.is_discrete());
  EXPECT_FALSE(l.tol_connected);
}

TEST(Links, FullRelationIsConnected) {
  const auto l = link_structure(BinaryRelation::full(2, 3), 1);
  EXPECT_EQ(l.tol, BinaryRelation::full(2, 2));
  EXPECT_TRUE(l.tol_connected);
  EXPECT_TRUE(l.full_row_exists);
}

TEST(Links, SharedNeighbourLinksBothRows) {
  const auto r = BinaryRelation::from_pairs(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const auto l = link_structure(r, 1);
  EXPECT_EQ(l.tol, BinaryRelation::full(2, 2));
  EXPECT_TRUE(l.tol_connected);
  EXPECT_TRUE(l.lk.is_indiscrete());
}

TEST(Links, RejectsNonSubdirect) {
  EXPECT_THROW(link_structure(BinaryRelation::from_pairs(2, 2, {{0, 0}}), 1), NotSubdirect);
}

TEST(Links, ConnectivityAgreesOnBothSidesForSubdirectSubuniverses) {
  for (const auto& alg : builtin_catalog()) {
    const std::size_t n = alg.size();
    const auto sq = power(alg, 2);
    for (const auto& U : enumerate_subuniverses(sq, false, 16).subuniverses) {
      BinaryRelation r(n, n);
      for (Elem e : U.elements()) r.insert(e / static_cast<Elem>(n), e % static_cast<Elem>(n));
      if (!r.is_subdirect()) continue;
      const auto l1 = link_structure(r, 1);
      const auto l2 = link_structure(r, 2);
      EXPECT_EQ(l1.tol_connected, l2.tol_connected);
      EXPECT_TRUE(l1.tol.is_tolerance(alg));
      EXPECT_TRUE(l1.lk.is_congruence(alg));
      EXPECT_TRUE(l2.lk.is_congruence(alg));
    }
  }
}

TEST(Homomorphisms, MatchBruteForce) {
  const auto cat = builtin_catalog();
  for (const auto& a : cat)
    for (const auto& b : cat) {
      if (!a.same_signature(b)) continue;
      std::set<std::vector<Elem>> got, want;
      for (const auto& h : homomorphisms_between(a, b)) got.insert(h.map);
      for (const auto& m : oracle::homomorphisms(a, b)) want.insert(m);
      EXPECT_EQ(got, want) << a.name() << " -> " << b.name();
    }
}

TEST(Homomorphisms, KnownCounts) {
  const auto z = homomorphisms_between(z2_minority(), z2_minority());
  std::set<std::vector<Elem>> maps;
  for (const auto& h : z) maps.insert(h.map);
  EXPECT_EQ(maps, (std::set<std::vector<Elem>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const auto s = homomorphisms_between(semilattice2(), semilattice2());
  EXPECT_EQ(s.size(), 3u);
  const FiniteAlgebra one("one", 1, {OperationTable("f", 3, {0})});
  EXPECT_EQ(homomorphisms_between(a1(), one).size(), 1u);
  EXPECT_THROW(homomorphisms_between(a1(), semilattice2()), SignatureMismatch);
}

TEST(Centralizer, KnownCases) {
  const auto Z = z2_minority();
  EXPECT_TRUE(centralizer_condition(Z, Partition::indiscrete(2), Partition::indiscrete(2)));
  const auto S = semilattice2();
  EXPECT_FALSE(centralizer_condition(S, Partition::indiscrete(2), Partition::indiscrete(2)));
  for (const auto& alg : builtin_catalog())
    for (const auto& beta : congruences(alg).all)
      EXPECT_TRUE(centralizer_condition(alg, Partition::discrete(alg.size()), beta));
  EXPECT_THROW(centralizer_condition(a1(), Partition(std::vector<std::size_t>{0, 0, 1, 1}),
                                     Partition::indiscrete(4)),
               NotACongruence);
}

TEST(Centralizer, AgreesWithTermConditionOnSmallTerms) {
  // Oracle: A is abelian iff every term t satisfies t(a,c) = t(a,d) => t(b,c) = t(b,d),
  // checked on binary and ternary term tables split as (first | rest).
  for (const auto& alg : builtin_catalog()) {
    const std::size_t n = alg.size();
    bool abelian = true;
    for (unsigned k : {2u, 3u}) {
      std::size_t rest = 1;
      for (unsigned i = 1; i < k; ++i) rest *= n;
      for (const auto& t : oracle::terms(alg, k))
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            for (std::size_t c = 0; c < rest; ++c)
              for (std::size_t d = 0; d < rest; ++d)
                if (t[a * rest + c] == t[a * rest + d] && t[b * rest + c] != t[b * rest + d]) abelian = false;
    }
    const Partition one = Partition::indiscrete(n);
    EXPECT_EQ(centralizer_condition(alg, one, one), abelian) << alg.name();
  }
}

TEST(Affine, Classification) {
  const auto z = affine_checks(z2_minority());
  EXPECT_TRUE(z.is_abelian);
  EXPECT_TRUE(z.is_affine);
  EXPECT_FALSE(affine_checks(majority2()).is_abelian);
  std::vector<Tuple> r3;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) r3.push_back({x, y, static_cast<Elem>(x ^ y)});
  const auto with = affine_checks(z2_minority(), r3);
  ASSERT_TRUE(with.r3_criterion);
  EXPECT_TRUE(*with.r3_criterion);
  EXPECT_THROW(affine_checks(semilattice2(), std::vector<Tuple>{{0, 1, 1}, {1, 0, 1}}), NotCompatible);
}

TEST(Catalog, HsClosureMembersAreClosedUnderHS) {
  const auto tpl = Template::hs_closure(builtin_catalog());
  EXPECT_EQ(tpl.members().size(), 11u);
  for (const auto& m : tpl.members()) {
    for (const auto& U : enumerate_subuniverses(m.algebra, true).subuniverses)
      EXPECT_LT(tpl.find(subalgebra(m.algebra, U)), tpl.members().size()) << m.algebra.name();
    for (const auto& theta : congruences(m.algebra).all)
      EXPECT_LT(tpl.find(quotient(m.algebra, theta)), tpl.members().size()) << m.algebra.name();
  }
}

TEST(Catalog, CanonicalFormIsIsomorphismInvariant) {
  const auto A = a1();
  std::vector<Elem> t(64);
  const Elem perm[4] = {2, 0, 3, 1};
  oracle::each_tuple(4, 3, [&](const std::vector<Elem>& x) {
    t[perm[x[0]] * 16 + perm[x[1]] * 4 + perm[x[2]]] = perm[A.op(0)(x)];
  });
  const FiniteAlgebra B("A1'", 4, {OperationTable("f", 3, t)});
  EXPECT_TRUE(isomorphic(A, B));
  EXPECT_EQ(canonical_form(A), canonical_form(B));
  EXPECT_FALSE(isomorphic(semilattice2(), majority2()));
}

TEST(Catalog, UnaryPolynomialsOfZ2AreTranslationsAndConstants) {
  const auto polys = unary_polynomials(z2_minority());
  const std::set<UnaryMap> got(polys.begin(), polys.end());
  EXPECT_EQ(got, (std::set<UnaryMap>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(is_unary_polynomial(semilattice2(), {0, 0}));
  EXPECT_FALSE(is_unary_polynomial(semilattice2(), {1, 0}));
}

}  // namespace
}  // namespace taylor
