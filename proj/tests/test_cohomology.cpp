#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "rrb/rrb.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace rrb {
namespace {

using testing::all_vectors;
using testing::corpus_modules;
using testing::cyclic_trivial_rrb;
using testing::Rng;

std::set<Vec> as_set(const ModSubgroup& s) {
  const auto e = s.elements();
  return {e.begin(), e.end()};
}

RRBModule module_named(const std::string& name) {
  for (auto& [n, m] : corpus_modules())
    if (n == name) return m;
  throw std::runtime_error("no module " + name);
}

TEST(TrivialZ2Module, CountsMatchEnumeration) {
  const CochainComplex cx(testing::trivial_z2_module());
  const auto brute = testing::brute_cohomology(cx);
  EXPECT_EQ(brute.z2.size(), 16u);
  EXPECT_EQ(brute.b2.size(), 1u);
  EXPECT_EQ(brute.z1.size(), 4u);
  EXPECT_EQ(cx.z2().order(), 16);
  EXPECT_EQ(cx.b2().order(), 1);
  EXPECT_EQ(cx.z1().order(), 4);
  EXPECT_EQ(cx.h2().factors(), (Moduli{2, 2, 2, 2}));
  for (const Vec& v : all_vectors(cx.c1_moduli()))
    EXPECT_EQ(cx.coboundary(cx.cochain1(v)), cx.zero());
}

TEST(Corpus, SmithAgreesWithEnumeration) {
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    ASSERT_LE(product_of(cx.c2_moduli()), 1 << 20) << name;
    const auto brute = testing::brute_cohomology(cx);
    EXPECT_EQ(as_set(cx.z2()), brute.z2) << name;
    EXPECT_EQ(as_set(cx.b2()), brute.b2) << name;
    EXPECT_EQ(as_set(cx.z1()), brute.z1) << name;
    EXPECT_EQ(cx.h2().order() * brute.b2.size(), brute.z2.size()) << name;
    for (const Vec& v : all_vectors(cx.c2_moduli()))
      EXPECT_EQ(cx.in_z2(cx.factor_system(v)), brute.z2.count(v) == 1) << name;
  }
}

TEST(Corpus, BoundariesInsideCocycles) {
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    EXPECT_TRUE(cx.z2().contains(cx.b2())) << name;
    EXPECT_EQ(cx.z2().order(), cx.b2().order() * cx.h2().order()) << name;
    EXPECT_TRUE(cx.in_z2(cx.zero()));
    EXPECT_TRUE(cx.in_z1(cx.cochain1(Vec(cx.c1_moduli().size(), 0))));
    EXPECT_EQ(cx.class_of(cx.zero()), cx.zero_class());
    EXPECT_TRUE(is_zero(cx.zero_class().coordinates));
  }
}

TEST(Corpus, CoboundariesAreCocycles) {
  Rng rng(3);
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    EXPECT_EQ(cx.coboundary(cx.cochain1(Vec(cx.c1_moduli().size(), 0))), cx.zero());
    for (int trial = 0; trial < 20; ++trial) {
      const FactorSystem b = cx.coboundary(cx.cochain1(rng.vec(cx.c1_moduli())));
      EXPECT_FALSE(cx.first_violation(b).has_value()) << name;
      EXPECT_TRUE(cx.in_b2(b)) << name;
      const auto kappa = cx.solve_coboundary(b);
      ASSERT_TRUE(kappa.has_value());
      EXPECT_EQ(cx.coboundary(*kappa), b);
    }
  }
}

TEST(Corpus, ConditionsAreLinear) {
  Rng rng(17);
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    const Moduli& d2 = cx.cocycle_defect_moduli();
    const Moduli& d1 = cx.derivation_defect_moduli();
    for (int trial = 0; trial < 25; ++trial) {
      const Vec x = rng.vec(cx.c2_moduli()), y = rng.vec(cx.c2_moduli());
      const FactorSystem fx = cx.factor_system(x), fy = cx.factor_system(y);
      EXPECT_EQ(cx.cocycle_defects(cx.add(fx, fy)),
                add_mod(cx.cocycle_defects(fx), cx.cocycle_defects(fy), d2))
          << name;
      const Vec u = rng.vec(cx.c1_moduli()), w = rng.vec(cx.c1_moduli());
      EXPECT_EQ(cx.derivation_defects(cx.cochain1(add_mod(u, w, cx.c1_moduli()))),
                add_mod(cx.derivation_defects(cx.cochain1(u)),
                        cx.derivation_defects(cx.cochain1(w)), d1))
          << name;
    }
  }
}

TEST(Corpus, ViolationAgreesWithTotalGroupOracle) {
  Rng rng(23);
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    for (int trial = 0; trial < 50; ++trial) {
      const FactorSystem fs = cx.factor_system(rng.vec(cx.c2_moduli()));
      const auto bad = cx.first_violation(fs);
      EXPECT_EQ(!bad.has_value(), testing::total_is_rrb(m, fs)) << name;
      if (bad) {
        EXPECT_GE(bad->condition, 1);
        EXPECT_LE(bad->condition, 5);
      }
    }
  }
}

TEST(Classes, ArithmeticAndCoordinates) {
  Rng rng(29);
  for (const auto& [name, m] : corpus_modules()) {
    const CochainComplex cx(m);
    const Moduli& h = cx.h2().factors();
    for (const Vec& c : all_vectors(h)) {
      const CohomologyClass k = cx.class_from_coordinates(c);
      EXPECT_EQ(k.coordinates, c);
      EXPECT_TRUE(cx.in_z2(k.representative));
      EXPECT_EQ(cx.class_of(k.representative).coordinates, c);
    }
    const auto z2 = cx.z2().elements();
    for (int trial = 0; trial < 20; ++trial) {
      const FactorSystem x = cx.factor_system(z2[rng.below(int(z2.size()))]);
      const FactorSystem y = cx.factor_system(z2[rng.below(int(z2.size()))]);
      EXPECT_EQ(cx.class_of(cx.add(x, y)), cx.add(cx.class_of(x), cx.class_of(y)));
      EXPECT_EQ(cx.class_of(cx.sub(x, y)), cx.sub(cx.class_of(x), cx.class_of(y)));
      EXPECT_EQ(cx.class_of(x) == cx.class_of(y), cx.in_b2(cx.sub(x, y)));
    }
  }
}

TEST(Classes, NonCocycleRejected) {
  const CochainComplex cx(module_named("klein-classical"));
  FactorSystem fs = cx.zero();
  fs.tau1[1 * 4 + 2] = 1;
  try {
    cx.class_of(fs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACocycle);
    EXPECT_GE(e.witness().front(), 1);
  }
  EXPECT_FALSE(cx.solve_coboundary(fs).has_value());
}

TEST(Cochains, ShapeAndNormalization) {
  const CochainComplex cx(testing::trivial_z2_module());
  FactorSystem bad = FactorSystem::zero(3, 2, 2, 2);
  EXPECT_THROW(cx.to_vec(bad), Error);
  FactorSystem unnormalized = cx.zero();
  unnormalized.chi[0] = 1;
  try {
    cx.to_vec(unnormalized);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CochainNotNormalized);
  }
}

TEST(Cochains, OnePointQuotientAndTrivialKernel) {
  const RRBGroup K = cyclic_trivial_rrb(3, 3, {0, 1, 2});
  const CochainComplex point(trivial_module(RRBGroup(), K));
  EXPECT_EQ(point.z1().order(), 1);
  EXPECT_EQ(point.z2().order(), 1);
  EXPECT_EQ(point.h2().order(), 1);

  const RRBGroup A = validate_rrb(cyclic_group(3), cyclic_group(2),
                                  {identity_map(3), testing::negation(3)}, {0, 0, 0});
  const CochainComplex empty(trivial_module(A, RRBGroup()));
  EXPECT_EQ(empty.b2().order(), 1);
  EXPECT_EQ(empty.h2().order(), 1);
}

TEST(DeltaSigma, Examples) {
  const RRBModule m = module_named("z3-over-z2");
  EXPECT_EQ(delta1_sigma(IndexMap(3, 0), m), IndexMap(9, 0));
  // chi(1) = 1, chi(2) = 0 into Z2 with T = id, beta and sigma trivial:
  // delta(a1, a2) = chi(a2) - chi(a1 + a2) + chi(a1)
  const IndexMap chi{0, 1, 0};
  IndexMap hand(9);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = 0; a2 < 3; ++a2) hand[a1 * 3 + a2] = (chi[a2] + chi[(a1 + a2) % 3] + chi[a1]) % 2;
  EXPECT_EQ(delta1_sigma(chi, m), hand);
  EXPECT_EQ(hand, (IndexMap{0, 0, 0, 0, 0, 1, 0, 1, 1}));

  // a homomorphism from A with sigma trivial cancels
  const RRBModule z2 = module_named("z2-identity-ops");
  EXPECT_EQ(delta1_sigma({0, 1}, z2), IndexMap(4, 0));
}

TEST(DeltaSigma, NontrivialSigmaByHand) {
  const RRBModule m = module_named("z2-z3-mu-sigma");
  // T = 0, so sigma_{T a2} = id and delta(a1, a2) = chi(a2) - chi(a1 a2) + chi(a1)
  const IndexMap chi{0, 2};
  const IndexMap d = delta1_sigma(chi, m);
  EXPECT_EQ(d, (IndexMap{0, 0, 0, (2 - 0 + 2) % 3}));
}

TEST(Classical, KnownGroups) {
  const auto trivial_on = [](int n, int k) {
    return std::vector<IndexMap>(n, identity_map(k));
  };
  EXPECT_EQ(classical_h2_check(cyclic_group(2), cyclic_group(2), trivial_on(2, 2)).factors(),
            Moduli{2});
  EXPECT_EQ(classical_h2_check(cyclic_group(3), cyclic_group(3), trivial_on(3, 3)).factors(),
            Moduli{3});
  EXPECT_TRUE(
      classical_h2_check(trivial_group(), cyclic_group(4), trivial_on(1, 4)).factors().empty());
  const FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2)).group;
  EXPECT_EQ(classical_h2_check(v4, cyclic_group(2), trivial_on(4, 2)).factors(),
            (Moduli{2, 2, 2}));
  // Z2 acting on Z3 by inversion: |A| and |K| coprime
  EXPECT_TRUE(classical_h2_check(cyclic_group(2), cyclic_group(3),
                                 {identity_map(3), testing::negation(3)})
                  .factors()
                  .empty());
  EXPECT_THROW(classical_h2_check(cyclic_group(3), cyclic_group(3),
                                  {identity_map(3), testing::negation(3), identity_map(3)}),
               Error);
}

TEST(Classical, MatchesEnumerationOverNormalizedCochains) {
  for (int n : {2, 3}) {
    const FiniteGroup z = cyclic_group(n);
    std::set<Vec> cocycles, boundaries;
    for (const Vec& v : all_vectors(Moduli((n - 1) * (n - 1), n))) {
      auto t = [&](int a, int b) { return (a == 0 || b == 0) ? 0 : v[(a - 1) * (n - 1) + b - 1]; };
      bool ok = true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            ok = ok && (t(b, c) + t(a, (b + c) % n)) % n == (t((a + b) % n, c) + t(a, b)) % n;
      if (ok) cocycles.insert(v);
    }
    for (const Vec& k : all_vectors(Moduli(n - 1, n))) {
      auto kap = [&](int a) { return a == 0 ? 0 : k[a - 1]; };
      Vec b;
      for (int a1 = 1; a1 < n; ++a1)
        for (int a2 = 1; a2 < n; ++a2) b.push_back(((kap(a1) + kap(a2) - kap((a1 + a2) % n)) % n + n) % n);
      boundaries.insert(b);
    }
    const auto h = classical_h2_check(z, z, std::vector<IndexMap>(n, identity_map(n)));
    EXPECT_EQ(h.order() * boundaries.size(), cocycles.size());
    EXPECT_EQ(h.order(), n);
  }
}

}  // namespace
}  // namespace rrb
