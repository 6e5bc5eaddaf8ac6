#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "multibrot/multicomplex.hpp"
#include "multibrot/verify.hpp"

using namespace multibrot;

namespace {

Tricomplex random_tri(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Tricomplex::Coefficients x{};
  for (double& v : x) v = d(rng);
  return Tricomplex{x};
}

// Product by bilinear expansion over the unit table.
Tricomplex expand_product(const Tricomplex& a, const Tricomplex& b) {
  Tricomplex::Coefficients out{};
  for (Unit u : all_units)
    for (Unit v : all_units) {
      const SignedUnit s = unit_product(u, v);
      out[static_cast<int>(s.unit)] += s.sign * a[u] * b[v];
    }
  return Tricomplex{out};
}

double rel(const Tricomplex& a, const Tricomplex& b, double floor = 1.0) {
  return norm3(a - b) / std::max({norm3(a), norm3(b), floor});
}

}  // namespace

TEST(UnitProduct, PublishedEntries) {
  EXPECT_EQ(unit_product(Unit::i1, Unit::i2), (SignedUnit{1, Unit::j1}));
  EXPECT_EQ(unit_product(Unit::i4, Unit::i4), (SignedUnit{-1, Unit::one}));
  EXPECT_EQ(unit_product(Unit::i1, Unit::i4), (SignedUnit{-1, Unit::j3}));
  EXPECT_EQ(unit_product(Unit::j1, Unit::j2), (SignedUnit{-1, Unit::j3}));
  EXPECT_EQ(unit_product(Unit::i3, Unit::i3), (SignedUnit{-1, Unit::one}));
}

TEST(UnitProduct, IdentityRow) {
  for (Unit u : all_units) {
    EXPECT_EQ(unit_product(Unit::one, u), (SignedUnit{1, u}));
    EXPECT_EQ(unit_product(u, Unit::one), (SignedUnit{1, u}));
  }
}

TEST(UnitProduct, SymmetricAndGeneratedFromI1I2I3) {
  for (Unit a : all_units)
    for (Unit b : all_units) {
      EXPECT_EQ(unit_product(a, b), unit_product(b, a)) << a << "*" << b;
      EXPECT_EQ(unit_product(a, b), unit_product_from_generators(a, b)) << a << "*" << b;
    }
}

TEST(Tricomplex, ViewsRoundTrip) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const Tricomplex a = random_tri(rng);
    EXPECT_EQ(Tricomplex::from_complex(a.complex_view()), a);
    EXPECT_EQ(Tricomplex::from_bicomplex(a.bicomplex_view()), a);
  }
  // z2 = x2 + x5 i1 is the coefficient of i2.
  const Tricomplex j1 = Tricomplex::unit(Unit::j1);
  EXPECT_EQ(j1.complex_view().z2, (Complex{0.0, 1.0}));
  const Tricomplex i4 = Tricomplex::unit(Unit::i4);
  EXPECT_EQ(i4.complex_view().z4, (Complex{0.0, 1.0}));
}

TEST(Tricomplex, Addition) {
  const Tricomplex a = Tricomplex::unit(Unit::one) + Tricomplex::unit(Unit::i1);
  EXPECT_EQ(a + Tricomplex{}, a);
  EXPECT_EQ(a + Tricomplex::unit(Unit::i1), Tricomplex::unit(Unit::one) + Tricomplex::unit(Unit::i1, 2.0));
  std::mt19937_64 rng(2);
  const Tricomplex x = random_tri(rng), y = random_tri(rng);
  for (Unit u : all_units) EXPECT_DOUBLE_EQ((x + y)[u], x[u] + y[u]);
}

TEST(Tricomplex, UnitProductsAsValues) {
  EXPECT_EQ(tri_mul(Tricomplex::unit(Unit::i1), Tricomplex::unit(Unit::i2)), Tricomplex::unit(Unit::j1));
  for (Unit a : all_units)
    for (Unit b : all_units) {
      const SignedUnit s = unit_product(a, b);
      EXPECT_EQ(tri_mul(Tricomplex::unit(a), Tricomplex::unit(b)), Tricomplex::unit(s.unit, s.sign));
    }
}

TEST(Tricomplex, MultiplicationMatchesTableExpansion) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const Tricomplex a = random_tri(rng), b = random_tri(rng);
    EXPECT_LE(rel(tri_mul(a, b), expand_product(a, b)), 1e-14);
  }
}

TEST(Tricomplex, RingAxioms) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 1000; ++k) {
    const Tricomplex a = random_tri(rng), b = random_tri(rng), c = random_tri(rng);
    EXPECT_LE(rel(a * b, b * a), 1e-10);
    EXPECT_LE(rel(a + b, b + a), 1e-10);
    EXPECT_LE(rel((a * b) * c, a * (b * c), norm3(a) * norm3(b) * norm3(c)), 1e-10);
    EXPECT_LE(rel((a + b) + c, a + (b + c)), 1e-10);
    EXPECT_LE(rel(a * (b + c), a * b + a * c, norm3(a) * (norm3(b) + norm3(c))), 1e-10);
  }
  const Tricomplex a = random_tri(rng);
  EXPECT_EQ(a * Tricomplex::identity(), a);
}

TEST(Idempotent, SplitOfOneAndJ3) {
  const IdempotentPair one = idem_split(Tricomplex{1.0});
  EXPECT_EQ(one.u1, Bicomplex::identity());
  EXPECT_EQ(one.u2, Bicomplex::identity());
  const IdempotentPair j3 = idem_split(Tricomplex::unit(Unit::j3));
  EXPECT_EQ(j3.u1, Bicomplex::identity());
  EXPECT_EQ(j3.u2, -Bicomplex::identity());
  EXPECT_EQ(idem_join(j3), Tricomplex::unit(Unit::j3));
}

TEST(Idempotent, JoinSplitRoundTrip) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Tricomplex a = random_tri(rng);
    EXPECT_LE(rel(idem_join(idem_split(a)), a), 1e-15);
  }
}

TEST(Idempotent, ReconstructsFromGammaBasis) {
  // eta == u1 * gamma3_bar + u2 * gamma3, with u1, u2 embedded as tricomplex values.
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const Tricomplex a = random_tri(rng);
    const IdempotentPair p = idem_split(a);
    const Tricomplex u1 = Tricomplex::from_bicomplex({p.u1, {}});
    const Tricomplex u2 = Tricomplex::from_bicomplex({p.u2, {}});
    EXPECT_LE(rel(u1 * gamma3_bar + u2 * gamma3, a), 1e-15);
  }
}

TEST(Idempotent, GammasAreIdempotentZeroDivisors) {
  EXPECT_EQ(gamma3_bar * gamma3_bar, gamma3_bar);
  EXPECT_EQ(gamma3 * gamma3, gamma3);
  EXPECT_EQ(gamma3_bar * gamma3, Tricomplex{});
  EXPECT_EQ(gamma3_bar + gamma3, Tricomplex{1.0});
}

TEST(Idempotent, OperationsCommuteWithSplit) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const Tricomplex a = random_tri(rng), b = random_tri(rng);
    const IdempotentPair sa = idem_split(a), sb = idem_split(b);
    EXPECT_LE(rel(idem_join(sa * sb), tri_mul(a, b), norm3(a) * norm3(b)), 1e-12);
    EXPECT_LE(rel(idem_join(sa + sb), tri_add(a, b)), 1e-12);
  }
}

TEST(TriPow, BasicValues) {
  std::mt19937_64 rng(8);
  const Tricomplex a = random_tri(rng);
  EXPECT_LE(rel(tri_pow(a, 1), a), 1e-15);
  EXPECT_EQ(tri_pow(Tricomplex::unit(Unit::i3), 2), Tricomplex{-1.0});
  EXPECT_EQ(tri_pow(Tricomplex::unit(Unit::j2), 2), Tricomplex{1.0});
  EXPECT_THROW(tri_pow(a, 0), std::invalid_argument);
}

TEST(TriPow, MatchesRepeatedMultiplication) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    const Tricomplex a = random_tri(rng);
    for (int m = 1; m <= 8; ++m) {
      Tricomplex repeated = a;
      for (int i = 1; i < m; ++i) repeated = tri_mul(repeated, a);
      EXPECT_LE(rel(tri_pow(a, m), repeated, std::pow(norm3(a), m)), 1e-10) << "m=" << m;
    }
  }
}

TEST(Norm3, Values) {
  EXPECT_EQ(norm3(Tricomplex{}), 0.0);
  EXPECT_DOUBLE_EQ(norm3(Tricomplex{1.0} + Tricomplex::unit(Unit::j3)), std::sqrt(2.0));
  std::mt19937_64 rng(10);
  for (int k = 0; k < 1000; ++k) {
    const Tricomplex a = random_tri(rng);
    EXPECT_LE(std::abs(norm3(a) - norm3_bicomplex(a)) / norm3(a), 1e-14);
  }
}

TEST(Hyperbolic, Arithmetic) {
  const Hyperbolic j{0.0, 1.0};
  EXPECT_EQ(hyp_mul(j, j), (Hyperbolic{1.0, 0.0}));
  const Hyperbolic a{0.3, -1.7};
  EXPECT_EQ(hyp_split(a), (HyperbolicSplit{2.0, -1.4}));
  EXPECT_DOUBLE_EQ(hyp_join(hyp_split(a)).x, a.x);
  EXPECT_DOUBLE_EQ(hyp_join(hyp_split(a)).y, a.y);
}

TEST(Hyperbolic, PowMatchesRepeatedMultiplication) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (int k = 0; k < 1000; ++k) {
    const Hyperbolic a{d(rng), d(rng)};
    Hyperbolic repeated = a;
    for (int m = 1; m <= 10; ++m) {
      if (m > 1) repeated = hyp_mul(repeated, a);
      const Hyperbolic fast = hyp_pow(a, m);
      const double scale = std::max(1.0, modulus(repeated));
      EXPECT_LE(modulus(fast - repeated) / scale, 1e-12);
    }
  }
}

TEST(Bicomplex, SplitJoinAndPow) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (int k = 0; k < 300; ++k) {
    const Bicomplex a{{d(rng), d(rng)}, {d(rng), d(rng)}};
    const Bicomplex back = bicomplex_join(bicomplex_split(a));
    EXPECT_LE(norm2(back - a), 1e-15);
    Bicomplex repeated = a;
    for (int m = 2; m <= 6; ++m) {
      repeated = repeated * a;
      EXPECT_LE(norm2(pow(a, m) - repeated) / std::max(1.0, norm2(repeated)), 1e-12);
    }
  }
}

TEST(EmbedSlice, PlacesCoefficients) {
  const std::array<Unit, 3> units{Unit::one, Unit::j1, Unit::j2};
  EXPECT_EQ(embed_slice(1, 0, 0, units), Tricomplex{1.0});
  EXPECT_EQ(embed_slice(0, 1, 0, units), Tricomplex::unit(Unit::j1));
  EXPECT_DOUBLE_EQ(norm3(embed_slice(0.3, -1.2, 2.0, units)), std::sqrt(0.09 + 1.44 + 4.0));
  EXPECT_THROW(embed_slice(1, 2, 3, {Unit::i1, Unit::i1, Unit::j2}), std::invalid_argument);
  EXPECT_THROW(embed_slice(1, 2, 3, {Unit::i1, Unit::j2, Unit::j2}), std::invalid_argument);
}
