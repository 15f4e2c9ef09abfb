#include <cmath>

#include <gtest/gtest.h>

#include "longtube/collar_bounds.hpp"
#include "longtube/errors.hpp"
#include "longtube/pairing.hpp"
#include "longtube/schwarzian.hpp"
#include "longtube/synthetic_tube.hpp"
#include "longtube/tube_geometry.hpp"

using namespace longtube;

TEST(Pairing, SymmetricTubeValues) {
  const QuadraticDifferential q = schwarzian_differential(symmetric_developing_map(1.0));
  const PairingResult p = pair(q, CoreCurve::halfplane(1.0));
  EXPECT_NEAR(p.earthquake_value, 0.0, 1e-13);
  EXPECT_NEAR(p.grafting_value, -10.119604401089359, 1e-12);
  EXPECT_LT(p.quadrature_error_estimate, 1e-12);
}

TEST(Pairing, SymmetricAcrossLengths) {
  for (double ell : {0.1, 0.3, 1.0, kEps0}) {
    const QuadraticDifferential q = schwarzian_differential(symmetric_developing_map(ell));
    const PairingResult p = pair(q, CoreCurve::halfplane(ell));
    const double center = kPi * kPi / ell + ell / 4.0;
    EXPECT_NEAR(p.earthquake_value, 0.0, 1e-13 * center);
    EXPECT_NEAR(p.grafting_value, -center, 1e-13 * center);
  }
}

TEST(Pairing, InverseSquareDifferentials) {
  const double ell = 0.8;
  const CoreCurve core = CoreCurve::halfplane(ell);
  EXPECT_NEAR(pair_earthquake(QuadraticDifferential::over_z_squared(1.0), core), 0.0, 1e-15);
  EXPECT_NEAR(pair_grafting(QuadraticDifferential::over_z_squared(1.0), core), -ell / 2.0, 1e-15);
  const auto qi = QuadraticDifferential::over_z_squared(Complex(0.0, 0.5));
  EXPECT_NEAR(pair_earthquake(qi, core), ell / 4.0, 1e-15);
  EXPECT_NEAR(pair_grafting(qi, core), 0.0, 1e-15);
}

TEST(Pairing, ZeroDifferential) {
  const PairingResult p = pair(QuadraticDifferential::zero(), CoreCurve::halfplane(1.2));
  EXPECT_EQ(p.earthquake_value, 0.0);
  EXPECT_EQ(p.grafting_value, 0.0);
}

TEST(Pairing, LinearInTheDifferential) {
  const CoreCurve core = CoreCurve::halfplane(0.7);
  const auto q1 = schwarzian_differential(symmetric_developing_map(0.7));
  const auto q2 = QuadraticDifferential::over_z_squared(Complex(0.3, -1.1));
  QuadraticDifferential sum{[&](Complex z) { return 2.0 * q1(z) - q2(z); }};
  const PairingResult a = pair(q1, core), b = pair(q2, core), c = pair(sum, core);
  EXPECT_NEAR(c.earthquake_value, 2.0 * a.earthquake_value - b.earthquake_value, 1e-12);
  EXPECT_NEAR(c.grafting_value, 2.0 * a.grafting_value - b.grafting_value, 1e-12);
}

TEST(Pairing, NodeDoublingStable) {
  const auto q = schwarzian_differential(symmetric_developing_map(0.5));
  const CoreCurve core = CoreCurve::halfplane(0.5);
  EXPECT_LT(std::abs(pair_grafting(q, core, 256) - pair_grafting(q, core, 512)), 1e-12);
}

TEST(Pairing, Errors) {
  const CoreCurve core = CoreCurve::halfplane(1.0);
  EXPECT_THROW(pair(QuadraticDifferential::zero(), core, 4), DomainError);
  EXPECT_THROW(pair(QuadraticDifferential::zero(), CoreCurve::tube(1.0)), DomainError);
  QuadraticDifferential bad{[](Complex) { return Complex(NAN, 0.0); }};
  EXPECT_THROW(pair(bad, core), NumericalError);
}

TEST(CoreCurve, RotatedVelocityInTubeChart) {
  const CoreCurve c = CoreCurve::tube(0.9);
  const auto v = c.velocity(0.2);
  const auto r = c.rotated_velocity(0.2);
  EXPECT_NEAR(v[0], 0.0, 0.0);
  EXPECT_NEAR(v[1], 2.0 * kPi / 0.9, 1e-14);
  // unit speed in the hyperbolic metric, so the rotation is the unit radial vector
  EXPECT_NEAR(r[0], -1.0, 1e-15);
  EXPECT_NEAR(r[1], 0.0, 0.0);
}

TEST(TermB1, ExactValues) {
  for (double ell : {0.1, 0.5, 1.0, kEps0}) {
    const TermValues b1 = term_B1(ell);
    EXPECT_NEAR(b1.eq, 0.0, 1e-14);
    EXPECT_NEAR(b1.gr, ell / 4.0, 1e-14);
  }
}

TEST(TermB2, ZeroForConstantData) {
  const TermValues b2 = term_B2(FourierHarmonic::constant(flat_halfwidth(1.0), 0.5), 1.0, kWCap);
  EXPECT_EQ(b2.eq, 0.0);
  EXPECT_EQ(b2.gr, 0.0);
}

TEST(TermB2, BoundOracle) {
  const TermValues b2 = term_B2(FourierHarmonic::constant(flat_halfwidth(kEps0), 0.0), kEps0, kWCap);
  EXPECT_NEAR(b2.bound_eq, 38.49309726668269, 1e-12);
}

TEST(TermB2, RejectsLargeW) {
  EXPECT_THROW(term_B2(FourierHarmonic::constant(2.0, 0.0), kEps0, 3.8), DomainError);
}

TEST(TermB3, SymmetricTubeIsCenter) {
  for (double ell : {0.2, 1.0, kEps0}) {
    const TermB3 b3 = term_B3(FourierHarmonic::constant(flat_halfwidth(ell), 0.0), ell, kWCap);
    EXPECT_EQ(b3.eq, 0.0);
    EXPECT_EQ(b3.gr_remainder, 0.0);
    EXPECT_DOUBLE_EQ(b3.gr, kPi * kPi / ell);
  }
}

TEST(TotalBounds, Oracles) {
  const TotalBounds t = total_bounds(1.0, kWCap);
  EXPECT_NEAR(t.eq_bound, 9.220091232126286, 1e-12);
  EXPECT_DOUBLE_EQ(t.gr_center, kPi * kPi);
  EXPECT_NEAR(t.gr_bound - t.gr_center - 0.25, t.gr_remainder_bound, 1e-14);
}

TEST(TotalBounds, DecayAsLengthShrinks) {
  double prev = INFINITY;
  for (double ell : {kEps0, 1.0, 0.5, 0.25, 0.1}) {
    const double b = total_bounds(ell, kWCap).eq_bound;
    EXPECT_LT(b, prev);
    prev = b;
  }
}

TEST(Decomposition, SymmetricResiduals) {
  for (double ell : {0.1, 0.5, 1.0, kEps0}) {
    const DecompositionResidual r = decomposition_residual_symmetric(ell);
    const double scale = kPi * kPi / ell;
    EXPECT_LT(r.earthquake, 1e-12 * scale) << ell;
    EXPECT_LT(r.grafting, 1e-12 * scale) << ell;
  }
}

TEST(AnalyzeTube, RandomTubesMeetTermBounds) {
  for (double ell : {0.2, 0.6, 1.0, kEps0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const SyntheticTube t = make_synthetic_tube(ell, kWCap, derive_seed(11, 0, trial));
      const TubeAnalysis a = analyze_tube(t);
      for (const auto& r : a.reports) EXPECT_TRUE(r.satisfied) << r.name << " ell " << ell;
      EXPECT_LT(std::abs(a.b3.closure_defect), 1e-6);
    }
  }
}

TEST(AnalyzeTube, EarthquakeTermsNearlyCancel) {
  // leading orders cancel, so the ratio shrinks with the core length
  double prev = INFINITY;
  for (double ell : {kEps0, 0.8, 0.4}) {
    const TubeAnalysis a = analyze_tube(make_synthetic_tube(ell, kWCap, 4));
    const double ratio = a.eq_total / (std::abs(a.b2.eq) + std::abs(a.b3.eq));
    EXPECT_LT(ratio, prev) << ell;
    prev = ratio;
  }
  EXPECT_LT(prev, 1e-3);
}
