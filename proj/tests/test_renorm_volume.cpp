#include <cmath>

#include <gtest/gtest.h>

#include "longtube/errors.hpp"
#include "longtube/renorm_volume.hpp"
#include "longtube/tube_geometry.hpp"

using namespace longtube;

TEST(EarthquakeVariation, Oracle) {
  EXPECT_NEAR(earthquake_variation_bound(1.0, 1.0), 9.221970452973717, 1e-12);
}

TEST(EarthquakeVariation, LinearInTime) {
  EXPECT_EQ(earthquake_variation_bound(0.7, 0.0), 0.0);
  EXPECT_NEAR(earthquake_variation_bound(0.7, 3.0), 3.0 * earthquake_variation_bound(0.7, 1.0),
              1e-15);
  EXPECT_THROW(earthquake_variation_bound(0.7, -1.0), DomainError);
}

TEST(EarthquakeVariation, DecaysWithLength) {
  EXPECT_LT(earthquake_variation_bound(0.2, 1.0), 1e-6);
  EXPECT_LT(earthquake_variation_bound(0.5, 1.0), earthquake_variation_bound(1.0, 1.0));
}

TEST(LengthEnvelope, Values) {
  const LengthEnvelope e = grafting_length_bounds(1.0, kPi);
  EXPECT_DOUBLE_EQ(e.upper, 0.5);
  EXPECT_DOUBLE_EQ(e.lower, 0.25);
  const LengthEnvelope z = grafting_length_bounds(0.9, 0.0);
  EXPECT_EQ(z.upper, 0.9);
  EXPECT_THROW(grafting_length_bounds(1.0, -0.1), DomainError);
}

TEST(LengthEnvelope, MonotoneAndRatioTwo) {
  double prev = INFINITY;
  for (double s = 0.0; s < 50.0; s += 0.5) {
    const LengthEnvelope e = grafting_length_bounds(1.3, s);
    EXPECT_LT(e.upper, prev);
    EXPECT_DOUBLE_EQ(e.upper / e.lower, 2.0);
    prev = e.upper;
  }
}

TEST(Gardiner, Oracles) {
  EXPECT_NEAR(gardiner_coefficient(1.0), 31.79167484369727, 1e-12);
  EXPECT_NEAR(gardiner_coefficient(kPi), kPi / 4.0 + kPi, 1e-15);
}

TEST(VrAsymptotic, Oracle) {
  EXPECT_NEAR(vr_asymptotic(1.0, 0.5), -31.39897576199854, 1e-12);
  EXPECT_EQ(vr_asymptotic(1.0, 1.0), 0.0);
  EXPECT_THROW(vr_asymptotic(1.0, 1.1), DomainError);
}

TEST(VrAsymptotic, IntegralIdentity) {
  for (double ell0 : {0.2, 0.5, 1.0, 1.5}) {
    for (double f : {0.05, 0.1, 0.25, 0.5, 0.9}) {
      EXPECT_LT(integral_identity_residual(ell0, f * ell0), 1e-8) << ell0 << " " << f;
    }
  }
  EXPECT_THROW(integral_identity_residual(1.0, 0.5, 32), DomainError);
}

TEST(VrAsymptotic, PrincipalTermDominates) {
  // vr + pi^3/ells stays bounded along the path
  for (double s : {1.0, 10.0, 100.0, 1000.0}) {
    const double ls = grafting_length_bounds(1.0, s).upper;
    const double rest = vr_asymptotic(1.0, ls) + kPi * kPi * kPi / ls;
    EXPECT_LT(std::abs(rest), kPi * kPi * kPi + kPi / 4.0 + 1e-12);
  }
}

TEST(PathTable, Shape) {
  const auto rows = vr_path_table(1.0, 10.0, 11);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front().s, 0.0);
  EXPECT_EQ(rows.back().s, 10.0);
  for (const auto& r : rows) {
    EXPECT_LE(r.vr_delta_lower, r.vr_delta_upper);
    EXPECT_LE(r.vr_delta_upper, 0.0);
  }
  EXPECT_THROW(vr_path_table(1.0, 10.0, 1), DomainError);
}

TEST(ErrorTransfer, GridHolds) {
  for (double ell0 : {0.1, 0.4, 0.8, 1.2, kEps0}) {
    for (double s : {0.0, 0.5, 2.0, 10.0, 100.0}) {
      EXPECT_TRUE(error_term_transfer_check(ell0, s).satisfied) << ell0 << " " << s;
    }
  }
}
