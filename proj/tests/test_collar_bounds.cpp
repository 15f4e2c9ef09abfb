#include <cmath>

#include <gtest/gtest.h>

#include "longtube/collar_bounds.hpp"
#include "longtube/errors.hpp"
#include "longtube/halfplane.hpp"
#include "longtube/tube_geometry.hpp"

using namespace longtube;

namespace {

double coth2(double x) {
  const double c = 1.0 / std::tanh(x);
  return c * c;
}

std::vector<double> grid(int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 1e-3 * std::pow(kEps0 / 1e-3, static_cast<double>(i) / (n - 1));
  g.back() = kEps0;
  return g;
}

}  // namespace

TEST(BFunction, Oracles) {
  EXPECT_NEAR(b_function(2.5), 2.774497115435495, 1e-13);
  EXPECT_NEAR(b_function(kEps0), 1.019178869571030, 1e-13);
  EXPECT_LT(b_function(0.01), 1e-200);
  EXPECT_THROW(b_function(0.0), DomainError);
}

TEST(BFunction, Increasing) {
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double v = b_function(0.01 * i);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(U3Bound, Oracles) {
  EXPECT_NEAR(coth2(kEps0 / 8.0), 21.26668659948377, 1e-12);
  // R chosen so that coth^2(R/2) = 7.158
  const double R = 2.0 * std::atanh(1.0 / std::sqrt(7.158));
  EXPECT_NEAR(u3_bound(kEps0 / 4.0, R), 3.069768569258622, 1e-12);
  EXPECT_LE(u3_bound(kEps0 / 4.0, R), 3.08);
  EXPECT_NEAR(u3_bound(60.0, 60.0), 0.5 * std::log(4.0), 1e-12);
}

TEST(U3Bound, AtAlphaCurve) {
  const double v = u3_bound(std::asinh(kEps0 / 2.0), cached_radii().Rdeps);
  EXPECT_NEAR(v, 2.548070739255345, 1e-8);
  EXPECT_LE(v, 2.56);
}

TEST(CollarRadii, R0Limit) {
  const CollarRadii& r = cached_radii();
  EXPECT_NEAR(r.R0, -std::log(std::sinh(kEps0 / 4.0)), 1e-4);
  EXPECT_NEAR(r.R0, 0.7872603837897442, 1e-4);
  EXPECT_GT(r.R0, kPi / 4.0);
  EXPECT_LE(coth2(r.R0 / 2.0), 7.2);
  EXPECT_NEAR(coth2(r.R0 / 2.0), 7.130661994458299, 1e-3);
}

TEST(CollarRadii, RdepsValue) {
  const CollarRadii& r = cached_radii();
  EXPECT_NEAR(r.Rdeps, 0.7701454916504382, 1e-4);
  EXPECT_GT(r.Rdeps, 0.77);
  EXPECT_LE(coth2(r.Rdeps / 2.0), 7.5);
}

TEST(CollarRadii, StableUnderRefinement) {
  const CollarRadii a = collar_radii(1e-6);
  const CollarRadii b = collar_radii(5e-7);
  EXPECT_NEAR(a.R0, b.R0, 1e-4);
  EXPECT_NEAR(a.Rdeps, b.Rdeps, 1e-4);
}

TEST(CollarRadii, ObjectivesRealOnlyOnSubrange) {
  EXPECT_THROW(r0_objective(kEps0), DomainError);
  EXPECT_NO_THROW(r0_objective(0.5 * r0_domain_limit()));
  EXPECT_THROW(rdeps_objective(kEps0), DomainError);
  EXPECT_NO_THROW(rdeps_objective(0.5 * rdeps_domain_limit()));
  EXPECT_NEAR(r0_domain_limit(), kEps0 / 2.0, 1e-12);
}

TEST(BoundarySup, Oracles) {
  EXPECT_NEAR(boundary_lower_side(2.5), 3.696083449970686, 1e-12);
  EXPECT_GE(boundary_lower_side(2.5), 3.69);
  EXPECT_LE(boundary_lower_side(2.5), 3.71);
  EXPECT_NEAR(boundary_lower_side(boundary_length(kEps0)), 3.680072757995069, 1e-12);
  EXPECT_NEAR(alpha_curve_W0(), 2.290182449519329, 1e-12);
  EXPECT_LE(alpha_curve_W0(), kW0Cap);
}

TEST(BoundarySup, AtMostCapOnFineGrid) {
  for (double ell : grid(1000)) EXPECT_LE(boundary_sup_W(ell), kWCap) << ell;
}

TEST(BoundarySup, LowerSideDominates) {
  for (double ell : grid(50)) {
    const double x = boundary_length(ell);
    EXPECT_GE(boundary_lower_side(x), boundary_upper_side(x));
  }
}

TEST(GFactor, Oracles) {
  EXPECT_NEAR(G_factor(1.0, 3.7), 1.295702495048943, 1e-12);
  EXPECT_NEAR(G_factor(kEps0, 3.7), 16.44464677109705, 1e-12);
  EXPECT_NEAR(G_factor(0.5, 3.7), 1.0000164266085717, 1e-14);
  EXPECT_NEAR(std::exp(kGCapExponent), 16.44464677109705, 1e-12);
}

TEST(GFactor, DecreasesToOne) {
  double prev = INFINITY;
  for (double ell : {0.5, 0.2, 0.1, 0.05}) {
    const double g = G_factor(ell);
    EXPECT_GE(g, 1.0);
    EXPECT_LE(g, prev);
    prev = g;
  }
  EXPECT_NEAR(prev, 1.0, 1e-15);
  for (double ell : grid(200)) EXPECT_LE(G_factor(ell), std::exp(2.8));
}

TEST(GFactor, RejectsWAboveCap) {
  EXPECT_THROW(G_factor(1.0, 3.8), DomainError);
  EXPECT_NO_THROW(G_factor(1.0, 3.7 * (1.0 + 1e-13)));
}

TEST(GbarFactor, Values) {
  EXPECT_NEAR(Gbar_factor(0.05), 17.72222893827161, 1e-10);
  const double g = G_factor(1.0);
  EXPECT_LE(Gbar_factor(1.0), 17.73 * g * g);
  EXPECT_NEAR(Gbar_factor(0.05, 1.0), 1.294538271604938, 1e-12);
}

TEST(MboundChecks, EpsZeroEquality) {
  const auto r = mbound_checks(kEps0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(r[0].satisfied);
  EXPECT_NEAR(r[0].value, r[0].bound, 1e-12);
  EXPECT_TRUE(r[1].satisfied);
}

TEST(MboundChecks, EllOne) {
  const auto r = mbound_checks(1.0);
  EXPECT_NEAR(r[0].value, 0.001058099332577101, 1e-15);
  EXPECT_NEAR(r[0].bound, 0.007191883355826366, 1e-15);
  EXPECT_TRUE(all_satisfied(r));
}

TEST(MboundChecks, AllSatisfiedOnGrid) {
  for (double ell : grid(1000)) {
    const auto r = mbound_checks(ell);
    EXPECT_TRUE(all_satisfied(r)) << ell;
    for (const auto& x : r) EXPECT_GE(x.margin, -1e-12 * std::abs(x.bound)) << x.name;
  }
}

TEST(DecayRatios, MatchDirectForms) {
  for (double m : {2.8, 5.0, 10.0}) {
    const double e = std::exp(m);
    EXPECT_NEAR(decay_ratio(m), e / ((e - 1) * (e - 1)), 1e-15);
    EXPECT_NEAR(decay_ratio_second(m), e * (e + 1) / std::pow(e - 1, 3), 1e-15);
  }
  EXPECT_GT(decay_ratio(200.0), 0.0);
}
