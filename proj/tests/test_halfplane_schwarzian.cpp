#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "longtube/errors.hpp"
#include "longtube/halfplane.hpp"
#include "longtube/holomorphic.hpp"
#include "longtube/schwarzian.hpp"
#include "longtube/tube_geometry.hpp"

using namespace longtube;

namespace {

std::vector<double> ell_grid() {
  std::vector<double> g;
  for (int i = 0; i < 10; ++i) g.push_back(0.1 * std::pow(kEps0 / 0.1, i / 9.0));
  return g;
}

std::vector<Complex> random_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> x(-2.0, 2.0), y(0.3, 3.0);
  std::vector<Complex> pts(n);
  for (auto& p : pts) p = {x(rng), y(rng)};
  return pts;
}

HolomorphicMap sampled_power(Complex alpha) {
  return HolomorphicMap::sampled([alpha](Complex z) { return std::pow(z, alpha); },
                                 Domain::slit_plane());
}

}  // namespace

TEST(Mobius, ApplyExamples) {
  EXPECT_EQ(mobius_apply(MobiusMap::identity(), {1.0, 2.0}), Complex(1.0, 2.0));
  const Complex w = mobius_apply(MobiusMap({0.0}, {-1.0}, {1.0}, {0.0}), {0.0, 1.0});
  EXPECT_NEAR(std::abs(w - Complex(0.0, 1.0)), 0.0, 1e-15);
  const MobiusMap dbl({std::sqrt(2.0)}, {0.0}, {0.0}, {1.0 / std::sqrt(2.0)});
  EXPECT_NEAR(std::abs(mobius_apply(dbl, {1.0, 1.0}) - Complex(2.0, 2.0)), 0.0, 1e-14);
}

TEST(Mobius, NormalizedAndComparedUpToSign) {
  const MobiusMap m({2.0}, {1.0}, {1.0}, {1.0});
  EXPECT_NEAR(std::abs(m.a() * m.d() - m.b() * m.c() - 1.0), 0.0, 1e-15);
  const MobiusMap neg(-m.a(), -m.b(), -m.c(), -m.d());
  EXPECT_TRUE(m.equivalent(neg));
  EXPECT_TRUE(m.compose(m.inverse()).equivalent(MobiusMap::identity()));
}

TEST(Mobius, RejectsDegenerateMatrix) {
  EXPECT_THROW(MobiusMap({1.0}, {2.0}, {2.0}, {4.0}), DomainError);
}

TEST(Mobius, ApplyAtPoleThrows) {
  EXPECT_THROW(MobiusMap::inversion().apply({0.0, 0.0}), DomainError);
}

TEST(HyperbolicDensity, Examples) {
  EXPECT_DOUBLE_EQ(hyperbolic_density({0.0, 1.0}), 1.0);
  EXPECT_DOUBLE_EQ(hyperbolic_density({0.0, 2.0}), 0.25);
  EXPECT_DOUBLE_EQ(hyperbolic_density({1.0, 0.5}), 4.0);
  EXPECT_THROW(hyperbolic_density({1.0, 0.0}), DomainError);
  EXPECT_THROW(hyperbolic_density({1.0, -1.0}), DomainError);
}

TEST(Schwarzian, MobiusVanishes) {
  const MobiusMap m({2.0, 1.0}, {1.0}, {0.5}, {1.0, -0.3});
  const HolomorphicMap f = HolomorphicMap::mobius(m);
  EXPECT_NEAR(std::abs(schwarzian(f, {1.0, 1.0})), 0.0, 1e-10);
  for (Complex z : random_points(50, 3)) {
    EXPECT_LT(std::abs(schwarzian(f, z)), 1e-10);
    EXPECT_LT(std::abs(schwarzian_numeric(f, z)), 1e-10);
  }
}

TEST(Schwarzian, SymmetricMapAtI) {
  const Complex s = schwarzian(symmetric_developing_map(kPi), {0.0, 1.0});
  EXPECT_NEAR(s.real(), -2.5, 1e-12);
  EXPECT_NEAR(s.imag(), 0.0, 1e-12);
}

TEST(Schwarzian, SampledSquare) {
  const Complex s = schwarzian(sampled_power(2.0), {0.0, 1.0});
  EXPECT_NEAR(std::abs(s - Complex(1.5, 0.0)) / 1.5, 0.0, 1e-8);
}

TEST(Schwarzian, SampledPowersMatchClosedForm) {
  std::vector<Complex> alphas = {2.0, Complex(0.0, 2.0)};
  for (double ell : ell_grid()) alphas.push_back(Complex(0.0, 2.0 * kPi / ell));
  for (Complex alpha : alphas) {
    const HolomorphicMap f = sampled_power(alpha);
    for (Complex z : random_points(50, 11)) {
      const Complex expected = (1.0 - alpha * alpha) / (2.0 * z * z);
      const Complex got = schwarzian_numeric(f, z);
      EXPECT_LT(std::abs(got - expected) / std::abs(expected), 1e-8) << alpha << " at " << z;
    }
  }
}

TEST(Schwarzian, VanishingDerivativeThrows) {
  EXPECT_THROW(schwarzian(HolomorphicMap::power(2.0), {0.0, 0.0}), std::exception);
}

TEST(SchwarzianCompose, Examples) {
  const HolomorphicMap sq = HolomorphicMap::power(2.0);
  const HolomorphicMap mob = HolomorphicMap::mobius(MobiusMap({1.0}, {2.0}, {0.5}, {2.0}));
  EXPECT_LT(schwarzian_compose_residual(mob, sq, {1.0, 1.0}), 1e-12);
  EXPECT_LT(schwarzian_compose_residual(sq, HolomorphicMap::mobius(MobiusMap({2.0}, {1.0}, {0.0}, {0.5})),
                                        {1.0, 1.0}),
            1e-9);
  const HolomorphicMap lift = HolomorphicMap::mobius(MobiusMap::scaling(std::exp(0.3)));
  EXPECT_LT(schwarzian_compose_residual(symmetric_developing_map(1.0), lift, {0.2, 1.1}), 1e-9);
}

TEST(SchwarzianCompose, InverseSymmetricMap) {
  // f_ell^{-1}(w) = w^{ell/(2 pi i)}; the inverse has S = (1 + ell^2/(4pi^2))/(2 w^2).
  const double ell = 1.0;
  const Complex beta = Complex(0.0, -ell / (2.0 * kPi));
  const HolomorphicMap inv = HolomorphicMap::power(beta);
  const Complex w{0.3, 0.4};
  const Complex expected = (1.0 + ell * ell / (4.0 * kPi * kPi)) / (2.0 * w * w);
  EXPECT_LT(std::abs(schwarzian(inv, w) - expected), 1e-12);
}

TEST(SchwarzianCompose, RandomPairsProperty) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.5, 2.0), ph(-0.3, 0.3);
  int checked = 0;
  for (Complex z : random_points(100, 5)) {
    // g keeps the upper half-plane inside the domain of every outer map.
    const double a = u(rng), b = ph(rng);
    const HolomorphicMap g = HolomorphicMap::mobius(MobiusMap({a}, {b}, {0.0}, {1.0 / a}));
    const std::array<HolomorphicMap, 3> fs = {
        HolomorphicMap::power(Complex(u(rng), ph(rng))),
        HolomorphicMap::mobius(MobiusMap({1.0}, {u(rng)}, {ph(rng)}, {1.0 + ph(rng)})),
        HolomorphicMap::exp_scaled(Complex(ph(rng), u(rng)))};
    for (const auto& f : fs) {
      EXPECT_LT(schwarzian_compose_residual(f, g, z), 1e-9);
      ++checked;
    }
    EXPECT_LT(schwarzian_compose_residual(fs[2], fs[0], z), 1e-9);
  }
  EXPECT_EQ(checked, 300);
}

TEST(InfinityNorm, ZeroDifferential) {
  EXPECT_EQ(infinity_norm_estimate(QuadraticDifferential::zero()), 0.0);
}

TEST(InfinityNorm, SymmetricTubeOnImaginaryAxis) {
  NormGrid grid;
  grid.n_angles = 63;  // odd, so pi/2 is a node
  const auto q = schwarzian_differential(symmetric_developing_map(1.0));
  EXPECT_NEAR(infinity_norm_estimate(q, grid), 20.23920880217872, 1e-9);
}

TEST(InfinityNorm, UnivalentMapBelowNehari) {
  // z -> z^{1/2} is univalent on the half-plane.
  const auto q = schwarzian_differential(HolomorphicMap::power(0.5));
  EXPECT_LE(infinity_norm_estimate(q), 1.5);
}

TEST(InfinityNorm, MonotoneUnderRefinement) {
  const auto q = schwarzian_differential(HolomorphicMap::exp_scaled(Complex(0.4, 0.1)));
  NormGrid grid;
  grid.n_radii = 9;
  grid.n_angles = 9;
  double prev = infinity_norm_estimate(q, grid);
  for (int i = 0; i < 3; ++i) {
    grid = grid.refined();
    const double next = infinity_norm_estimate(q, grid);
    EXPECT_GE(next, prev);
    prev = next;
  }
}

TEST(KraMaskit, Values) {
  EXPECT_NEAR(kra_maskit_lower(0.5), 8.335396178065528, 1e-12);
  EXPECT_NEAR(kra_maskit_lower(60.0), 0.5, 1e-12);
  EXPECT_GE(0.5 * (1.0 + 4.0 * kPi * kPi), kra_maskit_lower(0.5));
  EXPECT_THROW(kra_maskit_lower(0.0), DomainError);
}

TEST(KraMaskit, SymmetricTubeConsistency) {
  NormGrid grid;
  grid.n_angles = 63;
  for (double ell : ell_grid()) {
    const auto q = schwarzian_differential(symmetric_developing_map(ell));
    EXPECT_GE(infinity_norm_estimate(q, grid), kra_maskit_lower(ell / 2.0)) << ell;
  }
}

TEST(Holomorphy, SchwarzianIsHolomorphic) {
  const auto q = schwarzian_differential(HolomorphicMap::composite(
      {HolomorphicMap::mobius(MobiusMap({1.0}, {0.5}, {0.0}, {1.0})), HolomorphicMap::power(1.7)}));
  const auto pts = random_points(20, 9);
  EXPECT_LT(holomorphy_residual(q, pts), 1e-5);
}
