#include "longtube/schwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "longtube/errors.hpp"

namespace longtube {

QuadraticDifferential QuadraticDifferential::zero() {
  return {[](Complex) { return Complex{0.0, 0.0}; }, Domain::upper_half_plane()};
}

QuadraticDifferential QuadraticDifferential::over_z_squared(Complex c) {
  return {[c](Complex z) { return c / (z * z); }, Domain::upper_half_plane()};
}

Complex schwarzian_from_jet(const Jet3& j) {
  if (!(std::abs(j.d1) > 1e-300)) throw NumericalError("vanishing first derivative");
  const Complex r = j.d2 / j.d1;
  return j.d3 / j.d1 - 1.5 * r * r;
}

Complex schwarzian_numeric(const HolomorphicMap& f, Complex z) {
  return schwarzian_from_jet(f.jet(z));
}

Complex schwarzian(const HolomorphicMap& f, Complex z) {
  if (auto s = f.closed_form_schwarzian(z)) {
    if (!(std::abs(f.jet(z).d1) > 1e-300)) {
      throw NumericalError("vanishing first derivative");
    }
    return *s;
  }
  return schwarzian_numeric(f, z);
}

QuadraticDifferential schwarzian_differential(HolomorphicMap f) {
  Domain d = f.domain();
  return {[f = std::move(f)](Complex z) { return schwarzian(f, z); }, d};
}

double schwarzian_compose_residual(const HolomorphicMap& f, const HolomorphicMap& g,
                                   Complex z) {
  const Jet3 gj = g.jet(z);
  if (!f.domain().contains(gj.f)) throw DomainError("g(z) lies outside the domain of f");
  const auto h = HolomorphicMap::composite({g, f});
  const Complex lhs = schwarzian_numeric(h, z);
  const Complex rhs = schwarzian(f, gj.f) * gj.d1 * gj.d1 + schwarzian(g, z);
  return std::abs(lhs - rhs);
}

double holomorphy_residual(const QuadraticDifferential& q, std::span<const Complex> points,
                           double h) {
  double worst = 0.0;
  for (Complex z : points) {
    const Complex qx = (q(z + h) - q(z - h)) / (2.0 * h);
    const Complex qy = (q(z + Complex{0.0, h}) - q(z - Complex{0.0, h})) / (2.0 * h);
    worst = std::max(worst, std::abs(0.5 * (qx + Complex{0.0, 1.0} * qy)));
  }
  return worst;
}

NormGrid NormGrid::refined() const {
  return {r_min, r_max, 2 * n_radii - 1, 2 * n_angles + 1};
}

double infinity_norm_estimate(const QuadraticDifferential& q, const NormGrid& g) {
  if (g.n_radii < 1 || g.n_angles < 1 || !(g.r_min > 0.0) || g.r_max < g.r_min) {
    throw DomainError("empty sample grid");
  }
  const double lo = std::log(g.r_min);
  const double step = g.n_radii > 1 ? (std::log(g.r_max) - lo) / (g.n_radii - 1) : 0.0;
  double best = 0.0;
  for (int i = 0; i < g.n_radii; ++i) {
    const double r = std::exp(lo + step * i);
    for (int j = 1; j <= g.n_angles; ++j) {
      const Complex z = std::polar(r, kPi * j / (g.n_angles + 1));
      const double y = z.imag();
      best = std::max(best, std::abs(q(z)) * y * y);
    }
  }
  return best;
}

double kra_maskit_lower(double delta) {
  if (!(delta > 0.0)) throw DomainError("Kra-Maskit bound needs delta > 0");
  const double c = 1.0 / std::tanh(0.5 * delta);
  return 0.5 * c * c;
}

}  // namespace longtube
