#include "longtube/collar_bounds.hpp"

#include <cmath>

#include "longtube/errors.hpp"
#include "longtube/halfplane.hpp"
#include "longtube/quadrature.hpp"
#include "longtube/tube_geometry.hpp"

namespace longtube {

namespace {

double coth_squared(double x) {
  const double c = 1.0 / std::tanh(x);
  return c * c;
}

double bisect_limit(double (*arg)(double), double lo, double hi) {
  // arg(lo) >= 1 > arg(hi)
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (arg(mid) >= 1.0 ? lo : hi) = mid;
  }
  return lo;
}

double r0_argument(double ell) { return std::sinh(kEps0 / 4.0) / std::sinh(0.5 * ell); }

double rdeps_inj(double ell) {
  return std::asinh(std::sinh(0.5 * ell) * kEps0 / ell);
}

double rdeps_argument(double ell) {
  return std::sinh(0.5 * rdeps_inj(ell)) / std::sinh(0.5 * ell);
}

}  // namespace

double decay_ratio(double m) {
  const double x = std::exp(-m);
  const double d = -std::expm1(-m);
  return x / (d * d);
}

double decay_ratio_second(double m) {
  const double x = std::exp(-m);
  const double d = -std::expm1(-m);
  return x * (1.0 + x) / (d * d * d);
}

double b_function(double x) {
  if (!(x > 0.0)) throw DomainError("b(x) needs x > 0");
  return 2.0 * kPi * std::exp(0.502 * kPi) * std::exp(-kPi * kPi / (std::sqrt(std::exp(1.0)) * x));
}

double u3_bound(double eps, double R) {
  if (!(eps > 0.0) || !(R > 0.0)) throw DomainError("u3 bound needs eps > 0 and R > 0");
  return 0.5 * std::log((1.0 + 3.0 * coth_squared(0.5 * eps)) * coth_squared(0.5 * R));
}

double r0_objective(double ell) {
  check_core_length(ell);
  const double s = std::sinh(0.5 * ell);
  const double c = std::sinh(kEps0 / 4.0);
  if (c < s) throw DomainError("R0 objective is not real at this core length");
  // arsinh(1/s) - arcosh(c/s) as a single logarithm.
  return std::log((1.0 + std::sqrt(1.0 + s * s)) / (c + std::sqrt((c - s) * (c + s))));
}

double rdeps_objective(double ell) {
  check_core_length(ell);
  const double a = kEps0 / ell;
  const double b = rdeps_argument(ell);
  if (a < 1.0 || b < 1.0) throw DomainError("R_d objective is not real at this core length");
  return std::log((a + std::sqrt((a - 1.0) * (a + 1.0))) / (b + std::sqrt((b - 1.0) * (b + 1.0))));
}

double r0_domain_limit() { return bisect_limit(r0_argument, 1e-8, kEps0); }

double rdeps_domain_limit() { return bisect_limit(rdeps_argument, 1e-8, kEps0); }

CollarRadii collar_radii(double tol, double ell_floor) {
  auto over_log = [](double (*obj)(double)) {
    return [obj](double t) { return obj(std::exp(t)); };
  };
  const auto r0 = golden_section_minimize(over_log(r0_objective), std::log(ell_floor),
                                          std::log(r0_domain_limit()), tol);
  const auto rd = golden_section_minimize(over_log(rdeps_objective), std::log(ell_floor),
                                          std::log(rdeps_domain_limit()), tol);
  return {r0.value, rd.value, std::exp(r0.x), std::exp(rd.x)};
}

double boundary_lower_side(double x) {
  return std::abs(-b_function(x) - std::log(2.0 * kPi / x));
}

const CollarRadii& cached_radii() {
  static const CollarRadii radii = collar_radii();
  return radii;
}

double boundary_upper_side(double x) {
  const double u3 = u3_bound(kEps0 / 4.0, cached_radii().R0);
  return std::abs(u3 - std::log(2.0 * kPi / x));
}

double boundary_sup_W_at(double x) {
  return std::max(boundary_lower_side(x), boundary_upper_side(x));
}

double boundary_sup_W(double ell) { return boundary_sup_W_at(boundary_length(ell)); }

double alpha_curve_W0() {
  const double x = kEps0;
  const double u3 = u3_bound(std::asinh(kEps0 / 2.0), cached_radii().Rdeps);
  return std::max(boundary_lower_side(x), std::abs(u3 - std::log(2.0 * kPi / x)));
}

double estcore_rhs(double ell, double W) {
  const double m = flat_halfwidth(ell);
  const double q = decay_ratio(m);
  const double e28 = std::exp(kGCapExponent);
  const double r2 = std::sqrt(2.0);
  return 1.0 + r2 * W * e28 * kPi * q + 2.0 * W * q * ell + 4.0 * r2 * W * e28 * kPi * ell * q * q;
}

double G_factor(double ell, double W) {
  check_core_length(ell);
  if (!(W > 0.0) || W > kWCap * (1.0 + 1e-12)) throw DomainError("W must lie in (0, 3.7]");
  return std::min(std::exp(kGCapExponent), estcore_rhs(ell, W));
}

double Gbar_factor(double ell, double W) {
  const double k = 16.0 / 15.0;
  const double v = W * G_factor(ell, W) * k * k;
  return v * v;
}

std::vector<BoundReport> mbound_checks(double ell) {
  const TubeParams t = make_tube(ell);
  const double target = kPi * kPi / (2.0 * ell);
  std::vector<BoundReport> out;
  // Compared through the exponents so the check survives underflow of e^{-m}.
  BoundReport first = at_most("exp_neg_m", std::exp(-t.m), std::exp(-target),
                              "e^{-m} <= e^{-pi^2/(2 ell)}", 1e-12);
  first.satisfied = t.m >= target * (1.0 - 1e-14);
  first.margin = t.m - target;
  out.push_back(first);
  // Both sides divided by e^{-m}: 1 / (1 - e^{-m}) < 16/15.
  const double ratio = -1.0 / std::expm1(-t.m);
  BoundReport second = at_most("inverse_exp_m_minus_one_scaled", ratio, 16.0 / 15.0,
                               "(e^m - 1)^{-1} e^m < 16/15");
  second.satisfied = ratio < 16.0 / 15.0;
  out.push_back(second);
  return out;
}

}  // namespace longtube
