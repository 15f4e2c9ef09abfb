#include "longtube/tube_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "longtube/errors.hpp"

namespace longtube {

namespace {

// arsinh(1/x) for x > 0 without forming 1/x - large cancellation.
double arsinh_inverse(double x) { return std::log((1.0 + std::sqrt(1.0 + x * x)) / x); }

double arcosh(double x) { return std::log(x + std::sqrt((x - 1.0) * (x + 1.0))); }

}  // namespace

void check_core_length(double ell) {
  if (!(ell > 0.0) || ell > kEps0 * (1.0 + 1e-15)) {
    throw DomainError("core length must lie in (0, eps0], got " + std::to_string(ell));
  }
}

double TubeParams::exp_neg_m() const { return std::exp(-m); }

double collar_width(double ell) {
  check_core_length(ell);
  return arsinh_inverse(std::sinh(0.5 * ell));
}

double flat_halfwidth(double ell) {
  check_core_length(ell);
  // sinh L = 1 / sinh(ell/2) exactly.
  return 2.0 * kPi * std::atan(1.0 / std::sinh(0.5 * ell)) / ell;
}

TubeParams make_tube(double ell) {
  const double m = flat_halfwidth(ell);
  return {ell, collar_width(ell), m, m / kPi};
}

double injectivity_profile(double ell, double d) {
  const double L = collar_width(ell);
  if (!(d >= 0.0) || d > L) throw DomainError("distance to boundary outside [0, L]");
  return std::asinh(std::sinh(0.5 * ell) * std::cosh(L - d));
}

double boundary_length(double ell) {
  check_core_length(ell);
  const double s = std::sinh(0.5 * ell);
  // ell cosh L with cosh L = sqrt(1 + 1/s^2)
  return ell * std::sqrt(1.0 + s * s) / s;
}

HolomorphicMap symmetric_developing_map(double ell) {
  if (!(ell > 0.0)) throw DomainError("core length must be positive");
  return HolomorphicMap::power(Complex{0.0, 2.0 * kPi / ell});
}

Complex symmetric_schwarzian(double ell, Complex z) {
  if (!(ell > 0.0)) throw DomainError("core length must be positive");
  const double c = 1.0 + 4.0 * kPi * kPi / (ell * ell);
  return c / (2.0 * z * z);
}

double AnnulusSpec::inner_radius() const { return std::exp(log_inner); }
double AnnulusSpec::outer_radius() const { return std::exp(log_outer); }
double AnnulusSpec::modulus() const { return (log_outer - log_inner) / (2.0 * kPi); }

AnnulusSpec annulus_radii(double ell, double L) {
  if (!(ell > 0.0) || !(L > 0.0)) throw DomainError("annulus needs ell > 0 and L > 0");
  const double a = std::asin(1.0 / std::cosh(L));
  const double first = -2.0 * kPi / ell * a;
  const double second = -2.0 * kPi * kPi / ell + 2.0 * kPi / ell * a;
  AnnulusSpec out{std::min(first, second), std::max(first, second)};
  if (!(out.log_inner < out.log_outer)) throw DomainError("degenerate annulus");
  return out;
}

double alpha_distance_for_length(double ell, double target_length) {
  const double L = collar_width(ell);
  const double top = boundary_length(ell);
  const double slack = 1e-12 * top;
  if (target_length < ell - slack || target_length > top + slack) {
    throw DomainError("target length outside [ell, boundary_length(ell)]");
  }
  const double ratio = std::max(1.0, target_length / ell);
  return std::clamp(L - arcosh(ratio), 0.0, L);
}

}  // namespace longtube
