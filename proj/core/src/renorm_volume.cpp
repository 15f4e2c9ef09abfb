#include "longtube/renorm_volume.hpp"

#include <cmath>

#include "longtube/errors.hpp"
#include "longtube/halfplane.hpp"
#include "longtube/quadrature.hpp"
#include "longtube/tube_geometry.hpp"

namespace longtube {

double earthquake_variation_bound(double ell, double t, double W) {
  check_core_length(ell);
  if (!(t >= 0.0)) throw DomainError("earthquake time must be non-negative");
  const double pi2 = kPi * kPi;
  const double G = G_factor(ell, W);
  return (113.0 * pi2 * std::exp(-pi2 / (2.0 * ell)) / ell +
          142.0 * pi2 * pi2 * G * G * std::exp(-pi2 / ell) / ell) *
         t;
}

LengthEnvelope grafting_length_bounds(double ell0, double s) {
  check_core_length(ell0);
  if (!(s >= 0.0)) throw DomainError("grafting parameter must be non-negative");
  const double upper = ell0 * (kPi / (kPi + s));
  return {upper, 0.5 * upper};
}

double gardiner_coefficient(double ell) {
  if (!(ell > 0.0)) throw DomainError("length must be positive");
  return kPi / 4.0 + kPi * kPi * kPi / (ell * ell);
}

double vr_asymptotic(double ell0, double ells) {
  check_core_length(ell0);
  if (!(ells > 0.0) || ells > ell0) throw DomainError("need 0 < ells <= ell0");
  const double pi3 = kPi * kPi * kPi;
  return -pi3 / ells + pi3 / ell0 + (ells - ell0) * kPi / 4.0;
}

double integral_identity_residual(double ell0, double ells, int n) {
  if (n < 64) throw DomainError("need at least 64 quadrature nodes");
  const double closed = vr_asymptotic(ell0, ells);
  if (ells == ell0) return std::abs(closed);
  const double numeric = integrate_gauss_legendre(gardiner_coefficient, ell0, ells, n);
  return std::abs(numeric - closed);
}

std::vector<GraftPathRow> vr_path_table(double ell0, double s_max, int n_rows) {
  check_core_length(ell0);
  if (!(s_max > 0.0)) throw DomainError("s_max must be positive");
  if (n_rows < 2) throw DomainError("need at least two rows");
  std::vector<GraftPathRow> rows;
  rows.reserve(n_rows);
  for (int i = 0; i < n_rows; ++i) {
    const double s = s_max * i / (n_rows - 1);
    const LengthEnvelope e = grafting_length_bounds(ell0, s);
    const double decay = std::exp(-kPi * s / (2.0 * ell0));
    rows.push_back({s, e.upper, e.lower, vr_asymptotic(ell0, e.upper),
                    vr_asymptotic(ell0, e.lower), decay * s * s, decay * s * s * s});
  }
  return rows;
}

BoundReport error_term_transfer_check(double ell0, double s) {
  const LengthEnvelope e = grafting_length_bounds(ell0, s);
  const double ls = e.lower;
  const double lhs = std::exp(-kPi * kPi / (2.0 * ls)) / (ls * ls);
  const double rhs = 4.0 * (kPi + s) * (kPi + s) / (kPi * kPi * ell0 * ell0) *
                     std::exp(-kPi * (kPi + s) / (2.0 * ell0));
  return at_most("error_term_transfer", lhs, rhs,
                 "e^{-pi^2/(2 l_s)}/l_s^2 <= 4(pi+s)^2/(pi^2 l0^2) e^{-pi(pi+s)/(2 l0)}");
}

}  // namespace longtube
