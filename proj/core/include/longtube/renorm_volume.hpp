#pragma once

#include <vector>

#include "longtube/bound_report.hpp"
#include "longtube/collar_bounds.hpp"

namespace longtube {

// Bound on |V_R(M_t) - V_R(M_0)| along an earthquake of time t about a geodesic of length ell.
double earthquake_variation_bound(double ell, double t, double W = kWCap);

struct LengthEnvelope {
  double upper;
  double lower;
};
// Core length after grafting by s: pi l0/(pi+s) >= l_s >= pi l0/(2(pi+s)).
LengthEnvelope grafting_length_bounds(double ell0, double s);

// pi/4 + pi^3/ell^2
double gardiner_coefficient(double ell);

// -pi^3/ells + pi^3/ell0 + (ells - ell0) pi/4
double vr_asymptotic(double ell0, double ells);

// |int_{ell0}^{ells} gardiner_coefficient - vr_asymptotic(ell0, ells)| by Gauss-Legendre.
double integral_identity_residual(double ell0, double ells, int n = 1024);

struct GraftPathRow {
  double s;
  double ell_upper;
  double ell_lower;
  double vr_delta_upper;
  double vr_delta_lower;
  // e^{-pi s/(2 l0)} s^2 and e^{-pi s/(2 l0)} s^3, unit constant
  double error_envelope_s2;
  double error_envelope_s3;
};

std::vector<GraftPathRow> vr_path_table(double ell0, double s_max, int n_rows);

// e^{-pi^2/(2 l_s)}/l_s^2 <= 4(pi+s)^2/(pi^2 l0^2) e^{-pi(pi+s)/(2 l0)} at the lower envelope.
BoundReport error_term_transfer_check(double ell0, double s);

}  // namespace longtube
