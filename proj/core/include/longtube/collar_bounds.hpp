#pragma once

#include <vector>

#include "longtube/bound_report.hpp"

namespace longtube {

inline constexpr double kWCap = 3.7;
inline constexpr double kW0Cap = 2.3;
inline constexpr double kCoreCap = 2.8;
inline constexpr double kGCapExponent = 2.8;

// e^m / (e^m - 1)^2 evaluated through x = e^{-m}.
double decay_ratio(double m);
// e^m (e^m + 1) / (e^m - 1)^3
double decay_ratio_second(double m);

double b_function(double x);
double u3_bound(double eps, double R);

struct CollarRadii {
  double R0;
  double Rdeps;
  double ell_R0;     // minimizer
  double ell_Rdeps;  // minimizer
};

// Objectives whose infima over the core length define the two radii.
double r0_objective(double ell);
double rdeps_objective(double ell);
// Largest core length at which the objective is real-valued.
double r0_domain_limit();
double rdeps_domain_limit();

CollarRadii collar_radii(double tol = 1e-6, double ell_floor = 1e-8);
// collar_radii() at default resolution, computed once.
const CollarRadii& cached_radii();

// The two sides of the boundary estimate for u1 at a curve of hyperbolic length x.
double boundary_lower_side(double x);
double boundary_upper_side(double x);
// Larger of the two sides at x.
double boundary_sup_W_at(double x);
double boundary_sup_W(double ell);
// Evaluation at the curve of length eps0.
double alpha_curve_W0();

double estcore_rhs(double ell, double W);
double G_factor(double ell, double W = kWCap);
double Gbar_factor(double ell, double W = kWCap);

std::vector<BoundReport> mbound_checks(double ell);

}  // namespace longtube
