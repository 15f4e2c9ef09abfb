#pragma once

#include "longtube/holomorphic.hpp"

namespace longtube {

// 2 arsinh(1) = 2 log(1 + sqrt 2), the largest admissible core length.
inline constexpr double kEps0 = 1.7627471740390860504652186499596;

// Below this core length e^{-m} is no longer representable; use log-space accessors.
inline constexpr double kEllPrecisionFloor = 1e-4;

struct TubeParams {
  double ell;
  double L;        // collar width
  double m;        // flat half-width
  double modulus;  // m / pi

  double log_exp_neg_m() const { return -m; }
  double exp_neg_m() const;
  bool precision_warning() const { return ell < kEllPrecisionFloor; }
};

// Throws DomainError unless 0 < ell <= eps0.
void check_core_length(double ell);

TubeParams make_tube(double ell);

double collar_width(double ell);
double flat_halfwidth(double ell);
double injectivity_profile(double ell, double d);
double boundary_length(double ell);

// z -> z^{2 pi i / ell} on the upper half-plane.
HolomorphicMap symmetric_developing_map(double ell);
// Closed-form coefficient of S(f_ell).
Complex symmetric_schwarzian(double ell, Complex z);

struct AnnulusSpec {
  double log_inner;
  double log_outer;

  double inner_radius() const;
  double outer_radius() const;
  double modulus() const;
};

AnnulusSpec annulus_radii(double ell, double L);

double alpha_distance_for_length(double ell, double target_length);

}  // namespace longtube
