#pragma once

#include <array>
#include <functional>
#include <vector>

#include "longtube/bound_report.hpp"
#include "longtube/fourier_annulus.hpp"
#include "longtube/osgood_stowe.hpp"
#include "longtube/schwarzian.hpp"
#include "longtube/synthetic_tube.hpp"

namespace longtube {

// The closed geodesic of length ell, parameterized by t in [0, ell] in every chart:
//   plane_xy:        gamma(t) = i e^t
//   tube_rho_theta:  gamma(t) = (0, 2 pi t / ell)
//   flat_r_theta:    gamma(t) = (0, 2 pi t / ell)
struct CoreCurve {
  double ell = 0.0;
  Chart chart = Chart::plane_xy;

  static CoreCurve halfplane(double ell);
  static CoreCurve tube(double ell);
  static CoreCurve flat(double ell);

  Point2 point(double t) const;
  std::array<double, 2> velocity(double t) const;
  // Velocity rotated by a quarter turn, the direction of the earthquake field.
  std::array<double, 2> rotated_velocity(double t) const;
};

struct PairingResult {
  double earthquake_value = 0.0;
  double grafting_value = 0.0;
  // Largest change between n and 2n nodes.
  double quadrature_error_estimate = 0.0;
};

inline constexpr int kPairingNodes = 256;

// -1/2 int Re(q (i gamma', gamma')) dt along a half-plane core.
double pair_earthquake(const QuadraticDifferential& q, const CoreCurve& core,
                       int nodes = kPairingNodes);
// -1/2 int Re(q (gamma', gamma')) dt
double pair_grafting(const QuadraticDifferential& q, const CoreCurve& core,
                     int nodes = kPairingNodes);
PairingResult pair(const QuadraticDifferential& q, const CoreCurve& core,
                   int nodes = kPairingNodes);

// The same two pairings for a real symmetric tensor field given in the core's chart.
PairingResult pair_tensor(const std::function<SymTensor2(Point2)>& tensor, const CoreCurve& core,
                          int nodes = kPairingNodes);

// Term values carry the sign opposite to the pairings above, which puts the grafting
// value of the symmetric tube at +pi^2/ell + ell/4.
struct TermValues {
  double eq = 0.0;
  double gr = 0.0;
  double bound_eq = 0.0;
  double bound_gr = 0.0;

  double norm_eq() const { return std::abs(eq); }
  double norm_gr() const { return std::abs(gr); }
};

// log(2 pi / (ell cosh rho)), the factor taking the hyperbolic tube metric to the flat one.
ScalarField tube_flat_factor(double ell);

TermValues term_B1(double ell);
// Quadratic part of the tensor of u along the core; its linear part integrates to zero.
TermValues term_B2(const FourierHarmonic& fh, double ell, double W, int nodes = 0);

struct TermB3 : TermValues {
  // gr - pi^2/ell, kept apart from the large center
  double gr_remainder = 0.0;
  Complex closure_defect{};
};
TermB3 term_B3(const FourierHarmonic& fh, double ell, double W, int steps = 4096);
TermB3 term_B3(const DevelopedCurve& dc, double W);

struct TotalBounds {
  double eq_bound = 0.0;
  double gr_center = 0.0;
  double gr_bound = 0.0;
  // gr_bound - gr_center - ell/4
  double gr_remainder_bound = 0.0;
};
TotalBounds total_bounds(double ell, double W);

struct DecompositionResidual {
  double earthquake = 0.0;
  double grafting = 0.0;
};
// Pairing of S(f_ell) against term_B1 + term_B3 of the symmetric tube.
DecompositionResidual decomposition_residual_symmetric(double ell);

struct TubeAnalysis {
  TermValues b1;
  TermValues b2;
  TermB3 b3;
  TotalBounds totals;
  double eq_total = 0.0;
  // measured grafting value - pi^2/ell - ell/4
  double gr_remainder = 0.0;
  double gr_remainder_tolerance = 0.0;
  std::vector<BoundReport> reports;
};
TubeAnalysis analyze_tube(const SyntheticTube& tube, int steps = 4096);
// Reuses a development of tube.fh.
TubeAnalysis analyze_tube(const SyntheticTube& tube, const DevelopedCurve& dc);

}  // namespace longtube
