#pragma once

#include <span>
#include <vector>

#include "longtube/bound_report.hpp"
#include "longtube/halfplane.hpp"
#include "longtube/osgood_stowe.hpp"

namespace longtube {

struct Partials {
  double u = 0.0;
  double u_r = 0.0;
  double u_t = 0.0;
  double u_rr = 0.0;
  double u_rt = 0.0;
  double u_tt = 0.0;
};

// Harmonic function on [-m, m] x S^1:
//   u = C0 + C1 r + sum_k 2 Re[(A_k cosh(kr)/cosh(km) + B_k sinh(kr)/sinh(km)) e^{ik theta}]
// where A_k, B_k are the even and odd parts of the boundary Fourier coefficients.
// The conjugate function on the core is V0 + C1 theta + sum_k 2 Im[v2(k) e^{ik theta}].
class FourierHarmonic {
 public:
  FourierHarmonic(double m, double c0, double c1, std::vector<Complex> even,
                  std::vector<Complex> odd, double v0 = 0.0);

  static FourierHarmonic constant(double m, double c, int K = 0);

  double m() const { return m_; }
  int K() const { return static_cast<int>(even_.size()); }
  double C0() const { return c0_; }
  double C1() const { return c1_; }
  double V0() const { return v0_; }

  // Boundary-normalized coefficients, k = 1..K.
  Complex even(int k) const { return even_.at(k - 1); }
  Complex odd(int k) const { return odd_.at(k - 1); }
  const std::vector<Complex>& even_modes() const { return even_; }
  const std::vector<Complex>& odd_modes() const { return odd_; }

  // Coefficients of cosh(kr) and sinh(kr); may underflow for large k m.
  Complex v1(int k) const { return core_v1_.at(k - 1); }
  Complex v2(int k) const { return core_v2_.at(k - 1); }
  // |v1(k)| e^{km} and |v2(k)| e^{km}, free of underflow.
  double v1_scaled(int k) const;
  double v2_scaled(int k) const;

  Partials eval_partials(double r, double theta) const;
  double eval(double r, double theta) const { return eval_partials(r, theta).u; }

  // Core values: u, u_r, u_theta, u_{r theta}, u_rr and the conjugate v.
  struct CoreValues {
    double u, u_r, u_t, u_rt, u_rr, v;
  };
  CoreValues core(double theta) const;

  FourierHarmonic with_zero_mode(double c0, double v0) const;

 private:
  double m_;
  double c0_, c1_, v0_;
  std::vector<Complex> even_, odd_;
  std::vector<Complex> core_v1_, core_v2_;
};

int default_mode_cutoff(double m);
// 6 W e^{-(K+1)m} / (1 - e^{-m})
double truncation_tail_bound(double m, int K, double W);

FourierHarmonic fit_boundary(double m, std::span<const double> plus,
                             std::span<const double> minus, int K);

Partials eval_partials(const FourierHarmonic& fh, double r, double theta);

// Largest deviation between the fit and the samples it came from.
double reconstruction_error(const FourierHarmonic& fh, std::span<const double> plus,
                            std::span<const double> minus);

// Shifts C0 and V0 so that the mean of e^{u + iv} over the core equals 1.
FourierHarmonic normalize_holonomy(const FourierHarmonic& fh, int nodes = 0);

ScalarField fourier_field(const FourierHarmonic& fh);

std::vector<BoundReport> coefficient_bound_checks(const FourierHarmonic& fh, double W);
std::vector<BoundReport> derivative_bounds_at(const FourierHarmonic& fh, double W, double r,
                                              int samples = 256);
std::vector<BoundReport> derivative_bounds_at_core(const FourierHarmonic& fh, double W,
                                                   int samples = 256);
std::vector<BoundReport> core_sup_checks(const FourierHarmonic& fh, double W, double W0,
                                         double ell, int samples = 256);

struct CoreAcceleration {
  double a_r;
  double a_t;
  double norm_h0;
};

CoreAcceleration covariant_accel_core(const FourierHarmonic& fh, double ell, double s);
double almostround_bound(double ell, double W);

struct DevelopedCurve {
  double ell = 0.0;
  int steps = 0;
  std::vector<double> s;
  std::vector<Complex> position;
  std::vector<Complex> velocity;
  // velocity - i 2 pi / ell, kept separately to preserve relative precision
  std::vector<Complex> deviation;
  Complex closure_displacement{};
  // closure_displacement - 2 pi i
  Complex closure_defect{};

  Complex mean_velocity() const { return closure_displacement / ell; }
  // integral of |velocity - i 2pi/ell|^2 ds
  double deviation_integral() const;
  // integral of (velocity - i 2pi/ell)^2 ds
  Complex squared_deviation_integral() const;
  // largest | |velocity| - e^{u} 2pi/ell | relative to 2pi/ell
  double speed_residual(const FourierHarmonic& fh) const;
};

DevelopedCurve develop_core(const FourierHarmonic& fh, double ell, int steps = 4096);

// 4 sqrt2 W G pi^2 / ell * e^m/(e^m-1)^2
double normbound(double ell, double W, double G);

// e^z - 1 accurate for small |z|.
Complex expm1_complex(Complex z);

}  // namespace longtube
