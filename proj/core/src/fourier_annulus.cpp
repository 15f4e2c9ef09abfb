#include "longtube/fourier_annulus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "longtube/collar_bounds.hpp"
#include "longtube/errors.hpp"
#include "longtube/tube_geometry.hpp"

namespace longtube {

namespace {

constexpr Complex kI{0.0, 1.0};

struct RadialRatios {
  double ch_ch;  // cosh(kr)/cosh(km)
  double sh_ch;  // sinh(kr)/cosh(km)
  double ch_sh;  // cosh(kr)/sinh(km)
  double sh_sh;  // sinh(kr)/sinh(km)
};

RadialRatios radial_ratios(int k, double r, double m) {
  const double ar = std::abs(r);
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const double base = std::exp(k * (ar - m));
  const double plus_r = 1.0 + std::exp(-2.0 * k * ar);
  const double minus_r = -std::expm1(-2.0 * k * ar);
  const double plus_m = 1.0 + std::exp(-2.0 * k * m);
  const double minus_m = -std::expm1(-2.0 * k * m);
  return {base * plus_r / plus_m, sign * base * minus_r / plus_m, base * plus_r / minus_m,
          sign * base * minus_r / minus_m};
}

std::vector<double> sample_grid(int n) {
  std::vector<double> t(n);
  for (int j = 0; j < n; ++j) t[j] = 2.0 * kPi * j / n;
  return t;
}

}  // namespace

Complex expm1_complex(Complex z) {
  if (std::abs(z) < 1e-3) {
    // Horner form of z + z^2/2 + ... + z^7/7!
    Complex s = 1.0 / 5040.0;
    for (double c : {1.0 / 720.0, 1.0 / 120.0, 1.0 / 24.0, 1.0 / 6.0, 0.5, 1.0}) s = s * z + c;
    return s * z;
  }
  const double x = z.real(), y = z.imag();
  const double half = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half * half, std::exp(x) * std::sin(y)};
}

FourierHarmonic::FourierHarmonic(double m, double c0, double c1, std::vector<Complex> even,
                                 std::vector<Complex> odd, double v0)
    : m_(m), c0_(c0), c1_(c1), v0_(v0), even_(std::move(even)), odd_(std::move(odd)) {
  if (!(m > 0.0)) throw DomainError("half-width must be positive");
  if (even_.size() != odd_.size()) throw DomainError("mode vectors differ in length");
  core_v1_.resize(even_.size());
  core_v2_.resize(odd_.size());
  for (std::size_t i = 0; i < even_.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double e = std::exp(-k * m);
    core_v1_[i] = even_[i] * (2.0 * e / (1.0 + e * e));
    core_v2_[i] = odd_[i] * (2.0 * e / -std::expm1(-2.0 * k * m));
  }
}

FourierHarmonic FourierHarmonic::constant(double m, double c, int K) {
  return {m, c, 0.0, std::vector<Complex>(K), std::vector<Complex>(K)};
}

double FourierHarmonic::v1_scaled(int k) const {
  return std::abs(even(k)) * 2.0 / (1.0 + std::exp(-2.0 * k * m_));
}

double FourierHarmonic::v2_scaled(int k) const {
  return std::abs(odd(k)) * 2.0 / -std::expm1(-2.0 * k * m_);
}

FourierHarmonic FourierHarmonic::with_zero_mode(double c0, double v0) const {
  return {m_, c0, c1_, even_, odd_, v0};
}

Partials FourierHarmonic::eval_partials(double r, double theta) const {
  if (!(std::abs(r) <= m_ * (1.0 + 1e-12))) throw DomainError("r outside [-m, m]");
  r = std::clamp(r, -m_, m_);
  Partials p;
  p.u = c0_ + c1_ * r;
  p.u_r = c1_;
  const Complex step = std::polar(1.0, theta);
  Complex z = 1.0;
  for (int k = 1; k <= K(); ++k) {
    z *= step;
    const RadialRatios rr = radial_ratios(k, r, m_);
    const Complex A = even_[k - 1], B = odd_[k - 1];
    const Complex t = (A * rr.ch_ch + B * rr.sh_sh) * z;
    const Complex tr = static_cast<double>(k) * (A * rr.sh_ch + B * rr.ch_sh) * z;
    const double kk = static_cast<double>(k) * k;
    p.u += 2.0 * t.real();
    p.u_r += 2.0 * tr.real();
    p.u_t += -2.0 * k * t.imag();
    p.u_rr += 2.0 * kk * t.real();
    p.u_rt += -2.0 * k * tr.imag();
    p.u_tt += -2.0 * kk * t.real();
  }
  return p;
}

FourierHarmonic::CoreValues FourierHarmonic::core(double theta) const {
  CoreValues c{c0_, c1_, 0.0, 0.0, 0.0, v0_ + c1_ * theta};
  const Complex step = std::polar(1.0, theta);
  Complex z = 1.0;
  for (int k = 1; k <= K(); ++k) {
    z *= step;
    const Complex a = core_v1_[k - 1] * z;
    const Complex b = core_v2_[k - 1] * z;
    const double kd = k;
    c.u += 2.0 * a.real();
    c.u_r += 2.0 * kd * b.real();
    c.u_t += -2.0 * kd * a.imag();
    c.u_rt += -2.0 * kd * kd * b.imag();
    c.u_rr += 2.0 * kd * kd * a.real();
    c.v += 2.0 * b.imag();
  }
  return c;
}

int default_mode_cutoff(double m) {
  if (!(m > 0.0)) throw DomainError("half-width must be positive");
  return static_cast<int>(std::ceil(40.0 / m)) + 8;
}

double truncation_tail_bound(double m, int K, double W) {
  return 6.0 * W * std::exp(-(K + 1) * m) / -std::expm1(-m);
}

FourierHarmonic fit_boundary(double m, std::span<const double> plus,
                             std::span<const double> minus, int K) {
  if (plus.size() != minus.size()) throw DomainError("boundary grids differ in length");
  if (K < 0) throw DomainError("mode cutoff must be non-negative");
  const int n = static_cast<int>(plus.size());
  if (n < 2 * K + 1) {
    throw DomainError("grid of " + std::to_string(n) + " samples is too short for K = " +
                      std::to_string(K));
  }
  std::vector<Complex> cp(K + 1), cm(K + 1);
  for (int j = 0; j < n; ++j) {
    const Complex step = std::polar(1.0, -2.0 * kPi * j / n);
    Complex z = 1.0;
    for (int k = 0; k <= K; ++k) {
      cp[k] += plus[j] * z;
      cm[k] += minus[j] * z;
      z *= step;
    }
  }
  std::vector<Complex> even(K), odd(K);
  for (int k = 1; k <= K; ++k) {
    even[k - 1] = 0.5 * (cp[k] + cm[k]) / static_cast<double>(n);
    odd[k - 1] = 0.5 * (cp[k] - cm[k]) / static_cast<double>(n);
  }
  const double mean_p = cp[0].real() / n, mean_m = cm[0].real() / n;
  return {m, 0.5 * (mean_p + mean_m), (mean_p - mean_m) / (2.0 * m), std::move(even),
          std::move(odd)};
}

Partials eval_partials(const FourierHarmonic& fh, double r, double theta) {
  return fh.eval_partials(r, theta);
}

double reconstruction_error(const FourierHarmonic& fh, std::span<const double> plus,
                            std::span<const double> minus) {
  const int n = static_cast<int>(plus.size());
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * kPi * j / n;
    worst = std::max(worst, std::abs(fh.eval(fh.m(), t) - plus[j]));
    worst = std::max(worst, std::abs(fh.eval(-fh.m(), t) - minus[j]));
  }
  return worst;
}

FourierHarmonic normalize_holonomy(const FourierHarmonic& fh, int nodes) {
  if (fh.C1() != 0.0) throw DomainError("holonomy normalization needs C1 = 0");
  if (nodes <= 0) nodes = std::max(256, 16 * fh.K());
  // mean of e^{phi} - 1 - phi over the core; the mean of phi itself vanishes.
  Complex w = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * kPi * j / nodes;
    const auto c = fh.core(t);
    const Complex phi{c.u - fh.C0(), c.v - fh.V0()};
    w += expm1_complex(phi) - phi;
  }
  w /= static_cast<double>(nodes);
  const Complex log_mean =
      std::abs(w) < 1e-5 ? w - 0.5 * w * w + w * w * w / 3.0 : std::log(1.0 + w);
  return fh.with_zero_mode(-log_mean.real(), -log_mean.imag());
}

ScalarField fourier_field(const FourierHarmonic& fh) {
  return {ScalarField::Kind::fourier, Chart::flat_r_theta, [fh](Point2 p) {
            const Partials d = fh.eval_partials(p.x1, p.x2);
            return RealJet2{d.u, d.u_r, d.u_t, d.u_rr, d.u_rt, d.u_tt};
          }};
}

std::vector<BoundReport> coefficient_bound_checks(const FourierHarmonic& fh, double W) {
  double a = 0.0, b = 0.0;
  for (int k = 1; k <= fh.K(); ++k) {
    a = std::max(a, fh.v1_scaled(k));
    b = std::max(b, fh.v2_scaled(k));
  }
  return {at_most("v1_coefficients", a, 2.0 * W, "max_k |v1(k)| e^{km} <= 2W", 1e-12 * W),
          at_most("v2_coefficients", b, 4.0 * W, "max_k |v2(k)| e^{km} <= 4W", 1e-12 * W)};
}

std::vector<BoundReport> derivative_bounds_at(const FourierHarmonic& fh, double W, double r,
                                              int samples) {
  const double M = fh.m() - std::abs(r);
  if (!(M > 0.0)) throw DomainError("derivative bounds need |r| < m");
  double s_r = 0, s_t = 0, s_rt = 0, s_rr = 0, s_tt = 0;
  for (double t : sample_grid(samples)) {
    const Partials p = fh.eval_partials(r, t);
    s_r = std::max(s_r, std::abs(p.u_r));
    s_t = std::max(s_t, std::abs(p.u_t));
    s_rt = std::max(s_rt, std::abs(p.u_rt));
    s_rr = std::max(s_rr, std::abs(p.u_rr));
    s_tt = std::max(s_tt, std::abs(p.u_tt));
  }
  const double q1 = decay_ratio(M);
  const double q2 = decay_ratio_second(M);
  const double q2w = decay_ratio_second(2.0 * M);
  return {
      at_most("u_r", s_r, 4.0 * W * q1, "4W e^M/(e^M-1)^2, M = m - |r|"),
      at_most("u_theta", s_t, 2.0 * W * q1, "2W e^M/(e^M-1)^2, M = m - |r|"),
      at_most("u_theta_r", s_rt, 4.0 * W * q2, "4W e^M(e^M+1)/(e^M-1)^3, M = m - |r|"),
      at_most("u_rr", s_rr, 2.0 * W * q2, "2W e^M(e^M+1)/(e^M-1)^3, M = m - |r|"),
      at_most("u_theta_theta", s_tt, 4.0 * W * W * q2w,
              "4W^2 e^{2M}(e^{2M}+1)/(e^{2M}-1)^3, M = m - |r|"),
  };
}

std::vector<BoundReport> derivative_bounds_at_core(const FourierHarmonic& fh, double W,
                                                   int samples) {
  return derivative_bounds_at(fh, W, 0.0, samples);
}

std::vector<BoundReport> core_sup_checks(const FourierHarmonic& fh, double W, double W0,
                                         double ell, int samples) {
  if (std::abs(fh.C0()) > W0 * (1.0 + 1e-12)) throw DomainError("|C0| exceeds W0");
  double sup_u = 0.0, sup_exp = 0.0;
  for (double t : sample_grid(samples)) {
    const double u = fh.core(t).u;
    sup_u = std::max(sup_u, std::abs(u));
    sup_exp = std::max(sup_exp, std::exp(u));
  }
  const double tail = 2.0 * W * std::exp(-fh.m()) / -std::expm1(-fh.m());
  return {
      at_most("core_sup_series", sup_u, W0 + tail, "W0 + 2W/(e^m - 1)"),
      at_most("core_sup_cap", sup_u, kCoreCap, "2.8"),
      at_most("core_exp_estcore", sup_exp, estcore_rhs(ell, W),
              "1 + sqrt2 W e^{2.8} pi q + 2 W q ell + 4 sqrt2 W e^{2.8} pi ell q^2, "
              "q = e^m/(e^m-1)^2"),
  };
}

CoreAcceleration covariant_accel_core(const FourierHarmonic& fh, double ell, double s) {
  const double w = 2.0 * kPi / ell;
  const auto c = fh.core(w * s);
  const double ar = -w * w * c.u_r;
  const double at = w * w * c.u_t;
  return {ar, at, std::exp(c.u) * std::hypot(ar, at)};
}

double almostround_bound(double ell, double W) {
  const double w = 2.0 * kPi / ell;
  return 6.0 * W * std::exp(kGCapExponent) * w * w * decay_ratio(flat_halfwidth(ell));
}

double normbound(double ell, double W, double G) {
  return 4.0 * std::sqrt(2.0) * W * G * kPi * kPi / ell * decay_ratio(flat_halfwidth(ell));
}

double DevelopedCurve::deviation_integral() const {
  double sum = 0.0;
  for (int j = 0; j < steps; ++j) sum += std::norm(deviation[j]);
  return sum * ell / steps;
}

Complex DevelopedCurve::squared_deviation_integral() const {
  Complex sum = 0.0;
  for (int j = 0; j < steps; ++j) sum += deviation[j] * deviation[j];
  return sum * (ell / steps);
}

double DevelopedCurve::speed_residual(const FourierHarmonic& fh) const {
  const double w = 2.0 * kPi / ell;
  double worst = 0.0;
  for (int j = 0; j <= steps; ++j) {
    const double u = fh.core(w * s[j]).u;
    worst = std::max(worst, std::abs(std::abs(velocity[j]) - std::exp(u) * w) / w);
  }
  return worst;
}

DevelopedCurve develop_core(const FourierHarmonic& fh, double ell, int steps) {
  if (steps < 256) throw DomainError("development needs at least 256 steps");
  check_core_length(ell);
  const double w = 2.0 * kPi / ell;
  const double h = ell / steps;

  // Core data on the half-step grid.
  std::vector<double> u(2 * steps + 1), ur(2 * steps + 1);
  for (int i = 0; i <= 2 * steps; ++i) {
    const auto c = fh.core(w * 0.5 * h * i);
    u[i] = c.u;
    ur[i] = c.u_r;
  }

  DevelopedCurve dc;
  dc.ell = ell;
  dc.steps = steps;
  dc.s.resize(steps + 1);
  dc.position.resize(steps + 1);
  dc.velocity.resize(steps + 1);
  dc.deviation.resize(steps + 1);

  // Unknowns relative to the round core: D = w(s) - i w s and the direction offset.
  Complex D = 0.0;
  double psi = fh.core(0.0).v;
  auto record = [&](int j) {
    const Complex E = expm1_complex({u[2 * j], psi});
    dc.s[j] = h * j;
    dc.position[j] = D + Complex{0.0, w * h * j};
    dc.deviation[j] = kI * w * E;
    dc.velocity[j] = kI * w + dc.deviation[j];
  };
  record(0);
  for (int j = 0; j < steps; ++j) {
    const int i = 2 * j;
    const double k1p = w * ur[i];
    const Complex k1d = kI * w * expm1_complex({u[i], psi});
    const double k2p = w * ur[i + 1];
    const Complex k2d = kI * w * expm1_complex({u[i + 1], psi + 0.5 * h * k1p});
    const double k3p = k2p;
    const Complex k3d = kI * w * expm1_complex({u[i + 1], psi + 0.5 * h * k2p});
    const double k4p = w * ur[i + 2];
    const Complex k4d = kI * w * expm1_complex({u[i + 2], psi + h * k3p});
    D += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    record(j + 1);
  }
  dc.closure_defect = D;
  dc.closure_displacement = D + Complex{0.0, 2.0 * kPi};
  return dc;
}

}  // namespace longtube
