#include "longtube/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "longtube/collar_bounds.hpp"
#include "longtube/errors.hpp"
#include "longtube/quadrature.hpp"
#include "longtube/tube_geometry.hpp"

namespace longtube {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_nodes(int nodes) {
  if (nodes < 8) throw DomainError("pairing needs at least 8 nodes");
}

void check_W(double W) {
  if (!(W > 0.0) || W > kWCap * (1.0 + 1e-12)) throw DomainError("W must lie in (0, 3.7]");
}

Complex checked_coeff(const QuadraticDifferential& q, Complex z) {
  const Complex v = q(z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericalError("quadratic differential is not finite on the core");
  }
  return v;
}

// -1/2 int Re(q rot gamma' gamma') dt with rot = i (earthquake) or 1 (grafting).
double complex_pairing(const QuadraticDifferential& q, const CoreCurve& core, Complex rot,
                       int nodes) {
  if (core.chart != Chart::plane_xy) throw DomainError("complex pairing needs a half-plane core");
  check_nodes(nodes);
  return periodic_trapezoid(
      [&](double t) {
        const Complex z{0.0, std::exp(t)};
        return -0.5 * (checked_coeff(q, z) * rot * z * z).real();
      },
      0.0, core.ell, nodes);
}

}  // namespace

CoreCurve CoreCurve::halfplane(double ell) {
  check_core_length(ell);
  return {ell, Chart::plane_xy};
}

CoreCurve CoreCurve::tube(double ell) {
  check_core_length(ell);
  return {ell, Chart::tube_rho_theta};
}

CoreCurve CoreCurve::flat(double ell) {
  check_core_length(ell);
  return {ell, Chart::flat_r_theta};
}

Point2 CoreCurve::point(double t) const {
  if (chart == Chart::plane_xy) return {0.0, std::exp(t)};
  return {0.0, 2.0 * kPi * t / ell};
}

std::array<double, 2> CoreCurve::velocity(double t) const {
  if (chart == Chart::plane_xy) return {0.0, std::exp(t)};
  return {0.0, 2.0 * kPi / ell};
}

std::array<double, 2> CoreCurve::rotated_velocity(double t) const {
  switch (chart) {
    case Chart::plane_xy: return {-std::exp(t), 0.0};
    // unit normal of the hyperbolic tube metric at the core
    case Chart::tube_rho_theta: return {-1.0, 0.0};
    case Chart::flat_r_theta: break;
  }
  return {-2.0 * kPi / ell, 0.0};
}

double pair_earthquake(const QuadraticDifferential& q, const CoreCurve& core, int nodes) {
  return complex_pairing(q, core, kI, nodes);
}

double pair_grafting(const QuadraticDifferential& q, const CoreCurve& core, int nodes) {
  return complex_pairing(q, core, 1.0, nodes);
}

PairingResult pair(const QuadraticDifferential& q, const CoreCurve& core, int nodes) {
  PairingResult r{pair_earthquake(q, core, nodes), pair_grafting(q, core, nodes), 0.0};
  r.quadrature_error_estimate =
      std::max(std::abs(pair_earthquake(q, core, 2 * nodes) - r.earthquake_value),
               std::abs(pair_grafting(q, core, 2 * nodes) - r.grafting_value));
  return r;
}

PairingResult pair_tensor(const std::function<SymTensor2(Point2)>& tensor, const CoreCurve& core,
                          int nodes) {
  check_nodes(nodes);
  auto run = [&](int n) {
    const double h = core.ell / n;
    double eq = 0.0, gr = 0.0;
    for (int j = 0; j < n; ++j) {
      const double t = h * j;
      const SymTensor2 T = tensor(core.point(t));
      const auto v = core.velocity(t);
      eq += T.apply(core.rotated_velocity(t), v);
      gr += T.apply(v, v);
    }
    return std::pair{-0.5 * h * eq, -0.5 * h * gr};
  };
  const auto [eq, gr] = run(nodes);
  const auto [eq2, gr2] = run(2 * nodes);
  return {eq, gr, std::max(std::abs(eq2 - eq), std::abs(gr2 - gr))};
}

ScalarField tube_flat_factor(double ell) {
  check_core_length(ell);
  const double log_w = std::log(2.0 * kPi / ell);
  return ScalarField::closed_form(
      [log_w](Point2 p) {
        const double rho = p.x1;
        const double th = std::tanh(rho);
        RealJet2 j;
        // log cosh, stable for large |rho|
        j.u = log_w - (std::abs(rho) + std::log1p(std::exp(-2.0 * std::abs(rho))) - std::log(2.0));
        j.u1 = -th;
        j.u11 = -(1.0 - th * th);
        return j;
      },
      Chart::tube_rho_theta);
}

TermValues term_B1(double ell) {
  check_core_length(ell);
  const MetricDescriptor g = MetricDescriptor::tube_hyperbolic(ell);
  const ScalarField u0 = tube_flat_factor(ell);
  const PairingResult p =
      pair_tensor([&](Point2 x) { return os_tensor(g, u0, x); }, CoreCurve::tube(ell));
  return {-p.earthquake_value, -p.grafting_value, 0.0, ell / 4.0};
}

TermValues term_B2(const FourierHarmonic& fh, double ell, double W, int nodes) {
  check_core_length(ell);
  check_W(W);
  if (nodes <= 0) nodes = std::max(256, 8 * fh.K());
  // On the core, B(u) = Hess u - du du + |du|^2/2 in the flat chart; paired against
  // gamma' = (0, w) and its rotation (-w, 0).
  double prod = 0.0, diff = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const auto c = fh.core(2.0 * kPi * j / nodes);
    prod += c.u_r * c.u_t;
    diff += 0.5 * (c.u_r * c.u_r - c.u_t * c.u_t);
  }
  const double w = 2.0 * kPi / ell;
  const double scale = 0.5 * ell * w * w / nodes;
  const double m = flat_halfwidth(ell);
  return {scale * prod, scale * diff, 113.0 * kPi * kPi * std::exp(-m) / ell,
          18.0 * kPi * kPi * std::exp(-m) / ell};
}

TermB3 term_B3(const FourierHarmonic& fh, double ell, double W, int steps) {
  check_W(W);
  return term_B3(develop_core(fh, ell, steps), W);
}

TermB3 term_B3(const DevelopedCurve& dc, double W) {
  check_W(W);
  const double ell = dc.ell;
  // S of the strip uniformization is -dw^2/2; with w' = i 2pi/ell + delta the pairing splits
  // into the center pi^2/ell, a term linear in the closure defect, and the delta^2 term.
  const Complex d2 = dc.squared_deviation_integral();
  const double m = flat_halfwidth(ell);
  const double x = std::exp(-m);
  const double G = G_factor(ell, W);
  const double Gbar = Gbar_factor(ell, W);
  const double pi2 = kPi * kPi;
  TermB3 t;
  t.eq = 0.25 * d2.imag();
  t.gr_remainder = -0.25 * d2.real();
  t.gr = pi2 / ell + t.gr_remainder;
  t.bound_eq = 8.0 * pi2 * pi2 * W * W * G * G / ell * x * x / std::pow(1.0 - x, 4);
  t.bound_gr = pi2 / ell + 8.0 * pi2 * pi2 * Gbar * std::exp(-pi2 / ell) / ell;
  t.closure_defect = dc.closure_defect;
  return t;
}

TotalBounds total_bounds(double ell, double W) {
  check_core_length(ell);
  check_W(W);
  const double pi2 = kPi * kPi;
  const double Gbar = Gbar_factor(ell, W);
  const double small = 8.0 * pi2 * pi2 * Gbar * std::exp(-pi2 / ell) / ell;
  TotalBounds b;
  b.eq_bound = small + 113.0 * pi2 * std::exp(-pi2 / (2.0 * ell)) / ell;
  b.gr_center = pi2 / ell;
  b.gr_remainder_bound = small + 18.0 * pi2 * std::exp(-pi2 / (2.0 * ell)) / ell;
  b.gr_bound = b.gr_center + ell / 4.0 + b.gr_remainder_bound;
  return b;
}

DecompositionResidual decomposition_residual_symmetric(double ell) {
  const QuadraticDifferential q = schwarzian_differential(symmetric_developing_map(ell));
  const PairingResult p = pair(q, CoreCurve::halfplane(ell));
  const TermValues b1 = term_B1(ell);
  const TermB3 b3 = term_B3(FourierHarmonic::constant(flat_halfwidth(ell), 0.0), ell, kWCap);
  return {std::abs(p.earthquake_value + (b1.eq + b3.eq)),
          std::abs(p.grafting_value + (b1.gr + b3.gr))};
}

TubeAnalysis analyze_tube(const SyntheticTube& tube, int steps) {
  return analyze_tube(tube, develop_core(tube.fh, tube.ell, steps));
}

TubeAnalysis analyze_tube(const SyntheticTube& tube, const DevelopedCurve& dc) {
  const double ell = tube.ell;
  if (dc.ell != ell) throw DomainError("development belongs to another core length");
  TubeAnalysis a;
  a.b1 = term_B1(ell);
  a.b2 = term_B2(tube.fh, ell, tube.W);
  a.b3 = term_B3(dc, tube.W);
  a.totals = total_bounds(ell, tube.W);
  a.eq_total = std::abs(a.b1.eq + a.b2.eq + a.b3.eq);
  a.gr_remainder = (a.b1.gr - ell / 4.0) + a.b2.gr + a.b3.gr_remainder;
  // Resolution of a grafting value of size pi^2/ell + ell/4 in double precision.
  a.gr_remainder_tolerance =
      4.0 * std::numeric_limits<double>::epsilon() * (kPi * kPi / ell + ell / 4.0);
  a.reports = {
      at_most("term_B2_eq", a.b2.norm_eq(), a.b2.bound_eq, "113 pi^2 e^{-m} / ell"),
      at_most("term_B2_gr", a.b2.norm_gr(), a.b2.bound_gr, "18 pi^2 e^{-m} / ell"),
      at_most("term_B3_eq", a.b3.norm_eq(), a.b3.bound_eq,
              "8 pi^4 W^2 G^2 / ell * e^{2m}/(e^m-1)^4"),
      at_most("term_B3_gr", a.b3.norm_gr(), a.b3.bound_gr,
              "pi^2/ell + 8 pi^4 Gbar e^{-pi^2/ell} / ell"),
      at_most("total_eq", a.eq_total, a.totals.eq_bound,
              "8 pi^4 Gbar e^{-pi^2/ell}/ell + 113 pi^2 e^{-pi^2/(2 ell)}/ell"),
      at_most("total_gr_remainder", std::abs(a.gr_remainder), a.totals.gr_remainder_bound,
              "8 pi^4 Gbar e^{-pi^2/ell}/ell + 18 pi^2 e^{-pi^2/(2 ell)}/ell",
              a.gr_remainder_tolerance),
  };
  return a;
}

}  // namespace longtube
