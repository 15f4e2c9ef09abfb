#include "longtube/osgood_stowe.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "longtube/errors.hpp"
#include "longtube/schwarzian.hpp"

namespace longtube {

RealJet2 to_real_jet(const WirtingerJet& w) {
  RealJet2 j;
  j.u = w.s;
  j.u1 = 2.0 * w.s_z.real();
  j.u2 = -2.0 * w.s_z.imag();
  j.u11 = 2.0 * w.s_zz.real() + 2.0 * w.s_zzbar;
  j.u22 = -2.0 * w.s_zz.real() + 2.0 * w.s_zzbar;
  j.u12 = -2.0 * w.s_zz.imag();
  return j;
}

SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b) {
  return {a.t11 + b.t11, a.t12 + b.t12, a.t22 + b.t22, a.chart};
}

SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b) {
  return {a.t11 - b.t11, a.t12 - b.t12, a.t22 - b.t22, a.chart};
}

SymTensor2 operator*(double s, const SymTensor2& a) {
  return {s * a.t11, s * a.t12, s * a.t22, a.chart};
}

double max_abs_difference(const SymTensor2& a, const SymTensor2& b) {
  return std::max({std::abs(a.t11 - b.t11), std::abs(a.t12 - b.t12), std::abs(a.t22 - b.t22)});
}

// ---------------------------------------------------------------- ScalarField

ScalarField::ScalarField(Kind kind, Chart chart, Eval eval)
    : kind_(kind), chart_(chart), eval_(std::move(eval)) {}

ScalarField ScalarField::constant(double c, Chart chart) {
  return {Kind::closed_form, chart, [c](Point2) {
            RealJet2 j;
            j.u = c;
            return j;
          }};
}

ScalarField ScalarField::closed_form(Eval eval, Chart chart) {
  return {Kind::closed_form, chart, std::move(eval)};
}

ScalarField ScalarField::wirtinger(std::function<WirtingerJet(Complex)> eval) {
  return {Kind::closed_form, Chart::plane_xy,
          [eval = std::move(eval)](Point2 p) { return to_real_jet(eval({p.x1, p.x2})); }};
}

namespace {

WirtingerJet log_abs_derivative_jet(const Jet3& j) {
  if (!(std::abs(j.d1) > 1e-300)) throw NumericalError("vanishing first derivative");
  const Complex r = j.d2 / j.d1;
  WirtingerJet w;
  w.s = std::log(std::abs(j.d1));
  w.s_z = 0.5 * r;
  w.s_zz = 0.5 * (j.d3 / j.d1 - r * r);
  w.s_zzbar = 0.0;
  return w;
}

// log Im z
WirtingerJet log_height_jet(Complex z) {
  const double y = z.imag();
  WirtingerJet w;
  w.s = std::log(y);
  w.s_z = Complex{0.0, -0.5 / y};
  w.s_zz = 0.25 / (y * y);
  w.s_zzbar = -0.25 / (y * y);
  return w;
}

WirtingerJet add(const WirtingerJet& a, const WirtingerJet& b) {
  return {a.s + b.s, a.s_z + b.s_z, a.s_zz + b.s_zz, a.s_zzbar + b.s_zzbar};
}

WirtingerJet scale(double c, const WirtingerJet& a) {
  return {c * a.s, c * a.s_z, c * a.s_zz, c * a.s_zzbar};
}

// sigma(w(z)) for a holomorphic w with jet (w, w', w'', w''').
WirtingerJet compose(const WirtingerJet& sigma, const Jet3& w) {
  WirtingerJet out;
  out.s = sigma.s;
  out.s_z = sigma.s_z * w.d1;
  out.s_zz = sigma.s_zz * w.d1 * w.d1 + sigma.s_z * w.d2;
  out.s_zzbar = sigma.s_zzbar * std::norm(w.d1);
  return out;
}

}  // namespace

ScalarField ScalarField::from_holomorphic(HolomorphicMap f) {
  return {Kind::from_holomorphic, Chart::plane_xy, [f = std::move(f)](Point2 p) {
            const Complex z{p.x1, p.x2};
            if (!(z.imag() > 0.0)) throw DomainError("point outside the upper half-plane");
            return to_real_jet(add(log_abs_derivative_jet(f.jet(z)), log_height_jet(z)));
          }};
}

ScalarField ScalarField::log_abs_derivative(HolomorphicMap f) {
  return {Kind::from_holomorphic, Chart::plane_xy, [f = std::move(f)](Point2 p) {
            return to_real_jet(log_abs_derivative_jet(f.jet({p.x1, p.x2})));
          }};
}

ScalarField ScalarField::operator+(const ScalarField& other) const {
  if (chart_ != other.chart_) throw DomainError("adding scalar fields on different charts");
  const Kind k = kind_ == other.kind_ ? kind_ : Kind::closed_form;
  return {k, chart_, [a = eval_, b = other.eval_](Point2 p) {
            const RealJet2 x = a(p), y = b(p);
            return RealJet2{x.u + y.u,     x.u1 + y.u1,   x.u2 + y.u2,
                            x.u11 + y.u11, x.u12 + y.u12, x.u22 + y.u22};
          }};
}

ScalarField ScalarField::operator-() const {
  return {kind_, chart_, [a = eval_](Point2 p) {
            const RealJet2 x = a(p);
            return RealJet2{-x.u, -x.u1, -x.u2, -x.u11, -x.u12, -x.u22};
          }};
}

// ----------------------------------------------------------- MetricDescriptor

MetricDescriptor::MetricDescriptor(Kind kind, Chart chart) : kind_(kind), chart_(chart) {}

MetricDescriptor MetricDescriptor::hyperbolic_halfplane() {
  return {Kind::hyperbolic_halfplane, Chart::plane_xy};
}

MetricDescriptor MetricDescriptor::euclidean(double log_scale) {
  MetricDescriptor g(Kind::euclidean, Chart::plane_xy);
  g.log_scale_ = log_scale;
  return g;
}

MetricDescriptor MetricDescriptor::flat_cylinder() { return {Kind::flat_cylinder, Chart::plane_xy}; }

MetricDescriptor MetricDescriptor::spherical() { return {Kind::spherical, Chart::plane_xy}; }

MetricDescriptor MetricDescriptor::tube_hyperbolic(double ell) {
  if (!(ell > 0.0)) throw DomainError("tube metric needs ell > 0");
  MetricDescriptor g(Kind::tube_hyperbolic, Chart::tube_rho_theta);
  g.ell_ = ell;
  return g;
}

MetricDescriptor MetricDescriptor::flat_annulus() { return {Kind::flat_annulus, Chart::flat_r_theta}; }

MetricDescriptor MetricDescriptor::conformal(const MetricDescriptor& base, ScalarField u) {
  if (u.chart() != base.chart()) throw DomainError("conformal factor on a different chart");
  MetricDescriptor g(Kind::conformal, base.chart());
  g.base_ = std::make_shared<const MetricDescriptor>(base);
  g.u_ = std::move(u);
  return g;
}

MetricDescriptor MetricDescriptor::pullback(const MetricDescriptor& base, const MobiusMap& m) {
  if (!base.is_standard()) throw DomainError("pullback is defined for standard metrics");
  MetricDescriptor g(Kind::pullback, Chart::plane_xy);
  g.base_ = std::make_shared<const MetricDescriptor>(base);
  g.mobius_ = m;
  return g;
}

bool MetricDescriptor::is_standard() const {
  switch (kind_) {
    case Kind::hyperbolic_halfplane:
    case Kind::euclidean:
    case Kind::spherical:
      return true;
    case Kind::pullback:
      return base_->is_standard();
    default:
      return false;
  }
}

bool MetricDescriptor::is_spherical() const {
  return kind_ == Kind::spherical || (kind_ == Kind::pullback && base_->is_spherical());
}

bool MetricDescriptor::contains(Point2 p) const {
  if (!std::isfinite(p.x1) || !std::isfinite(p.x2)) return false;
  switch (kind_) {
    case Kind::hyperbolic_halfplane:
      return p.x2 > 0.0;
    case Kind::flat_cylinder:
      return p.x1 != 0.0 || p.x2 != 0.0;
    case Kind::conformal:
      return base_->contains(p);
    case Kind::pullback: {
      const Complex z{p.x1, p.x2};
      const Complex den = mobius_->c() * z + mobius_->d();
      if (std::abs(den) < 1e-14) return false;
      const Complex w = mobius_->apply(z);
      return base_->contains({w.real(), w.imag()});
    }
    default:
      return true;
  }
}

WirtingerJet MetricDescriptor::log_density(Complex z) const {
  WirtingerJet w;
  switch (kind_) {
    case Kind::euclidean:
      w.s = log_scale_;
      return w;
    case Kind::hyperbolic_halfplane:
      if (!(z.imag() > 0.0)) throw DomainError("point outside the upper half-plane");
      return scale(-1.0, log_height_jet(z));
    case Kind::flat_cylinder: {
      if (z == Complex{0.0, 0.0}) throw DomainError("flat cylinder metric is singular at 0");
      w.s = -std::log(std::abs(z));
      w.s_z = -0.5 / z;
      w.s_zz = 0.5 / (z * z);
      return w;
    }
    case Kind::spherical: {
      const double d = 1.0 + std::norm(z);
      w.s = std::log(2.0 / d);
      w.s_z = -std::conj(z) / d;
      w.s_zz = std::conj(z) * std::conj(z) / (d * d);
      w.s_zzbar = -1.0 / (d * d);
      return w;
    }
    case Kind::pullback: {
      const MobiusMap& m = *mobius_;
      const Jet3 wj{m.apply(z), m.derivative(z, 1), m.derivative(z, 2), m.derivative(z, 3)};
      return add(compose(base_->log_density(wj.f), wj), log_abs_derivative_jet(wj));
    }
    case Kind::conformal:
      if (chart_ == Chart::plane_xy && base_->chart() == Chart::plane_xy &&
          base_->kind() != Kind::tube_hyperbolic) {
        const WirtingerJet b = base_->log_density(z);
        const RealJet2 uj = u_->jet({z.real(), z.imag()});
        // Rebuild the Wirtinger frame of u from its real partials.
        WirtingerJet uw;
        uw.s = uj.u;
        uw.s_z = Complex{0.5 * uj.u1, -0.5 * uj.u2};
        uw.s_zz = Complex{0.25 * (uj.u11 - uj.u22), -0.5 * uj.u12};
        uw.s_zzbar = 0.25 * (uj.u11 + uj.u22);
        return add(b, uw);
      }
      break;
    default:
      break;
  }
  throw DomainError("metric is not conformally flat in the plane chart");
}

MetricJet MetricDescriptor::jet(Point2 p) const {
  if (!contains(p)) throw DomainError("point outside the metric's chart");
  MetricJet mj;
  mj.g.chart = mj.dg1.chart = mj.dg2.chart = chart_;
  switch (kind_) {
    case Kind::tube_hyperbolic: {
      const double c = ell_ / (2.0 * kPi);
      const double ch = std::cosh(p.x1), sh = std::sinh(p.x1);
      mj.g = {1.0, 0.0, c * c * ch * ch, chart_};
      mj.dg1 = {0.0, 0.0, 2.0 * c * c * ch * sh, chart_};
      return mj;
    }
    case Kind::flat_annulus:
      mj.g = {1.0, 0.0, 1.0, chart_};
      return mj;
    case Kind::conformal: {
      const MetricJet b = base_->jet(p);
      const RealJet2 u = u_->jet(p);
      const double e = std::exp(2.0 * u.u);
      mj.g = e * b.g;
      mj.dg1 = e * (2.0 * u.u1 * b.g + b.dg1);
      mj.dg2 = e * (2.0 * u.u2 * b.g + b.dg2);
      return mj;
    }
    default: {
      const RealJet2 s = to_real_jet(log_density({p.x1, p.x2}));
      const double e = std::exp(2.0 * s.u);
      mj.g = {e, 0.0, e, chart_};
      mj.dg1 = {2.0 * s.u1 * e, 0.0, 2.0 * s.u1 * e, chart_};
      mj.dg2 = {2.0 * s.u2 * e, 0.0, 2.0 * s.u2 * e, chart_};
      return mj;
    }
  }
}

// ------------------------------------------------------------------- tensors

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;

Mat2 to_mat(const SymTensor2& t) { return {{{t.t11, t.t12}, {t.t12, t.t22}}}; }

Mat2 inverse(const Mat2& a) {
  const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (!(det > 0.0)) throw NumericalError("metric is not positive definite");
  return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

struct TensorParts {
  Mat2 hess;
  double du[2];
  double grad2;
  double lap;
  SymTensor2 g;
};

TensorParts tensor_parts(const MetricDescriptor& g, const ScalarField& u, Point2 p) {
  if (u.chart() != g.chart()) throw DomainError("scalar field and metric use different charts");
  const MetricJet mj = g.jet(p);
  const RealJet2 j = u.jet(p);
  const Christoffel gam = christoffel(mj);
  const Mat2 ginv = inverse(to_mat(mj.g));
  TensorParts t;
  t.g = mj.g;
  t.du[0] = j.u1;
  t.du[1] = j.u2;
  const double d2[2][2] = {{j.u11, j.u12}, {j.u12, j.u22}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double h = d2[a][b];
      for (int k = 0; k < 2; ++k) h -= gam.gamma[k][a][b] * t.du[k];
      t.hess[a][b] = h;
    }
  }
  t.grad2 = 0.0;
  t.lap = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      t.grad2 += ginv[a][b] * t.du[a] * t.du[b];
      t.lap += ginv[a][b] * t.hess[a][b];
    }
  }
  return t;
}

SymTensor2 assemble(const TensorParts& t, double trace_coeff) {
  const Mat2 g = to_mat(t.g);
  SymTensor2 out;
  out.chart = t.g.chart;
  out.t11 = t.hess[0][0] - t.du[0] * t.du[0] + trace_coeff * g[0][0];
  out.t12 = 0.5 * (t.hess[0][1] + t.hess[1][0]) - t.du[0] * t.du[1] + trace_coeff * g[0][1];
  out.t22 = t.hess[1][1] - t.du[1] * t.du[1] + trace_coeff * g[1][1];
  return out;
}

}  // namespace

Christoffel christoffel(const MetricJet& mj) {
  const Mat2 ginv = inverse(to_mat(mj.g));
  const Mat2 d[2] = {to_mat(mj.dg1), to_mat(mj.dg2)};
  // dg(k, i, j) = partial_k g_ij
  auto dg = [&d](int k, int i, int j) { return d[k][i][j]; };
  Christoffel c{};
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double s = 0.0;
        for (int l = 0; l < 2; ++l) {
          s += ginv[k][l] * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        }
        c.gamma[k][i][j] = 0.5 * s;
      }
    }
  }
  return c;
}

SymTensor2 os_tensor(const MetricDescriptor& g, const ScalarField& u, Point2 p) {
  const TensorParts t = tensor_parts(g, u, p);
  return assemble(t, -0.5 * (t.lap - t.grad2));
}

SymTensor2 os_full_tensor(const MetricDescriptor& g, const ScalarField& u, Point2 p) {
  const TensorParts t = tensor_parts(g, u, p);
  return assemble(t, 0.5 * t.grad2);
}

double metric_trace(const SymTensor2& t, const SymTensor2& g) {
  const Mat2 gi = inverse(to_mat(g));
  return gi[0][0] * t.t11 + 2.0 * gi[0][1] * t.t12 + gi[1][1] * t.t22;
}

SymTensor2 traceless_part(const SymTensor2& t, const SymTensor2& g) {
  return t - (0.5 * metric_trace(t, g)) * g;
}

double additivity_residual(const MetricDescriptor& g, const ScalarField& u1,
                           const ScalarField& u2, Point2 p) {
  const SymTensor2 whole = os_full_tensor(g, u1 + u2, p);
  const SymTensor2 first = os_full_tensor(g, u1, p);
  const SymTensor2 second = os_full_tensor(MetricDescriptor::conformal(g, u1), u2, p);
  return max_abs_difference(whole, first + second);
}

SymTensor2 quadratic_differential_tensor(Complex q) {
  return {q.real(), -q.imag(), -q.real(), Chart::plane_xy};
}

BridgeSides bridge_sides(const HolomorphicMap& f, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("bridge needs a point of the upper half-plane");
  const SymTensor2 s = quadratic_differential_tensor(schwarzian(f, z));
  const SymTensor2 b = os_tensor(MetricDescriptor::hyperbolic_halfplane(),
                                 ScalarField::from_holomorphic(f), {z.real(), z.imag()});
  return {s, b};
}

double bridge_residual(const HolomorphicMap& f, Complex z) {
  const BridgeSides b = bridge_sides(f, z);
  return max_abs_difference(b.schwarzian_side, b.tensor_side);
}

double standard_pair_residual(const MetricDescriptor& g, const MetricDescriptor& g2, Point2 p) {
  if (!g.is_standard() || !g2.is_standard()) throw DomainError("non-standard metric kind");
  const Complex z{p.x1, p.x2};
  const WirtingerJet a = g.log_density(z);
  const WirtingerJet b = g2.log_density(z);
  const WirtingerJet diff = add(b, scale(-1.0, a));
  const ScalarField u = ScalarField::closed_form([diff](Point2) { return to_real_jet(diff); });
  double residual = max_abs_difference(os_tensor(g, u, p), SymTensor2{});
  if (g.is_spherical() && g2.is_spherical()) {
    const SymTensor2 h1 = g.jet(p).g;
    const SymTensor2 h2 = g2.jet(p).g;
    const SymTensor2 expected = 0.5 * (h1 - h2);
    residual = std::max(residual, max_abs_difference(os_full_tensor(g, u, p), expected));
  }
  return residual;
}

SymTensor2 pull_back(const SymTensor2& t, const Jacobian2& jac, Chart source) {
  const Mat2 m = to_mat(t);
  SymTensor2 out;
  out.chart = source;
  double r[2][2] = {};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double s = 0.0;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) s += m[i][j] * jac[i][a] * jac[j][b];
      }
      r[a][b] = s;
    }
  }
  out.t11 = r[0][0];
  out.t12 = 0.5 * (r[0][1] + r[1][0]);
  out.t22 = r[1][1];
  return out;
}

Jacobian2 holomorphic_jacobian(Complex d) {
  return {{{d.real(), -d.imag()}, {d.imag(), d.real()}}};
}

Complex tube_to_halfplane(double ell, Point2 rt) {
  const double scale = std::exp(ell * rt.x2 / (2.0 * kPi));
  return scale * Complex{std::tanh(rt.x1), 1.0 / std::cosh(rt.x1)};
}

Jacobian2 tube_to_halfplane_jacobian(double ell, Point2 rt) {
  const double scale = std::exp(ell * rt.x2 / (2.0 * kPi));
  const double sech = 1.0 / std::cosh(rt.x1);
  const double th = std::tanh(rt.x1);
  const Complex drho = scale * Complex{sech * sech, -sech * th};
  const Complex dtheta = ell / (2.0 * kPi) * tube_to_halfplane(ell, rt);
  return {{{drho.real(), dtheta.real()}, {drho.imag(), dtheta.imag()}}};
}

}  // namespace longtube
