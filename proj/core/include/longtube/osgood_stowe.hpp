#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>

#include "longtube/holomorphic.hpp"

namespace longtube {

// Coordinate systems tensors and fields are expressed in.
enum class Chart {
  plane_xy,        // z = x + i y
  tube_rho_theta,  // signed distance to the core, angle
  flat_r_theta     // flat annulus [-m, m] x S^1
};

struct Point2 {
  double x1;
  double x2;
};

// Value and partial derivatives up to order two in chart coordinates.
struct RealJet2 {
  double u = 0.0;
  double u1 = 0.0, u2 = 0.0;
  double u11 = 0.0, u12 = 0.0, u22 = 0.0;
};

// Derivatives of a real function s in the Wirtinger frame: s_z, s_zz and s_{z zbar}.
struct WirtingerJet {
  double s = 0.0;
  Complex s_z{};
  Complex s_zz{};
  double s_zzbar = 0.0;
};

RealJet2 to_real_jet(const WirtingerJet& w);

struct SymTensor2 {
  double t11 = 0.0, t12 = 0.0, t22 = 0.0;
  Chart chart = Chart::plane_xy;

  // T(a, b) for tangent vectors in chart components.
  double apply(std::array<double, 2> a, std::array<double, 2> b) const {
    return t11 * a[0] * b[0] + t12 * (a[0] * b[1] + a[1] * b[0]) + t22 * a[1] * b[1];
  }
};

SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b);
SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b);
SymTensor2 operator*(double s, const SymTensor2& a);
double max_abs_difference(const SymTensor2& a, const SymTensor2& b);

class ScalarField {
 public:
  enum class Kind { closed_form, fourier, from_holomorphic };
  using Eval = std::function<RealJet2(Point2)>;

  ScalarField(Kind kind, Chart chart, Eval eval);

  static ScalarField constant(double c, Chart chart = Chart::plane_xy);
  static ScalarField closed_form(Eval eval, Chart chart = Chart::plane_xy);
  // Real function given through Wirtinger derivatives in the plane chart.
  static ScalarField wirtinger(std::function<WirtingerJet(Complex)> eval);
  // log|f'| + log Im z, the factor with f^*|dz|^2 = e^{2u} |dz|^2 / y^2.
  static ScalarField from_holomorphic(HolomorphicMap f);
  // log|f'| alone.
  static ScalarField log_abs_derivative(HolomorphicMap f);

  Kind kind() const { return kind_; }
  Chart chart() const { return chart_; }
  RealJet2 jet(Point2 p) const { return eval_(p); }
  double operator()(Point2 p) const { return eval_(p).u; }

  ScalarField operator+(const ScalarField& other) const;
  ScalarField operator-() const;

 private:
  Kind kind_;
  Chart chart_;
  Eval eval_;
};

// g and its first partials at a point.
struct MetricJet {
  SymTensor2 g;
  SymTensor2 dg1;
  SymTensor2 dg2;
};

class MetricDescriptor {
 public:
  enum class Kind {
    hyperbolic_halfplane,
    euclidean,
    flat_cylinder,
    spherical,
    tube_hyperbolic,
    flat_annulus,
    conformal,
    pullback
  };

  static MetricDescriptor hyperbolic_halfplane();
  // e^{2c} |dz|^2
  static MetricDescriptor euclidean(double log_scale = 0.0);
  static MetricDescriptor flat_cylinder();
  static MetricDescriptor spherical();
  static MetricDescriptor tube_hyperbolic(double ell);
  static MetricDescriptor flat_annulus();
  // e^{2u} base
  static MetricDescriptor conformal(const MetricDescriptor& base, ScalarField u);
  // M^* base for a standard plane metric base.
  static MetricDescriptor pullback(const MetricDescriptor& base, const MobiusMap& m);

  Kind kind() const { return kind_; }
  Chart chart() const { return chart_; }

  bool contains(Point2 p) const;
  MetricJet jet(Point2 p) const;

  // Euclidean, round-sphere and hyperbolic-disk metrics and their Mobius pullbacks.
  bool is_standard() const;
  bool is_spherical() const;
  // For plane-chart conformally flat metrics g = e^{2 sigma} |dz|^2.
  WirtingerJet log_density(Complex z) const;

 private:
  MetricDescriptor(Kind kind, Chart chart);

  Kind kind_;
  Chart chart_;
  double ell_ = 0.0;
  double log_scale_ = 0.0;
  std::shared_ptr<const MetricDescriptor> base_;
  std::optional<ScalarField> u_;
  std::optional<MobiusMap> mobius_;
};

struct Christoffel {
  // gamma[k][i][j] = Gamma^k_{ij}
  double gamma[2][2][2];
};

Christoffel christoffel(const MetricJet& mj);

// B = Hess u - du (x) du - 1/2 (Lap u - |grad u|^2) g
SymTensor2 os_tensor(const MetricDescriptor& g, const ScalarField& u, Point2 p);
// Bbar = Hess u - du (x) du + 1/2 |du|^2 g
SymTensor2 os_full_tensor(const MetricDescriptor& g, const ScalarField& u, Point2 p);

double metric_trace(const SymTensor2& t, const SymTensor2& g);
SymTensor2 traceless_part(const SymTensor2& t, const SymTensor2& g);

double additivity_residual(const MetricDescriptor& g, const ScalarField& u1,
                           const ScalarField& u2, Point2 p);

// Re(q dz^2) = q0 (dx^2 - dy^2) - 2 q1 dx dy
SymTensor2 quadratic_differential_tensor(Complex q);

struct BridgeSides {
  SymTensor2 schwarzian_side;
  SymTensor2 tensor_side;
};

BridgeSides bridge_sides(const HolomorphicMap& f, Complex z);
double bridge_residual(const HolomorphicMap& f, Complex z);

double standard_pair_residual(const MetricDescriptor& g, const MetricDescriptor& g2, Point2 p);

// Real Jacobian d(target)/d(source) as [row][col].
using Jacobian2 = std::array<std::array<double, 2>, 2>;

// Components of phi^* T given T at phi(p) and the Jacobian of phi at p.
SymTensor2 pull_back(const SymTensor2& t, const Jacobian2& jac, Chart source);

Jacobian2 holomorphic_jacobian(Complex derivative);

// Point of the upper half-plane at signed distance rho from the imaginary axis,
// at height parameter theta of the tube of core length ell.
Complex tube_to_halfplane(double ell, Point2 rho_theta);
Jacobian2 tube_to_halfplane_jacobian(double ell, Point2 rho_theta);

}  // namespace longtube
