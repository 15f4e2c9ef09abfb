#pragma once

#include <functional>
#include <span>

#include "longtube/holomorphic.hpp"

namespace longtube {

// q(z) dz^2 on a declared domain.
struct QuadraticDifferential {
  std::function<Complex(Complex)> coeff;
  Domain domain = Domain::upper_half_plane();

  Complex operator()(Complex z) const { return coeff(z); }

  static QuadraticDifferential zero();
  // c dz^2 / z^2
  static QuadraticDifferential over_z_squared(Complex c);
};

Complex schwarzian_from_jet(const Jet3& j);

// Coefficient of S(f) at z; closed form when available, otherwise from the jet.
Complex schwarzian(const HolomorphicMap& f, Complex z);

// Schwarzian computed from derivatives only, never from closed forms.
Complex schwarzian_numeric(const HolomorphicMap& f, Complex z);

QuadraticDifferential schwarzian_differential(HolomorphicMap f);

// |S(f o g) - (S(f)(g) g'^2 + S(g))| with the left side from chain-rule jets.
double schwarzian_compose_residual(const HolomorphicMap& f, const HolomorphicMap& g,
                                   Complex z);

// Largest |d q / d conj(z)| by central differences over the sample points.
double holomorphy_residual(const QuadraticDifferential& q, std::span<const Complex> points,
                           double h = 1e-5);

// Polar sample grid in the upper half-plane: log-spaced radii, angles pi j/(n+1).
struct NormGrid {
  double r_min = 0.049787068367863944;  // e^-3
  double r_max = 20.085536923187668;    // e^3
  int n_radii = 64;
  int n_angles = 64;

  // Doubles the resolution; every old node stays a node.
  NormGrid refined() const;
};

// max |q(z)| (Im z)^2 over the grid; a lower bound for the infinity norm.
double infinity_norm_estimate(const QuadraticDifferential& q, const NormGrid& grid = {});

double kra_maskit_lower(double delta);

}  // namespace longtube
