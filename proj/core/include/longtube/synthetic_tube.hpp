#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "longtube/fourier_annulus.hpp"

namespace longtube {

// Zero-mean trigonometric polynomial sum_k a_k cos(k theta) + b_k sin(k theta).
struct TrigPolynomial {
  std::vector<double> a;
  std::vector<double> b;

  double operator()(double theta) const;
  double derivative(double theta, int order) const;
  // Exact extrema, located on a grid and polished by Newton steps.
  double max() const;
  double min() const;
};

TrigPolynomial random_trig_polynomial(double W, int K, std::mt19937_64& rng);

struct BoundaryData {
  std::vector<double> plus;
  std::vector<double> minus;
};

struct SyntheticTube {
  double ell = 0.0;
  double W = 0.0;
  std::uint64_t seed = 0;
  FourierHarmonic fh;
  BoundaryData boundary;
  // sup of |u| over both boundary circles, equal to W up to rounding
  double boundary_sup = 0.0;
};

// Mixes a base seed with grid and trial indices.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t ell_index, std::uint64_t trial);

// Random harmonic data on the tube of core length ell: boundary traces are random
// trigonometric polynomials rescaled so that, after the holonomy normalization, the
// boundary sup is exactly W. K = 0 and N = 0 select defaults.
SyntheticTube make_synthetic_tube(double ell, double W, std::uint64_t seed, int K = 0, int N = 0);

}  // namespace longtube
