#pragma once

#include <complex>

namespace longtube {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Element of PSL(2,C), stored with ad - bc = 1.
class MobiusMap {
 public:
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity();
  static MobiusMap scaling(Complex k);      // z -> k z
  static MobiusMap translation(Complex t);  // z -> z + t
  static MobiusMap inversion();             // z -> -1/z

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex apply(Complex z) const;
  // n-th derivative at z, n in [1, 3].
  Complex derivative(Complex z, int n) const;

  // (*this) o inner
  MobiusMap compose(const MobiusMap& inner) const;
  MobiusMap inverse() const;

  // Equality in PSL(2,C): matrices agree up to a global sign.
  bool equivalent(const MobiusMap& other, double tol = 1e-12) const;

 private:
  Complex a_, b_, c_, d_;
};

Complex mobius_apply(const MobiusMap& m, Complex z);

// Density 1/y^2 of the hyperbolic metric |dz|^2/y^2.
double hyperbolic_density(Complex z);

}  // namespace longtube
