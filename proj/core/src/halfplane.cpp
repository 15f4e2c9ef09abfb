#include "longtube/halfplane.hpp"

#include <cmath>

#include "longtube/errors.hpp"

namespace longtube {

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  if (std::abs(det) < 1e-300 || !std::isfinite(std::abs(det))) {
    throw DomainError("Mobius map with vanishing determinant");
  }
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

MobiusMap MobiusMap::identity() { return {1.0, 0.0, 0.0, 1.0}; }

MobiusMap MobiusMap::scaling(Complex k) { return {k, 0.0, 0.0, 1.0}; }

MobiusMap MobiusMap::translation(Complex t) { return {1.0, t, 0.0, 1.0}; }

MobiusMap MobiusMap::inversion() { return {0.0, -1.0, 1.0, 0.0}; }

Complex MobiusMap::apply(Complex z) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) < 1e-14) {
    throw DomainError("Mobius map evaluated at its pole");
  }
  return (a_ * z + b_) / den;
}

Complex MobiusMap::derivative(Complex z, int n) const {
  const Complex den = c_ * z + d_;
  if (std::abs(den) < 1e-14) {
    throw DomainError("Mobius map differentiated at its pole");
  }
  // With ad - bc = 1: f' = (cz+d)^-2, f'' = -2c (cz+d)^-3, f''' = 6c^2 (cz+d)^-4.
  const Complex inv = 1.0 / den;
  switch (n) {
    case 1:
      return inv * inv;
    case 2:
      return -2.0 * c_ * inv * inv * inv;
    case 3:
      return 6.0 * c_ * c_ * inv * inv * inv * inv;
    default:
      throw DomainError("Mobius derivative order must be 1, 2 or 3");
  }
}

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
  return {a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_,
          c_ * in.a_ + d_ * in.c_, c_ * in.b_ + d_ * in.d_};
}

MobiusMap MobiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

bool MobiusMap::equivalent(const MobiusMap& o, double tol) const {
  auto close = [tol](const MobiusMap& p, const MobiusMap& q, double sign) {
    return std::abs(p.a_ - sign * q.a_) <= tol && std::abs(p.b_ - sign * q.b_) <= tol &&
           std::abs(p.c_ - sign * q.c_) <= tol && std::abs(p.d_ - sign * q.d_) <= tol;
  };
  return close(*this, o, 1.0) || close(*this, o, -1.0);
}

Complex mobius_apply(const MobiusMap& m, Complex z) { return m.apply(z); }

double hyperbolic_density(Complex z) {
  const double y = z.imag();
  if (!(y > 0.0)) {
    throw DomainError("hyperbolic density requires Im z > 0");
  }
  return 1.0 / (y * y);
}

}  // namespace longtube
