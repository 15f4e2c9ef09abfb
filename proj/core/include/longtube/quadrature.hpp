#pragma once

#include <functional>
#include <vector>

namespace longtube {

struct GaussLegendreRule {
  std::vector<double> nodes;  // on [-1, 1], ascending
  std::vector<double> weights;
};

// n-point rule by Newton iteration on the Legendre recurrence.
GaussLegendreRule gauss_legendre(int n);

// Integral of f over [a, b]; b < a gives the oriented (negative) integral.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int n);

// Trapezoid rule for a function with period b - a, nodes a + j h, j < n.
template <class F>
auto periodic_trapezoid(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  auto sum = f(a) * 0.0;
  for (int j = 0; j < n; ++j) sum += f(a + j * h);
  return sum * h;
}

struct Minimum {
  double x;
  double value;
};

// Golden-section search for a minimum of a unimodal f on [a, b], bracket width <= tol.
Minimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                double tol);

}  // namespace longtube
