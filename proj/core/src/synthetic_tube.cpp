#include "longtube/synthetic_tube.hpp"

#include <algorithm>
#include <cmath>

#include "longtube/errors.hpp"
#include "longtube/tube_geometry.hpp"

namespace longtube {

double TrigPolynomial::operator()(double theta) const { return derivative(theta, 0); }

double TrigPolynomial::derivative(double theta, int order) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double c = std::cos(k * theta), s = std::sin(k * theta);
    const double kp = std::pow(k, order);
    // d^n/dtheta^n cycles cos -> -sin -> -cos -> sin
    switch (order % 4) {
      case 0: sum += kp * (a[i] * c + b[i] * s); break;
      case 1: sum += kp * (-a[i] * s + b[i] * c); break;
      case 2: sum += kp * (-a[i] * c - b[i] * s); break;
      default: sum += kp * (a[i] * s - b[i] * c); break;
    }
  }
  return sum;
}

namespace {

double polished_extremum(const TrigPolynomial& p, double sign) {
  constexpr int kGrid = 1024;
  std::vector<std::pair<double, double>> peaks;
  std::vector<double> vals(kGrid);
  for (int j = 0; j < kGrid; ++j) vals[j] = sign * p(2.0 * kPi * j / kGrid);
  for (int j = 0; j < kGrid; ++j) {
    const double l = vals[(j + kGrid - 1) % kGrid], r = vals[(j + 1) % kGrid];
    if (vals[j] >= l && vals[j] >= r) peaks.emplace_back(vals[j], 2.0 * kPi * j / kGrid);
  }
  std::sort(peaks.begin(), peaks.end(), [](auto x, auto y) { return x.first > y.first; });
  if (peaks.size() > 4) peaks.resize(4);
  double best = *std::max_element(vals.begin(), vals.end());
  const double h = 2.0 * kPi / kGrid;
  for (auto [v, t0] : peaks) {
    double t = t0;
    for (int it = 0; it < 30; ++it) {
      const double d2 = p.derivative(t, 2);
      if (d2 == 0.0) break;
      const double step = p.derivative(t, 1) / d2;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(t - t0) <= h) best = std::max(best, sign * p(t));
  }
  return sign * best;
}

}  // namespace

double TrigPolynomial::max() const { return polished_extremum(*this, 1.0); }
double TrigPolynomial::min() const { return polished_extremum(*this, -1.0); }

TrigPolynomial random_trig_polynomial(double W, int K, std::mt19937_64& rng) {
  TrigPolynomial p;
  p.a.resize(K);
  p.b.resize(K);
  for (int k = 1; k <= K; ++k) {
    const double c = W / (2.0 * k * k);
    std::uniform_real_distribution<double> d(-c, c);
    p.a[k - 1] = d(rng);
    p.b[k - 1] = d(rng);
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t ell_index, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(ell_index), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

SyntheticTube make_synthetic_tube(double ell, double W, std::uint64_t seed, int K, int N) {
  check_core_length(ell);
  if (!(W > 0.0)) throw DomainError("W must be positive");
  const double m = flat_halfwidth(ell);
  if (K <= 0) K = default_mode_cutoff(m);
  if (N <= 0) N = std::max(64, 4 * K);
  if (N < 2 * K + 1) throw DomainError("sample count too small for the mode cutoff");

  std::mt19937_64 rng(seed);
  const TrigPolynomial gp = random_trig_polynomial(W, K, rng);
  const TrigPolynomial gm = random_trig_polynomial(W, K, rng);
  const double hi = std::max(gp.max(), gm.max());
  const double lo = std::min(gp.min(), gm.min());

  std::vector<double> bp(N), bm(N);
  for (int j = 0; j < N; ++j) {
    const double t = 2.0 * kPi * j / N;
    bp[j] = gp(t);
    bm[j] = gm(t);
  }

  // The normalizing constant depends on the scale; a few fixed-point passes settle it.
  double scale = W / std::max(hi, -lo);
  SyntheticTube out{ell, W, seed, FourierHarmonic::constant(m, 0.0), {}, 0.0};
  for (int pass = 0; pass < 8; ++pass) {
    std::vector<double> sp(N), sm(N);
    for (int j = 0; j < N; ++j) {
      sp[j] = scale * bp[j];
      sm[j] = scale * bm[j];
    }
    // Both traces have zero mean, so the linear mode is dropped rather than fitted.
    const FourierHarmonic raw = fit_boundary(m, sp, sm, K);
    const FourierHarmonic fh =
        normalize_holonomy(FourierHarmonic(m, 0.0, 0.0, raw.even_modes(), raw.odd_modes()));
    const double sup = std::max(fh.C0() + scale * hi, -(fh.C0() + scale * lo));
    out.fh = fh;
    out.boundary_sup = sup;
    out.boundary.plus.resize(N);
    out.boundary.minus.resize(N);
    for (int j = 0; j < N; ++j) {
      out.boundary.plus[j] = fh.C0() + sp[j];
      out.boundary.minus[j] = fh.C0() + sm[j];
    }
    if (std::abs(sup - W) <= 1e-15 * W) break;
    scale *= W / sup;
  }
  return out;
}

}  // namespace longtube
