#include "longtube/holomorphic.hpp"

#include <cmath>
#include <utility>

#include "longtube/errors.hpp"

namespace longtube {

bool Domain::contains(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  switch (kind) {
    case Kind::upper_half_plane:
      return z.imag() > 0.0;
    case Kind::slit_plane:
      return !(z.imag() == 0.0 && z.real() <= 0.0);
    case Kind::punctured_plane:
      return z != puncture;
    case Kind::whole_plane:
      return true;
  }
  return false;
}

double Domain::boundary_distance(Complex z) const {
  if (!contains(z)) return 0.0;
  switch (kind) {
    case Kind::upper_half_plane:
      return z.imag();
    case Kind::slit_plane:
      return z.real() > 0.0 ? std::abs(z) : std::abs(z.imag());
    case Kind::punctured_plane:
      return std::abs(z - puncture);
    case Kind::whole_plane:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

HolomorphicMap::HolomorphicMap(Rep rep, Domain domain)
    : rep_(std::move(rep)), domain_(domain) {}

HolomorphicMap HolomorphicMap::power(Complex alpha) {
  return {Power{alpha}, Domain::slit_plane()};
}

HolomorphicMap HolomorphicMap::mobius(const MobiusMap& m) {
  if (std::abs(m.c()) == 0.0) return {Mobius{m}, Domain::whole_plane()};
  return {Mobius{m}, Domain::punctured_plane(-m.d() / m.c())};
}

HolomorphicMap HolomorphicMap::exp_scaled(Complex lambda) {
  return {ExpScaled{lambda}, Domain::whole_plane()};
}

HolomorphicMap HolomorphicMap::composite(std::vector<HolomorphicMap> maps) {
  if (maps.empty()) throw DomainError("empty composition");
  Domain d = maps.front().domain();
  return {Composite{std::move(maps)}, d};
}

HolomorphicMap HolomorphicMap::sampled(Callable fn, Domain domain, int nodes) {
  if (nodes < 8) throw DomainError("Cauchy differentiation needs at least 8 nodes");
  return {Sampled{std::move(fn), nodes}, domain};
}

HolomorphicMap::Kind HolomorphicMap::kind() const {
  return static_cast<Kind>(rep_.index());
}

double HolomorphicMap::differentiation_radius(const Domain& domain, Complex z) {
  double r = 0.25 * domain.boundary_distance(z);
  if (z.imag() != 0.0) r = std::min(r, 0.1 * std::abs(z.imag()));
  if (!std::isfinite(r)) r = 0.1 * std::max(1.0, std::abs(z));
  return r;
}

Jet3 cauchy_jet(const HolomorphicMap::Callable& fn, Complex z, double r, int nodes) {
  if (!(r > 0.0)) throw DomainError("differentiation circle exits the domain");
  Complex s1{}, s2{}, s3{};
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * kPi * j / nodes;
    const Complex w = std::polar(1.0, t);
    const Complex v = fn(z + r * w);
    const Complex wc = std::conj(w);
    s1 += v * wc;
    s2 += v * wc * wc;
    s3 += v * wc * wc * wc;
  }
  const double n = nodes;
  return {fn(z), s1 / (n * r), 2.0 * s2 / (n * r * r), 6.0 * s3 / (n * r * r * r)};
}

namespace {

Jet3 chain(const Jet3& outer, const Jet3& inner) {
  // Faa di Bruno up to third order for outer o inner.
  const Complex g1 = inner.d1, g2 = inner.d2, g3 = inner.d3;
  return {outer.f, outer.d1 * g1, outer.d2 * g1 * g1 + outer.d1 * g2,
          outer.d3 * g1 * g1 * g1 + 3.0 * outer.d2 * g1 * g2 + outer.d1 * g3};
}

}  // namespace

Complex HolomorphicMap::operator()(Complex z) const {
  if (!domain_.contains(z)) throw DomainError("point outside the map's domain");
  return std::visit(
      [z](const auto& r) -> Complex {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Power>) {
          return std::exp(r.alpha * std::log(z));
        } else if constexpr (std::is_same_v<T, Mobius>) {
          return r.m.apply(z);
        } else if constexpr (std::is_same_v<T, ExpScaled>) {
          return std::exp(r.lambda * z);
        } else if constexpr (std::is_same_v<T, Composite>) {
          Complex w = z;
          for (const auto& p : r.parts) w = p(w);
          return w;
        } else {
          return r.fn(z);
        }
      },
      rep_);
}

Jet3 HolomorphicMap::jet(Complex z) const {
  if (!domain_.contains(z)) throw DomainError("point outside the map's domain");
  return std::visit(
      [this, z](const auto& r) -> Jet3 {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Power>) {
          const Complex f = std::exp(r.alpha * std::log(z));
          const Complex a = r.alpha;
          return {f, a * f / z, a * (a - 1.0) * f / (z * z),
                  a * (a - 1.0) * (a - 2.0) * f / (z * z * z)};
        } else if constexpr (std::is_same_v<T, Mobius>) {
          return {r.m.apply(z), r.m.derivative(z, 1), r.m.derivative(z, 2),
                  r.m.derivative(z, 3)};
        } else if constexpr (std::is_same_v<T, ExpScaled>) {
          const Complex f = std::exp(r.lambda * z);
          const Complex l = r.lambda;
          return {f, l * f, l * l * f, l * l * l * f};
        } else if constexpr (std::is_same_v<T, Composite>) {
          Jet3 acc{z, 1.0, 0.0, 0.0};
          for (const auto& p : r.parts) {
            if (!p.domain().contains(acc.f)) {
              throw DomainError("composition leaves the domain of the outer map");
            }
            acc = chain(p.jet(acc.f), acc);
          }
          return acc;
        } else {
          const double rc = differentiation_radius(domain_, z);
          return cauchy_jet(r.fn, z, rc, r.nodes);
        }
      },
      rep_);
}

std::optional<Complex> HolomorphicMap::closed_form_schwarzian(Complex z) const {
  if (!domain_.contains(z)) throw DomainError("point outside the map's domain");
  return std::visit(
      [z](const auto& r) -> std::optional<Complex> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Power>) {
          return (1.0 - r.alpha * r.alpha) / (2.0 * z * z);
        } else if constexpr (std::is_same_v<T, Mobius>) {
          return Complex{0.0, 0.0};
        } else if constexpr (std::is_same_v<T, ExpScaled>) {
          return -0.5 * r.lambda * r.lambda;
        } else if constexpr (std::is_same_v<T, Composite>) {
          // S(f o g) = S(f)(g) g'^2 + S(g), folded left to right.
          Complex w = z;
          Complex dw = 1.0;
          Complex s = 0.0;
          for (const auto& p : r.parts) {
            auto sp = p.closed_form_schwarzian(w);
            if (!sp) return std::nullopt;
            s = *sp * dw * dw + s;
            dw *= p.jet(w).d1;
            w = p(w);
          }
          return s;
        } else {
          return std::nullopt;
        }
      },
      rep_);
}

}  // namespace longtube
