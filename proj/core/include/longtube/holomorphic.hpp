#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "longtube/halfplane.hpp"

namespace longtube {

// Open subset of the plane on which a holomorphic map is declared.
struct Domain {
  enum class Kind { upper_half_plane, slit_plane, punctured_plane, whole_plane };

  Kind kind = Kind::upper_half_plane;
  Complex puncture{0.0, 0.0};

  static Domain upper_half_plane() { return {Kind::upper_half_plane, {}}; }
  // Complement of the ray (-inf, 0], the domain of the principal logarithm.
  static Domain slit_plane() { return {Kind::slit_plane, {}}; }
  static Domain punctured_plane(Complex p) { return {Kind::punctured_plane, p}; }
  static Domain whole_plane() { return {Kind::whole_plane, {}}; }

  bool contains(Complex z) const;
  // Euclidean distance to the complement; +inf for the whole plane.
  double boundary_distance(Complex z) const;
};

// Value and first three complex derivatives at a point.
struct Jet3 {
  Complex f, d1, d2, d3;
};

class HolomorphicMap {
 public:
  using Callable = std::function<Complex(Complex)>;

  enum class Kind { power, mobius, exp_scaled, composite, sampled };

  // z^alpha with the principal logarithm.
  static HolomorphicMap power(Complex alpha);
  static HolomorphicMap mobius(const MobiusMap& m);
  // z -> exp(lambda z)
  static HolomorphicMap exp_scaled(Complex lambda);
  // maps[0] is applied first: composite({g, f}) = f o g.
  static HolomorphicMap composite(std::vector<HolomorphicMap> maps);
  // Derivatives by Cauchy integrals over a circle with `nodes` trapezoid points.
  static HolomorphicMap sampled(Callable fn, Domain domain, int nodes = 64);

  Kind kind() const;
  const Domain& domain() const { return domain_; }

  Complex operator()(Complex z) const;
  Jet3 jet(Complex z) const;
  // Schwarzian coefficient from a closed form, when every ingredient has one.
  std::optional<Complex> closed_form_schwarzian(Complex z) const;

  // Circle radius the sampled engine uses at z.
  static double differentiation_radius(const Domain& domain, Complex z);

 private:
  struct Power {
    Complex alpha;
  };
  struct Mobius {
    MobiusMap m;
  };
  struct ExpScaled {
    Complex lambda;
  };
  struct Composite {
    std::vector<HolomorphicMap> parts;
  };
  struct Sampled {
    Callable fn;
    int nodes;
  };
  using Rep = std::variant<Power, Mobius, ExpScaled, Composite, Sampled>;

  HolomorphicMap(Rep rep, Domain domain);

  Rep rep_;
  Domain domain_;
};

// Cauchy-integral derivatives of fn at z on a circle of radius r.
Jet3 cauchy_jet(const HolomorphicMap::Callable& fn, Complex z, double r, int nodes);

}  // namespace longtube
