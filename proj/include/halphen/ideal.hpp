#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "halphen/groebner.hpp"
#include "halphen/poly.hpp"

namespace halphen {

/// Ideal of Q[x_0..x_{n-1}] given by generators.  The grevlex basis is
/// computed on first use and shared between copies.
class PolyIdeal {
public:
  PolyIdeal() : PolyIdeal(std::vector<QMultiPoly>{}, 4) {}
  explicit PolyIdeal(std::vector<QMultiPoly> generators, int nvars = 4);

  static PolyIdeal unit(int nvars = 4) { return PolyIdeal({QMultiPoly(nvars, Rational(1))}, nvars); }

  int nvars() const { return nvars_; }
  const std::vector<QMultiPoly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  const GroebnerBasis& groebner() const;
  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const QMultiPoly& f) const { return groebner().contains(f); }
  bool contains(const PolyIdeal& other) const;
  QMultiPoly normal_form(const QMultiPoly& f) const { return groebner().normal_form(f); }
  /// Same ideal, generated by its reduced grevlex basis.
  PolyIdeal reduced() const { return PolyIdeal(groebner().polys(), nvars_); }

  friend bool operator==(const PolyIdeal& a, const PolyIdeal& b) { return a.contains(b) && b.contains(a); }

  std::vector<std::string> to_strings() const;

private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  int nvars_;
  std::vector<QMultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

struct SchemeComponent {
  PolyIdeal prime;
  int height = 0;  // codimension in P^3: 3 for points, 2 for curves
  int degree = 0;
};

GroebnerBasis groebner(const PolyIdeal& I, MonomialOrder order = MonomialOrder::grevlex());

PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J);
/// I ∩ Q[vars not in `eliminate`].
PolyIdeal eliminate(const PolyIdeal& I, const std::vector<int>& eliminate);
/// {f : f P ⊆ I}.
PolyIdeal ideal_quotient(const PolyIdeal& I, const PolyIdeal& P);
PolyIdeal ideal_quotient(const PolyIdeal& I, const QMultiPoly& f);
/// (I : f^∞).
PolyIdeal saturate(const PolyIdeal& I, const QMultiPoly& f);

struct Saturation {
  int n = 0;
  PolyIdeal ideal;
};
/// Least n with (J : P^n) ⊄ P.  Gives up with NoTermination past
/// `max_steps` (default: HALPHEN_MAX_SATURATION or 64).
Saturation saturation_exponent(const PolyIdeal& J, const PolyIdeal& P, int max_steps = -1);

struct DimensionDegree {
  int dim = -1;  // projective dimension, -1 for the empty set
  int degree = 0;
};
/// Requires a homogeneous ideal.
DimensionDegree dimension_and_degree(const PolyIdeal& I);

/// Only for V(I) of projective dimension at most 1 in P^3; otherwise
/// UnsupportedDimension.
PolyIdeal radical(const PolyIdeal& I);
/// Primes of the components of V(I), sorted by height, degree, then by
/// reduced lex basis.  Works for non-radical input as well.
std::vector<SchemeComponent> minimal_primes(const PolyIdeal& I);

/// A closed point of degree d written over Q(w) = Q[w]/(minpoly): the
/// geometric point (c_0(w) : ... : c_3(w)).  The chart coordinate is 1 and
/// later coordinates are 0.
struct PointParametrization {
  QPoly minpoly;
  std::vector<QPoly> coords;
};
/// Requires a prime ideal of a closed point.
PointParametrization parametrize_point(const PolyIdeal& prime);

/// Reduced lex basis (x > y > z > t) as generators: a canonical form.
PolyIdeal canonical(const PolyIdeal& I);

}  // namespace halphen
