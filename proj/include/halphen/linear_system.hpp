#pragma once

#include <cstddef>
#include <vector>

#include "halphen/linalg.hpp"
#include "halphen/series.hpp"
#include "halphen/surface.hpp"

namespace halphen {

using KPoly = UPoly<NfElem>;
/// Coefficients of z^0, z^1, ... each a polynomial in the chart coordinate x.
using ChartSeries = std::vector<KPoly>;

/// The patch (x, y, z, t) <- (xz, yz, z, 1) of the blowup of X at a point
/// moved to (0:0:0:1) with tangent plane y = 0.  On the strict transform
/// y = Y(z) with Y a power series over K[x]; z = 0 is the exceptional curve.
/// Each centre s recorded by `iterate` is a further blowup x <- s + x z.
class BlowupChart {
public:
  BlowupChart(const CubicSurface& X, const GeometricPoint& P, std::size_t precision, bool swap_xz = false);

  std::size_t precision() const { return Y_.size(); }
  const FieldPtr& field() const { return field_; }
  int field_degree() const { return field_ ? field_->degree() : 1; }
  const CoordinateChange& change() const { return change_; }
  /// g(x, y, z) with F(M (xz, yz, z, 1)) = z g.
  const NfMultiPoly& local_equation() const { return g_; }
  const ChartSeries& Y() const { return Y_; }
  const std::vector<NfElem>& centres() const { return centres_; }

  /// Blow up the point (x0, z0) of this chart; it must lie on z = 0
  /// (PointOffExceptional otherwise).
  BlowupChart iterate(const NfElem& x0, const NfElem& z0) const;

  /// The form pulled back to the current chart, modulo z^precision.
  ChartSeries pullback(const QMultiPoly& form) const;

private:
  FieldPtr field_;
  CoordinateChange change_;
  NfMultiPoly g_;
  ChartSeries Y_;
  std::vector<NfElem> centres_;
};

/// c(s + u) as a polynomial in u.
KPoly taylor_shift(const KPoly& c, const NfElem& s);
/// The series after x <- s + x z.
ChartSeries substitute_centre(const ChartSeries& S, const NfElem& s);
/// Index of the first nonzero coefficient, or S.size().
std::size_t series_order(const ChartSeries& S);

/// A space of degree-d forms, independent modulo F * (forms of degree d-3).
class LinearSystemOnX {
public:
  /// Sections are reduced to an echelon basis; F-multiples are divided out.
  LinearSystemOnX(CubicSurface X, unsigned degree, const std::vector<QMultiPoly>& sections);
  /// |dA|: all degree-d monomials, modulo F-multiples when d >= 3.
  static LinearSystemOnX complete(const CubicSurface& X, unsigned degree);

  const CubicSurface& surface() const { return X_; }
  unsigned degree() const { return degree_; }
  const std::vector<QMultiPoly>& sections() const { return sections_; }
  std::size_t size() const { return sections_.size(); }
  bool empty() const { return sections_.empty(); }

  /// F * (monomials of degree d-3), empty for d < 3.
  std::vector<QMultiPoly> surface_multiples() const;

  /// Rational conditions on the coefficients of a member sum a_i s_i: order
  /// at least m along the exceptional curve of the chart.
  LinearConditionSet conditions(const BlowupChart& chart, unsigned m) const;
  /// The subsystem cut out by the rows.
  LinearSystemOnX restrict(const LinearConditionSet& conditions) const;

private:
  LinearSystemOnX(CubicSurface X, unsigned degree, std::vector<QMultiPoly> sections, bool)
      : X_(std::move(X)), degree_(degree), sections_(std::move(sections)) {}
  CubicSurface X_;
  unsigned degree_;
  std::vector<QMultiPoly> sections_;
};

/// Members vanishing to order >= m at every geometric point of P.
/// Errors: SingularPoint, UnsupportedDegree (deg P > 3).
LinearSystemOnX impose_basepoint(const LinearSystemOnX& system, const ClosedPoint& P, unsigned m);

struct Multiplicity {
  unsigned m = 0;
  bool lower_bound = false;  // precision exhausted: the true value is >= m
};
/// Multiplicity of the general member at P (degree 1 or 2); default
/// precision 3 * degree + 2.
Multiplicity multiplicity(const LinearSystemOnX& system, const ClosedPoint& P, std::size_t precision = 0);
/// Order of one form along the exceptional curve of the chart.
std::size_t order_along(const BlowupChart& chart, const QMultiPoly& form);

}  // namespace halphen
