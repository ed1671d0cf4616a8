#pragma once

#include <array>
#include <string>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/linalg.hpp"
#include "halphen/number_field.hpp"
#include "halphen/poly.hpp"

namespace halphen {

/// X = V(F) in P^3 for a cubic form F.  Minimality is never checked: on a
/// non-minimal X the involutions exist but the linear systems they are
/// built from can have the wrong dimension.
class CubicSurface {
public:
  /// Throws NotCubic.  With `verify`, nonsingularity is certified here and
  /// a singular F throws SingularSurface.
  explicit CubicSurface(QMultiPoly F, bool verify = true);

  const QMultiPoly& equation() const { return F_; }
  const std::array<QMultiPoly, 4>& gradient() const { return grad_; }
  bool verified() const { return verified_; }
  std::string to_string() const { return F_.to_string(); }

private:
  QMultiPoly F_;
  std::array<QMultiPoly, 4> grad_;
  bool verified_ = false;
};

/// V(F, dF/dx, dF/dy, dF/dz, dF/dt) is empty.
bool is_nonsingular(const QMultiPoly& F);
inline bool is_nonsingular(const CubicSurface& X) { return is_nonsingular(X.equation()); }

/// One geometric point of a closed point: coordinates in a number field.
struct GeometricPoint {
  FieldPtr field;  // Q(w), degree = degree of the closed point
  std::array<NfElem, 4> coords;

  int degree() const { return field ? field->degree() : 1; }
};

/// A reduced closed point of P^3, stored by its prime ideal over Q.
class ClosedPoint {
public:
  /// Validates primality and computes the degree.  With a surface, also
  /// checks F lies in the ideal (NotOnSurface).
  static ClosedPoint from_ideal(const PolyIdeal& ideal);
  static ClosedPoint from_ideal(const PolyIdeal& ideal, const CubicSurface& X);
  static ClosedPoint rational(const std::array<Rational, 4>& coords);

  const PolyIdeal& ideal() const { return ideal_; }
  int degree() const { return degree_; }
  /// A geometric point over Q(w) with w a primitive element.
  GeometricPoint geometric() const;
  /// Coordinates scaled so the last nonzero one is 1.  NotRational unless
  /// degree 1.
  std::array<Rational, 4> rational_coords() const;

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return a.ideal_ == b.ideal_; }

private:
  ClosedPoint(PolyIdeal I, int d) : ideal_(std::move(I)), degree_(d) {}
  PolyIdeal ideal_;
  int degree_;
};

/// old coordinates = M * new coordinates.
class CoordinateChange {
public:
  explicit CoordinateChange(Matrix<NfElem> M);

  const Matrix<NfElem>& matrix() const { return M_; }
  /// p(M v)
  NfMultiPoly pullback(const NfMultiPoly& p) const;
  NfMultiPoly pullback(const QMultiPoly& p) const { return pullback(to_nf(p)); }

private:
  Matrix<NfElem> M_;
};

/// Coefficients of sum dF/dv(P) v, first nonzero coefficient 1.
std::array<Rational, 4> tangent_plane_coeffs(const CubicSurface& X, const ClosedPoint& P);
QMultiPoly tangent_plane(const CubicSurface& X, const ClosedPoint& P);

/// The tangent section has a triple point at P.
bool is_eckardt(const CubicSurface& X, const ClosedPoint& P);

struct LineAndResidual {
  std::array<QMultiPoly, 2> line;  // two linear forms
  ClosedPoint residual;
};
/// Throws LineOnSurface when the line through Q lies on X.
LineAndResidual line_and_residual(const CubicSurface& X, const ClosedPoint& Q);

struct StandardForm {
  CoordinateChange change;
  NfMultiPoly F;  // F(M v): P = (0:0:0:1), tangent plane y = 0
};
/// Move a geometric point to (0:0:0:1) with tangent plane y = 0.  With
/// `swap_xz` the roles of the two tangent directions are exchanged.
StandardForm move_point_to_standard(const CubicSurface& X, const GeometricPoint& P, bool swap_xz = false);
StandardForm move_point_to_standard(const CubicSurface& X, const ClosedPoint& P);

}  // namespace halphen
