#include "halphen/surface.hpp"

#include "halphen/errors.hpp"
#include "halphen/mfactor.hpp"

namespace halphen {
namespace {

NfElem embed(const FieldPtr& K, const QPoly& p) { return K ? NfElem(K, p) : NfElem(p.coeff(0)); }

std::array<NfElem, 4> eval_gradient(const CubicSurface& X, const std::array<NfElem, 4>& p) {
  std::vector<NfElem> v(p.begin(), p.end());
  std::array<NfElem, 4> g;
  for (int i = 0; i < 4; ++i) g[static_cast<std::size_t>(i)] = X.gradient()[static_cast<std::size_t>(i)].eval(v);
  return g;
}

}  // namespace

CubicSurface::CubicSurface(QMultiPoly F, bool verify) : F_(F.with_nvars(4)) {
  if (F_.is_zero() || F_.degree() != 3 || !F_.is_homogeneous())
    fail("NotCubic", "surface equation must be a cubic form in x, y, z, t");
  for (int i = 0; i < 4; ++i) grad_[static_cast<std::size_t>(i)] = F_.derivative(i);
  if (verify) {
    if (!is_nonsingular(F_)) fail("SingularSurface", "X is singular");
    verified_ = true;
  }
}

bool is_nonsingular(const QMultiPoly& F) {
  std::vector<QMultiPoly> gens{F};
  for (int i = 0; i < 4; ++i) gens.push_back(F.derivative(i));
  return dimension_and_degree(PolyIdeal(gens)).dim == -1;
}

ClosedPoint ClosedPoint::from_ideal(const PolyIdeal& ideal) {
  if (!ideal.is_homogeneous()) fail("NotHomogeneous", "point ideal must be homogeneous");
  const auto dd = dimension_and_degree(ideal);
  if (dd.dim != 0) fail("NotAPoint", "ideal does not define a finite set of points");
  const auto comps = minimal_primes(ideal);
  if (comps.size() != 1 || comps[0].degree != dd.degree || !(comps[0].prime == ideal))
    fail("NotPrime", "ideal is not the prime ideal of one closed point");
  return ClosedPoint(comps[0].prime, dd.degree);
}

ClosedPoint ClosedPoint::from_ideal(const PolyIdeal& ideal, const CubicSurface& X) {
  ClosedPoint P = from_ideal(ideal);
  if (!P.ideal().contains(X.equation())) fail("NotOnSurface", "point does not lie on X");
  return P;
}

ClosedPoint ClosedPoint::rational(const std::array<Rational, 4>& c) {
  int v = 3;
  while (v >= 0 && sgn(c[static_cast<std::size_t>(v)]) == 0) --v;
  if (v < 0) fail("NotAPoint", "(0:0:0:0) is not a point");
  std::vector<QMultiPoly> gens;
  for (int i = 0; i < 4; ++i)
    if (i != v)
      gens.push_back(qvar(i) * c[static_cast<std::size_t>(v)] - qvar(v) * c[static_cast<std::size_t>(i)]);
  return ClosedPoint(canonical(PolyIdeal(gens)), 1);
}

GeometricPoint ClosedPoint::geometric() const {
  const auto par = parametrize_point(ideal_);
  GeometricPoint g;
  if (par.minpoly.degree() > 1) g.field = NumberField::create(par.minpoly);
  for (std::size_t i = 0; i < 4; ++i) g.coords[i] = embed(g.field, par.coords[i]);
  return g;
}

std::array<Rational, 4> ClosedPoint::rational_coords() const {
  if (degree_ != 1) fail("NotRational", "point of degree " + std::to_string(degree_) + " has no rational coordinates");
  const auto g = geometric();
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = g.coords[i].rational_value();
  return c;
}

CoordinateChange::CoordinateChange(Matrix<NfElem> M) : M_(std::move(M)) {
  if (M_.rows() != 4 || M_.cols() != 4 || M_.rank() != 4) fail("SingularMatrix", "coordinate change is not invertible");
}

NfMultiPoly CoordinateChange::pullback(const NfMultiPoly& p) const {
  std::vector<NfMultiPoly> sub;
  for (std::size_t i = 0; i < 4; ++i) {
    NfMultiPoly row(4);
    for (std::size_t j = 0; j < 4; ++j)
      row += NfMultiPoly::monomial(4, Monomial::var(static_cast<int>(j)), M_(i, j));
    sub.push_back(std::move(row));
  }
  return p.with_nvars(4).substitute(sub);
}

std::array<Rational, 4> tangent_plane_coeffs(const CubicSurface& X, const ClosedPoint& P) {
  const auto c = P.rational_coords();
  std::array<NfElem, 4> p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = c[i];
  const auto g = eval_gradient(X, p);
  std::array<Rational, 4> out;
  Rational lead = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = g[i].rational_value();
    if (sgn(lead) == 0) lead = out[i];
  }
  if (sgn(lead) == 0) fail("SingularPoint", "X is singular at P");
  for (auto& v : out) v /= lead;
  return out;
}

QMultiPoly tangent_plane(const CubicSurface& X, const ClosedPoint& P) {
  const auto c = tangent_plane_coeffs(X, P);
  QMultiPoly l(4);
  for (int i = 0; i < 4; ++i) l += qvar(i) * c[static_cast<std::size_t>(i)];
  return l;
}

bool is_eckardt(const CubicSurface& X, const ClosedPoint& P) {
  // In standard form F = c y t^2 + t q2(x,y,z) + c3(x,y,z); the tangent
  // section y = 0 has a triple point iff q2(x,0,z) = 0.
  const auto sf = move_point_to_standard(X, P);
  for (const auto& [m, c] : sf.F.terms())
    if (m[kT] == 1 && m[kY] == 0) return false;
  return true;
}

LineAndResidual line_and_residual(const CubicSurface& X, const ClosedPoint& Q) {
  if (Q.degree() != 2) fail("UnsupportedDegree", "line_and_residual needs a point of degree 2");
  std::vector<QMultiPoly> lin;
  for (const auto& g : Q.ideal().groebner().polys())
    if (g.degree() == 1) lin.push_back(g);
  if (lin.size() != 2) fail("NotAPoint", "degree-2 point does not span a line");
  QMatrix A(0, 4);
  for (const auto& l : lin) {
    QVector row(4);
    for (int i = 0; i < 4; ++i) row[static_cast<std::size_t>(i)] = l.coeff(Monomial::var(i));
    A.append_row(row);
  }
  const auto ker = A.kernel();  // u1, u2 spanning the line
  std::vector<QMultiPoly> sub;
  for (std::size_t i = 0; i < 4; ++i)
    sub.push_back(QMultiPoly::var(2, 0) * ker[0][i] + QMultiPoly::var(2, 1) * ker[1][i]);
  const QMultiPoly C = X.equation().substitute(sub);
  if (C.is_zero()) fail("LineOnSurface", "the line through Q lies on X");
  QMultiPoly q(2);
  for (const auto& g : Q.ideal().generators()) q = poly_gcd(q, g.substitute(sub));
  QMultiPoly l;
  if (q.degree() != 2 || !C.divide_exact(q, l) || l.degree() != 1)
    fail("InternalError", "restricted cubic is not divisible by the quadratic form of Q");
  const Rational a = l.coeff(Monomial::var(0)), b = l.coeff(Monomial::var(1));
  std::array<Rational, 4> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = b * ker[0][i] - a * ker[1][i];
  return {{primitive(lin[0]), primitive(lin[1])}, ClosedPoint::rational(r)};
}

StandardForm move_point_to_standard(const CubicSurface& X, const GeometricPoint& P, bool swap_xz) {
  const auto g = eval_gradient(X, P.coords);
  std::size_t j = 0;
  while (j < 4 && is_zero(g[j])) ++j;
  if (j == 4) fail("SingularPoint", "X is singular at P");
  Matrix<NfElem> M(4, 4);
  for (std::size_t i = 0; i < 4; ++i) M(i, 3) = P.coords[i];
  M(j, 1) = 1;
  // tangent directions: e_i - (g_i/g_j) e_j, first fit independent of P
  std::vector<std::size_t> tang_cols{0, 2};
  if (swap_xz) std::swap(tang_cols[0], tang_cols[1]);
  Matrix<NfElem> acc(0, 4);
  acc.append_row(std::vector<NfElem>(P.coords.begin(), P.coords.end()));
  std::size_t filled = 0;
  for (std::size_t i = 0; i < 4 && filled < 2; ++i) {
    if (i == j) continue;
    std::vector<NfElem> v(4, NfElem(0));
    v[i] = 1;
    v[j] = -(g[i] / g[j]);
    Matrix<NfElem> trial = acc;
    trial.append_row(v);
    if (trial.rank() != acc.rank() + 1) continue;
    acc = trial;
    for (std::size_t r = 0; r < 4; ++r) M(r, tang_cols[filled]) = v[r];
    ++filled;
  }
  CoordinateChange ch(std::move(M));
  NfMultiPoly F = ch.pullback(X.equation());
  return {std::move(ch), std::move(F)};
}

StandardForm move_point_to_standard(const CubicSurface& X, const ClosedPoint& P) {
  return move_point_to_standard(X, P.geometric());
}

}  // namespace halphen
