#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "halphen/errors.hpp"
#include "halphen/poly.hpp"
#include "halphen/upoly.hpp"

namespace halphen {

/// Element of K(x): num/den in lowest terms with den monic.
template <class K>
class RationalFunction {
public:
  RationalFunction() : den_(K(1)) {}
  RationalFunction(long v) : num_(K(v)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const K& v) : num_(v), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(UPoly<K> num, UPoly<K> den = UPoly<K>(K(1))) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("DivisionByZero", "rational function with zero denominator");
    reduce();
  }

  static RationalFunction x() { return RationalFunction(UPoly<K>::x()); }

  const UPoly<K>& num() const { return num_; }
  const UPoly<K>& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) fail("DivisionByZero", "division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = UPoly<K>(K(1));
      return;
    }
    UPoly<K> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const K l = den_.lead();
    if (!(l == K(1))) {
      num_ = num_ * (K(1) / l);
      den_ = den_ * (K(1) / l);
    }
  }

  UPoly<K> num_, den_;
};

template <class K>
bool is_zero(const RationalFunction<K>& f) {
  return f.num().is_zero();
}

template <class K>
std::string to_string(const RationalFunction<K>& f) {
  if (f.is_polynomial()) return f.num().to_string("x");
  return "(" + f.num().to_string("x") + ")/(" + f.den().to_string("x") + ")";
}

/// Power series in z known modulo z^precision.
template <class R>
struct TruncatedSeries {
  std::vector<R> coeffs;  // size == precision

  std::size_t precision() const { return coeffs.size(); }
  const R& operator[](std::size_t i) const { return coeffs[i]; }

  /// Index of the first nonzero coefficient, or precision() if none.
  std::size_t order() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!kzero(coeffs[i])) return i;
    return coeffs.size();
  }
};

template <class R>
std::vector<R> series_mul(const std::vector<R>& a, const std::vector<R>& b, std::size_t n) {
  std::vector<R> r(n, R(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (kzero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
      if (!kzero(b[j])) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Inverse of a unit of the coefficient ring.  For K[x] only nonzero
/// constants are units.
template <class K>
UPoly<K> unit_inverse(const UPoly<K>& u) {
  if (u.degree() != 0) fail("SingularAtOrigin", "dg/dy(0,0) is not a unit of the coefficient ring");
  return UPoly<K>(K(1) / u.lead());
}
template <class K>
RationalFunction<K> unit_inverse(const RationalFunction<K>& u) {
  return RationalFunction<K>(K(1)) / u;
}

/// Root Y(z) with Y(0) = 0 of g(y, z) = 0, where g is a polynomial in
/// (y, z) = (var 0, var 1) with coefficients in R.  Coefficients are found
/// one at a time: the z^k coefficient of g(Y_{<k}, z) determines Y_k.
/// Errors: NotVanishing if g(0,0) != 0; SingularAtOrigin if dg/dy(0,0) = 0.
template <class R>
TruncatedSeries<R> series_root(const MultiPoly<R>& g, std::size_t precision) {
  Monomial origin, ym = Monomial::var(0);
  if (!kzero(g.coeff(origin))) fail("NotVanishing", "g(0,0) is not zero");
  const R gy = g.coeff(ym);
  if (kzero(gy)) fail("SingularAtOrigin", "dg/dy(0,0) vanishes");
  const R inv = unit_inverse(gy);

  // g as polynomial in y with series coefficients G_a(z)
  unsigned dy = 0;
  for (const auto& [m, c] : g.terms()) dy = std::max(dy, m[0]);
  std::vector<std::vector<R>> G(dy + 1, std::vector<R>(precision, R(0)));
  for (const auto& [m, c] : g.terms())
    if (m[1] < precision) G[m[0]][m[1]] += c;

  TruncatedSeries<R> Y{std::vector<R>(precision, R(0))};
  for (std::size_t k = 1; k < precision; ++k) {
    // coefficient of z^k in Σ_a G_a(z) Y^a, using Y known below z^k
    const std::size_t n = k + 1;
    R r(0);
    std::vector<R> ypow(n, R(0));
    ypow[0] = R(1);
    for (unsigned a = 0; a <= dy; ++a) {
      if (a > 0) ypow = series_mul(ypow, Y.coeffs, n);
      for (std::size_t b = 0; b <= k; ++b)
        if (!kzero(G[a][b]) && !kzero(ypow[k - b])) r += G[a][b] * ypow[k - b];
    }
    Y.coeffs[k] = -(r * inv);
  }
  return Y;
}

}  // namespace halphen
