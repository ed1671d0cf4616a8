#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "halphen/rational.hpp"

namespace halphen {

/// Zero test usable from templates: unqualified so field types in this
/// namespace are found by argument-dependent lookup.
template <class K>
bool kzero(const K& v) {
  return is_zero(v);
}

template <class K>
std::string kstr(const K& v) {
  return to_string(v);
}

/// Dense univariate polynomial over a field K, coefficients stored low to
/// high degree.  The zero polynomial has no coefficients; no trailing zeros.
template <class K>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const K& constant) {  // NOLINT(google-explicit-constructor)
    if (!kzero(constant)) c_.push_back(constant);
  }

  static UPoly monomial(const K& coeff, std::size_t degree) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = coeff;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(K(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& lead() const { return c_.back(); }

  K operator()(const K& v) const {
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (kzero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator*(UPoly a, const K& s) {
    if (kzero(s)) return {};
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (a.degree() < b.degree()) return {UPoly(), r};
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv_lead = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const std::size_t shift = r.c_.size() - b.c_.size();
      const K f = r.lead() * inv_lead;
      q[shift] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[shift + j] -= f * b.c_[j];
      r.c_.back() = K(0);
      r.trim();
    }
    return {UPoly(std::move(q)), r};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / lead());
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  /// p(x + s)
  UPoly shift(const K& s) const {
    UPoly acc;
    const UPoly lin(std::vector<K>{s, K(1)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + UPoly(c_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (kzero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << kstr(c_[i]) << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && kzero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = K(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Squarefree part (char 0).
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

template <class K>
bool is_zero(const UPoly<K>& p) {
  return p.is_zero();
}

template <class K>
std::string to_string(const UPoly<K>& p) {
  return p.to_string("s");
}

using QPoly = UPoly<Rational>;

}  // namespace halphen
