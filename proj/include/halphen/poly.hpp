#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "halphen/errors.hpp"
#include "halphen/monomial.hpp"
#include "halphen/number_field.hpp"
#include "halphen/rational.hpp"
#include "halphen/upoly.hpp"

namespace halphen {

/// Sparse multivariate polynomial over K in `nvars` variables.  Terms are
/// kept sorted by decreasing grevlex with no zero coefficients, so equality
/// is structural.
template <class K>
class MultiPoly {
public:
  using Term = std::pair<Monomial, K>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  MultiPoly(int nvars, const K& c) : nvars_(nvars) {
    if (!kzero(c)) terms_.emplace_back(Monomial{}, c);
  }
  MultiPoly(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    normalize();
  }

  static MultiPoly var(int nvars, int i) { return monomial(nvars, Monomial::var(i), K(1)); }
  static MultiPoly monomial(int nvars, const Monomial& m, const K& c) {
    MultiPoly p(nvars);
    if (!kzero(c)) p.terms_.emplace_back(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& [m, c] : terms_)
      if (m.deg != terms_.front().first.deg) return false;
    return true;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }

  K coeff(const Monomial& m) const {
    for (const auto& [mm, c] : terms_)
      if (mm == m) return c;
    return K(0);
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(*this, o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(*this, o, true); }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  friend MultiPoly operator-(MultiPoly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const int n = std::max(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return MultiPoly(n);
    if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second).with_nvars(n);
    if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second).with_nvars(n);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    std::vector<Term> t;
    t.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!kzero(c)) t.emplace_back(m, std::move(c));
    MultiPoly r(n);
    r.terms_ = std::move(t);
    r.sort();
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(MultiPoly a, const K& s) {
    if (kzero(s)) return MultiPoly(a.nvars_);
    for (auto& t : a.terms_) t.second *= s;
    return a;
  }
  friend MultiPoly operator*(const K& s, MultiPoly a) { return std::move(a) * s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly mul_term(const Monomial& m, const K& c) const {
    MultiPoly r(nvars_);
    if (kzero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;  // multiplication by a monomial preserves grevlex order
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r(nvars_, K(1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  MultiPoly derivative(int i) const {
    std::vector<Term> t;
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d.e[static_cast<std::size_t>(i)] -= 1;
      d.deg -= 1;
      t.emplace_back(d, c * K(static_cast<long>(m[i])));
    }
    return MultiPoly(nvars_, std::move(t));
  }

  /// Make the leading (grevlex) coefficient 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this * (K(1) / terms_.front().second);
  }

  MultiPoly homogeneous_part(unsigned d) const {
    MultiPoly r(nvars_);
    for (const auto& t : terms_)
      if (t.first.deg == d) r.terms_.push_back(t);
    return r;
  }

  MultiPoly with_nvars(int n) const {
    MultiPoly r = *this;
    r.nvars_ = n;
    return r;
  }

  template <class V>
  V eval(const std::vector<V>& point) const {
    std::vector<std::vector<V>> powers(static_cast<std::size_t>(nvars_));
    V acc(0);
    for (const auto& [m, c] : terms_) {
      V term = V(c);
      for (int i = 0; i < nvars_; ++i) {
        const unsigned e = m[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.push_back(V(1));
        while (pw.size() <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(i)]);
        term = term * pw[e];
      }
      acc = acc + term;
    }
    return acc;
  }

  /// Replace variable i by sub[i] (general substitution; `sub` polynomials
  /// share one variable count).
  MultiPoly substitute(const std::vector<MultiPoly>& sub) const {
    const int n = sub.empty() ? nvars_ : sub.front().nvars();
    std::vector<std::vector<MultiPoly>> powers(sub.size());
    MultiPoly acc(n);
    for (const auto& [m, c] : terms_) {
      MultiPoly term(n, c);
      for (int i = 0; i < nvars_; ++i) {
        const unsigned e = m[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.emplace_back(n, K(1));
        while (pw.size() <= e) pw.push_back(pw.back() * sub[static_cast<std::size_t>(i)]);
        term *= pw[e];
      }
      acc += term;
    }
    return acc;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using R = decltype(f(std::declval<const K&>()));
    std::vector<std::pair<Monomial, R>> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) t.emplace_back(m, f(c));
    return MultiPoly<R>(nvars_, std::move(t));
  }

  /// Exact division; returns false if `d` does not divide *this.
  bool divide_exact(const MultiPoly& d, MultiPoly& quotient) const;

  std::string to_string(const std::vector<std::string>& names = default_names()) const;

  static const std::vector<std::string>& default_names() {
    static const std::vector<std::string> names{"x", "y", "z", "t", "s",  "a1",
                                                "a2", "a3", "a4", "a5", "a6", "a7"};
    return names;
  }

  void sort() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& l, const Term& r) {
      return MonomialOrder::grevlex().compare(l.first, r.first, kMaxVars) > 0;
    });
  }

private:
  void normalize() {
    std::unordered_map<Monomial, K, MonomialHash> acc;
    for (auto& [m, c] : terms_) {
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
    terms_.clear();
    for (auto& [m, c] : acc)
      if (!kzero(c)) terms_.emplace_back(m, std::move(c));
    sort();
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool negate_b) {
    MultiPoly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto ord = MonomialOrder::grevlex();
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = ord.compare(a.terms_[i].first, b.terms_[j].first, kMaxVars);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.emplace_back(b.terms_[j].first, negate_b ? K(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        K s = negate_b ? K(a.terms_[i].second - b.terms_[j].second)
                       : K(a.terms_[i].second + b.terms_[j].second);
        if (!kzero(s)) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

template <class K>
bool MultiPoly<K>::divide_exact(const MultiPoly& d, MultiPoly& quotient) const {
  if (d.is_zero()) fail("DivisionByZero", "divide_exact by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly q(std::max(nvars_, d.nvars_));
  const auto& [dm, dc] = d.lead();
  const K inv = K(1) / dc;
  std::vector<Term> qt;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.lead();
    if (!dm.divides(rm)) return false;
    const Monomial m = rm / dm;
    const K c = rc * inv;
    qt.emplace_back(m, c);
    rem -= d.mul_term(m, c);
  }
  quotient = MultiPoly(q.nvars(), std::move(qt));
  return true;
}

template <class K>
std::string MultiPoly<K>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = kstr(c);
    bool neg = false;
    const bool simple = cs.find_first_of("+*w ") == std::string::npos &&
                        cs.find('-', 1) == std::string::npos;
    if (simple && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (!simple) cs = "(" + cs + ")";
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

using QMultiPoly = MultiPoly<Rational>;
using NfMultiPoly = MultiPoly<NfElem>;

/// Coordinates in P^3.
inline constexpr int kX = 0, kY = 1, kZ = 2, kT = 3;

inline QMultiPoly qvar(int i, int nvars = 4) { return QMultiPoly::var(nvars, i); }

inline NfMultiPoly to_nf(const QMultiPoly& p) {
  return p.map_coeffs([](const Rational& c) { return NfElem(c); });
}

/// Monomials of total degree d in n variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, unsigned d);

/// Scale to integer coefficients with content 1 and positive leading
/// coefficient (grevlex).
QMultiPoly primitive(const QMultiPoly& p);

}  // namespace halphen
