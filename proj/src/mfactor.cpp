#include "halphen/mfactor.hpp"

#include <algorithm>
#include <random>

#include "halphen/errors.hpp"
#include "halphen/factor.hpp"
#include "halphen/ideal.hpp"

namespace halphen {
namespace {

// f restricted to the line p + S*dir, as a univariate polynomial in S.
QPoly restrict_to_line(const QMultiPoly& f, const std::vector<long>& p, const std::vector<long>& dir) {
  std::vector<QMultiPoly> sub;
  const QMultiPoly S = QMultiPoly::var(1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    sub.push_back(QMultiPoly(1, Rational(p[i])) + S * Rational(dir[i]));
  const QMultiPoly r = f.substitute(sub);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(r.degree(), 0)) + 1);
  for (const auto& [m, v] : r.terms()) c[m[0]] = v;
  return QPoly(c);
}

std::vector<int> used_vars(const QMultiPoly& p) {
  std::vector<int> out;
  for (int i = 0; i < p.nvars(); ++i)
    for (const auto& [m, c] : p.terms())
      if (m[i]) {
        out.push_back(i);
        break;
      }
  return out;
}

unsigned degree_in(const QMultiPoly& p, int v) {
  unsigned d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
  return d;
}

struct Kronecker {
  std::vector<int> vars;
  unsigned base;

  QPoly image(const QMultiPoly& p) const {
    std::vector<Rational> c;
    for (const auto& [m, v] : p.terms()) {
      std::size_t e = 0, w = 1;
      for (int x : vars) {
        e += m[x] * w;
        w *= base;
      }
      if (c.size() <= e) c.resize(e + 1);
      c[e] = v;
    }
    return QPoly(c);
  }

  QMultiPoly preimage(const QPoly& u, int nvars) const {
    std::vector<QMultiPoly::Term> t;
    for (std::size_t e = 0; e < u.coeffs().size(); ++e) {
      if (sgn(u.coeffs()[e]) == 0) continue;
      Monomial m;
      std::size_t r = e;
      for (int x : vars) {
        m.e[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(r % base);
        m.deg += static_cast<std::uint32_t>(r % base);
        r /= base;
      }
      if (r != 0) return QMultiPoly(nvars);
      t.emplace_back(m, u.coeffs()[e]);
    }
    return QMultiPoly(nvars, std::move(t));
  }
};

std::vector<QPoly> expanded_factors(const QPoly& u) {
  std::vector<QPoly> out;
  for (const auto& f : factor(u))
    for (int k = 0; k < f.multiplicity; ++k) out.push_back(f.factor);
  return out;
}

// Factor a polynomial without monomial content.
std::vector<MFactor> factor_kronecker(QMultiPoly rem) {
  const int n = rem.nvars();
  std::vector<MFactor> out;
  while (rem.degree() > 0) {
    Kronecker K{used_vars(rem), 0};
    for (int v : K.vars) K.base = std::max(K.base, degree_in(rem, v) + 1);
    const auto L = expanded_factors(K.image(rem));
    bool found = false;
    for (std::size_t k = 1; k <= L.size() / 2 && !found; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        QPoly prod(Rational(1));
        for (auto i : idx) prod = prod * L[i];
        const QMultiPoly G = K.preimage(prod, n);
        QMultiPoly q;
        if (G.degree() > 0 && rem.divide_exact(G, q)) {
          int mult = 0;
          while (rem.divide_exact(G, q)) {
            rem = q.with_nvars(n);
            ++mult;
          }
          out.push_back({primitive(G), mult});
          found = true;
          break;
        }
        // next combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == L.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!found) {
      out.push_back({primitive(rem), 1});
      break;
    }
  }
  return out;
}

}  // namespace

QMultiPoly poly_gcd(const QMultiPoly& a, const QMultiPoly& b) {
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  const int n = std::max(a.nvars(), b.nvars());
  const QMultiPoly one(n, Rational(1));
  if (a.degree() == 0 || b.degree() == 0) return one;

  // A line along which no factor drops degree gives a certified bound.
  std::mt19937 rng(0x9cd);
  std::uniform_int_distribution<long> dist(-20, 20);
  std::vector<long> p(static_cast<std::size_t>(n)), dir(static_cast<std::size_t>(n));
  const QMultiPoly at = a.homogeneous_part(static_cast<unsigned>(a.degree()));
  const QMultiPoly bt = b.homogeneous_part(static_cast<unsigned>(b.degree()));
  for (;;) {
    for (auto& x : p) x = dist(rng);
    for (auto& x : dir) x = dist(rng);
    std::vector<Rational> d(dir.begin(), dir.end());
    if (sgn(at.eval(d)) != 0 && sgn(bt.eval(d)) != 0) break;
  }
  const QPoly g = gcd(restrict_to_line(a, p, dir), restrict_to_line(b, p, dir));
  if (g.degree() <= 0) return one;

  QMultiPoly q;
  if (g.degree() == a.degree() && b.divide_exact(a, q)) return primitive(a);
  if (g.degree() == b.degree() && a.divide_exact(b, q)) return primitive(b);
  const auto meet = intersect(PolyIdeal({a}, n), PolyIdeal({b}, n));
  if (meet.generators().size() != 1) fail("InternalError", "intersection of principal ideals is not principal");
  if (!(a * b).divide_exact(meet.generators()[0], q)) fail("InternalError", "lcm does not divide the product");
  return primitive(q.with_nvars(n));
}

std::vector<MFactor> factor_poly(const QMultiPoly& p) {
  if (p.is_zero()) fail("ZeroPolynomial", "cannot factor 0");
  const int n = p.nvars();
  std::vector<MFactor> out;
  // monomial content
  Monomial content = p.terms().front().first;
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < kMaxVars; ++i) content.e[i] = std::min(content.e[i], m.e[i]);
  content.deg = 0;
  for (auto e : content.e) content.deg += e;
  for (int i = 0; i < n; ++i)
    if (content[i]) out.push_back({QMultiPoly::var(n, i), static_cast<int>(content[i])});
  std::vector<QMultiPoly::Term> t;
  for (const auto& [m, c] : p.terms()) t.emplace_back(m / content, c);
  QMultiPoly h(n, std::move(t));

  if (h.degree() > 0) {
    if (h.is_homogeneous()) {
      // dehomogenize at the last variable in use, factor, homogenize back
      const int v = used_vars(h).back();
      std::vector<QMultiPoly> sub;
      for (int i = 0; i < n; ++i) sub.push_back(i == v ? QMultiPoly(n, Rational(1)) : QMultiPoly::var(n, i));
      for (auto& f : factor_kronecker(h.substitute(sub))) {
        const int d = f.factor.degree();
        std::vector<QMultiPoly::Term> ht;
        for (const auto& [m, c] : f.factor.terms()) ht.emplace_back(m * Monomial::var(v, static_cast<unsigned>(d) - m.deg), c);
        out.push_back({primitive(QMultiPoly(n, std::move(ht))), f.multiplicity});
      }
    } else {
      auto fs = factor_kronecker(h);
      out.insert(out.end(), fs.begin(), fs.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const MFactor& a, const MFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.to_string() < b.factor.to_string();
  });
  return out;
}

}  // namespace halphen
