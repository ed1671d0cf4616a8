#include "halphen/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "halphen/errors.hpp"

namespace halphen {
namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31; low-to-high coefficients.

using Zp = std::vector<std::uint64_t>;

struct ModP {
  std::uint64_t p;

  void trim(Zp& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  Zp sub(Zp a, const Zp& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
  }
  Zp mul(const Zp& a, const Zp& b) const {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  std::pair<Zp, Zp> divmod(Zp a, const Zp& b) const {
    if (a.size() < b.size()) return {{}, a};
    Zp q(a.size() - b.size() + 1, 0);
    const std::uint64_t il = inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
      const std::uint64_t f = a[i] * il % p;
      const std::size_t s = i - (b.size() - 1);
      q[s] = f;
      if (f)
        for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = (a[s + j] + p - f * b[j] % p) % p;
      if (i == 0) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
  }
  Zp rem(const Zp& a, const Zp& b) const { return divmod(a, b).second; }
  Zp monic(Zp a) const {
    if (a.empty()) return a;
    const std::uint64_t il = inv(a.back());
    for (auto& v : a) v = v * il % p;
    return a;
  }
  Zp gcd(Zp a, Zp b) const {
    while (!b.empty()) {
      Zp r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b
  std::pair<Zp, Zp> xgcd(const Zp& a, const Zp& b) const {
    Zp r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Zp s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      Zp t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t il = inv(r0.back());
    for (auto& v : s0) v = v * il % p;
    for (auto& v : t0) v = v * il % p;
    return {s0, t0};
  }
  Zp powmod(Zp base, const mpz_class& e, const Zp& m) const {
    Zp r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  Zp derivative(const Zp& a) const {
    if (a.size() <= 1) return {};
    Zp d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    trim(d);
    return d;
  }

  // Distinct-degree then equal-degree (Cantor-Zassenhaus) splitting of a
  // monic squarefree polynomial.
  std::vector<Zp> factor_squarefree(const Zp& f, std::mt19937_64& rng) const {
    std::vector<Zp> out;
    Zp rest = f;
    Zp h{0, 1};  // x
    const Zp x{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
      h = powmod(h, mpz_class(static_cast<unsigned long>(p)), rest);
      Zp g = gcd(rest, sub(h, x));
      if (g.size() > 1) {
        equal_degree(g, d, rng, out);
        rest = divmod(rest, g).first;
        h = rem(h, rest);
      }
    }
    if (rest.size() > 1) out.push_back(monic(rest));
    return out;
  }

  void equal_degree(const Zp& f, int d, std::mt19937_64& rng, std::vector<Zp>& out) const {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
      out.push_back(monic(f));
      return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
      Zp a(static_cast<std::size_t>(n));
      for (auto& v : a) v = dist(rng);
      trim(a);
      if (a.size() <= 1) continue;
      Zp b = powmod(a, e, f);
      b = sub(b, Zp{1});
      Zp g = gcd(f, b);
      if (g.size() > 1 && g.size() < f.size()) {
        equal_degree(g, d, rng, out);
        equal_degree(divmod(f, g).first, d, rng, out);
        return;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<mpz_class>;

void trimz(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly mulz(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trimz(r);
  return r;
}

void modz(ZPoly& a, const mpz_class& m) {
  for (auto& v : a) {
    v %= m;
    if (v < 0) v += m;
  }
  trimz(a);
}

// Remainder by a monic polynomial, coefficients reduced mod m.
ZPoly remz_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  modz(a, m);
  while (a.size() >= b.size()) {
    const std::size_t s = a.size() - b.size();
    const mpz_class f = a.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= f * b[j];
    a.pop_back();
    modz(a, m);
  }
  return a;
}

// Exact division over Z; returns false when b does not divide a.
bool divides_z(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (r[i] != 0) {
      if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
      const mpz_class f = r[i] / b.back();
      const std::size_t s = i - (b.size() - 1);
      q[s] = f;
      for (std::size_t j = 0; j < b.size(); ++j) r[s + j] -= f * b[j];
    }
    if (i == 0) break;
  }
  for (const auto& v : r)
    if (v != 0) return false;
  trimz(q);
  quotient = std::move(q);
  return true;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = 0;
  for (const auto& v : a) g = gcd(g, v);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& v : a) v /= g;
  return a;
}

ZPoly to_zpoly(const QPoly& q) {
  mpz_class den = 1;
  for (const auto& c : q.coeffs()) den = lcm(den, c.get_den());
  ZPoly r;
  for (const auto& c : q.coeffs()) r.push_back(mpz_class(c * den));
  return primitive_part(r);
}

QPoly to_monic_qpoly(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return QPoly(std::move(c)).monic();
}

Zp reduce_mod(const ZPoly& a, std::uint64_t p) {
  Zp r;
  for (const auto& v : a) {
    mpz_class t = v % static_cast<unsigned long>(p);
    if (t < 0) t += static_cast<unsigned long>(p);
    r.push_back(t.get_ui());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

ZPoly lift_rep(const Zp& a) {
  ZPoly r;
  for (auto v : a) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Lift monic F = g*h (mod p) to mod p^k, both factors monic.
void hensel_two(const ZPoly& F, ZPoly& g, ZPoly& h, const ModP& mp, int k) {
  const mpz_class p(static_cast<unsigned long>(mp.p));
  auto [s, t] = mp.xgcd(reduce_mod(g, mp.p), reduce_mod(h, mp.p));
  mpz_class pj = p;
  for (int j = 1; j < k; ++j) {
    const mpz_class pj1 = pj * p;
    ZPoly e = F;
    ZPoly gh = mulz(g, h);
    if (gh.size() > e.size()) e.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    modz(e, pj1);
    for (auto& v : e) v /= pj;  // exact by induction
    const Zp ep = reduce_mod(e, mp.p);
    const Zp sigma = mp.rem(mp.mul(s, ep), reduce_mod(h, mp.p));
    const Zp tau = mp.rem(mp.mul(t, ep), reduce_mod(g, mp.p));
    ZPoly dg = lift_rep(tau), dh = lift_rep(sigma);
    if (dg.size() > g.size()) g.resize(dg.size(), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pj * dg[i];
    if (dh.size() > h.size()) h.resize(dh.size(), 0);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pj * dh[i];
    modz(g, pj1);
    modz(h, pj1);
    pj = pj1;
  }
}

// Multifactor lift by recursive halving.
std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<Zp>& fs, const ModP& mp,
                                int k, const mpz_class& M) {
  if (fs.size() == 1) return {F};
  const std::size_t half = fs.size() / 2;
  Zp a{1}, b{1};
  for (std::size_t i = 0; i < half; ++i) a = mp.mul(a, fs[i]);
  for (std::size_t i = half; i < fs.size(); ++i) b = mp.mul(b, fs[i]);
  ZPoly g = lift_rep(a), h = lift_rep(b);
  hensel_two(F, g, h, mp, k);
  modz(g, M);
  modz(h, M);
  auto left = hensel_multi(g, {fs.begin(), fs.begin() + static_cast<long>(half)}, mp, k, M);
  auto right = hensel_multi(h, {fs.begin() + static_cast<long>(half), fs.end()}, mp, k, M);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

void symmetric(ZPoly& a, const mpz_class& M) {
  const mpz_class half = M / 2;
  for (auto& v : a)
    if (v > half) v -= M;
}

// Factor a primitive squarefree integer polynomial with positive leading
// coefficient.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const ZPoly df = [&] {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    return d;
  }();

  std::mt19937_64 rng(0x5eed);
  std::uint64_t best_p = 0;
  std::vector<Zp> best;
  int tried = 0;
  for (std::uint64_t p = 1000003; tried < 5; p += 2) {
    if (!is_prime_small(p)) continue;
    ModP mp{p};
    if (reduce_mod({f.back()}, p).empty()) continue;
    Zp fp = reduce_mod(f, p);
    if (mp.gcd(fp, reduce_mod(df, p)).size() > 1) continue;
    auto fs = mp.factor_squarefree(mp.monic(fp), rng);
    ++tried;
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Coefficient bound for factors (Mignotte-style, generous).
  mpz_class norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(n);
  bound *= abs(f.back());
  bound *= 2;
  const ModP mp{best_p};
  const mpz_class p(static_cast<unsigned long>(best_p));
  int k = 1;
  mpz_class M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }

  // Monic F = lc^{-1} f mod M.
  mpz_class lcinv;
  mpz_invert(lcinv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
  ZPoly F = f;
  for (auto& v : F) v *= lcinv;
  modz(F, M);
  std::vector<ZPoly> lifted = hensel_multi(F, best, mp, k, M);

  std::vector<ZPoly> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{f.back()};
      for (auto i : idx) {
        cand = mulz(cand, lifted[i]);
        modz(cand, M);
      }
      symmetric(cand, M);
      cand = primitive_part(cand);
      ZPoly q;
      if (divides_z(f, cand, q)) {
        result.push_back(cand);
        f = primitive_part(q);
        for (std::size_t j = s; j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] != i + lifted.size() - s) break;
        if (i == 0) {
          i = static_cast<std::size_t>(-1);
          break;
        }
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  result.push_back(f);
  return result;
}

bool less_poly(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<QFactor> factor(const QPoly& p) {
  if (p.is_zero()) fail("ZeroPolynomial", "cannot factor the zero polynomial");
  std::vector<QFactor> out;
  // Yun's squarefree decomposition.
  QPoly a = p.monic();
  if (a.degree() == 0) return out;
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = a / c;
  QPoly y = b / c;
  int i = 1;
  while (w.degree() > 0) {
    QPoly z = y - w.derivative();
    QPoly g = gcd(w, z);
    if (g.degree() > 0) {
      for (const auto& zf : zassenhaus(to_zpoly(g))) out.push_back({to_monic_qpoly(zf), i});
    }
    w = w / g;
    y = z / g;
    ++i;
  }
  std::sort(out.begin(), out.end(),
            [](const QFactor& l, const QFactor& r) { return less_poly(l.factor, r.factor); });
  return out;
}

bool is_irreducible(const QPoly& p) {
  auto fs = factor(p);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  for (const auto& f : factor(p))
    if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace halphen
