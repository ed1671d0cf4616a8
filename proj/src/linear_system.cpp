#include "halphen/linear_system.hpp"

#include <algorithm>
#include <unordered_map>

#include "halphen/errors.hpp"

namespace halphen {
namespace {

KPoly shifted(const KPoly& c, unsigned a) {
  if (c.is_zero() || a == 0) return c;
  std::vector<NfElem> v(a, NfElem(0));
  v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
  return KPoly(std::move(v));
}

// F(M(xz, yz, z, 1)) / z as a polynomial in (y, z) over K[x].
MultiPoly<KPoly> local_equation_over_kx(const NfMultiPoly& g) {
  std::vector<MultiPoly<KPoly>::Term> t;
  for (const auto& [m, c] : g.terms()) {
    Monomial yz;
    yz.e[0] = static_cast<std::uint16_t>(m[1]);
    yz.e[1] = static_cast<std::uint16_t>(m[2]);
    yz.deg = m[1] + m[2];
    t.emplace_back(yz, KPoly::monomial(c, m[0]));
  }
  return MultiPoly<KPoly>(2, std::move(t));
}

// Greedy choice of the polys independent modulo span(multiples).
std::vector<QMultiPoly> independent_mod(const std::vector<QMultiPoly>& polys, const std::vector<QMultiPoly>& multiples) {
  std::vector<QMultiPoly> all = multiples;
  all.insert(all.end(), polys.begin(), polys.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (const auto& p : all)
    for (const auto& [m, c] : p.terms()) idx.emplace(m, idx.size());
  QMatrix A(idx.size(), all.size());
  for (std::size_t j = 0; j < all.size(); ++j)
    for (const auto& [m, c] : all[j].terms()) A(idx[m], j) = c;
  std::vector<QMultiPoly> out;
  for (auto c : A.rref())
    if (c >= multiples.size()) out.push_back(all[c]);
  return out;
}

}  // namespace

KPoly taylor_shift(const KPoly& c, const NfElem& s) {
  // Horner in (s + u)
  const KPoly lin(std::vector<NfElem>{s, NfElem(1)});
  KPoly acc;
  for (std::size_t i = c.coeffs().size(); i-- > 0;) acc = acc * lin + KPoly(c.coeffs()[i]);
  return acc;
}

ChartSeries substitute_centre(const ChartSeries& S, const NfElem& s) {
  ChartSeries out(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (S[k].is_zero()) continue;
    const KPoly sh = taylor_shift(S[k], s);
    for (std::size_t j = 0; k + j < S.size() && j < sh.coeffs().size(); ++j)
      if (!is_zero(sh.coeffs()[j])) out[k + j] += KPoly::monomial(sh.coeffs()[j], j);
  }
  return out;
}

std::size_t series_order(const ChartSeries& S) {
  for (std::size_t k = 0; k < S.size(); ++k)
    if (!S[k].is_zero()) return k;
  return S.size();
}

BlowupChart::BlowupChart(const CubicSurface& X, const GeometricPoint& P, std::size_t precision, bool swap_xz)
    : field_(P.field), change_(move_point_to_standard(X, P, swap_xz).change) {
  const NfMultiPoly Fp = change_.pullback(X.equation());
  // F'(xz, yz, z, 1) = z g(x, y, z)
  std::vector<NfMultiPoly::Term> t;
  for (const auto& [m, c] : Fp.terms()) {
    const unsigned zdeg = m[0] + m[1] + m[2];
    if (zdeg == 0) fail("InternalError", "standardized point is not on X");
    Monomial r;
    r.e[0] = static_cast<std::uint16_t>(m[0]);
    r.e[1] = static_cast<std::uint16_t>(m[1]);
    r.e[2] = static_cast<std::uint16_t>(zdeg - 1);
    r.deg = m[0] + m[1] + zdeg - 1;
    t.emplace_back(r, c);
  }
  g_ = NfMultiPoly(3, std::move(t));
  Y_ = series_root(local_equation_over_kx(g_), std::max<std::size_t>(precision, 1)).coeffs;
}

BlowupChart BlowupChart::iterate(const NfElem& x0, const NfElem& z0) const {
  if (!is_zero(z0)) fail("PointOffExceptional", "point does not lie on the exceptional curve z = 0");
  BlowupChart next = *this;
  next.centres_.push_back(x0);
  return next;
}

ChartSeries BlowupChart::pullback(const QMultiPoly& form) const {
  const std::size_t n = precision();
  const NfMultiPoly p = change_.pullback(form);
  ChartSeries S(n);
  std::vector<ChartSeries> ypow{ChartSeries(n)};
  ypow[0][0] = KPoly(NfElem(1));
  for (const auto& [m, c] : p.terms()) {
    const std::size_t shift = m[0] + m[1] + m[2];
    if (shift >= n) continue;
    while (ypow.size() <= m[1]) ypow.push_back(series_mul(ypow.back(), Y_, n));
    const ChartSeries& yb = ypow[m[1]];
    for (std::size_t k = 0; k + shift < n; ++k)
      if (!yb[k].is_zero()) S[k + shift] += shifted(yb[k], m[0]) * c;
  }
  for (const auto& s : centres_) S = substitute_centre(S, s);
  return S;
}

std::size_t order_along(const BlowupChart& chart, const QMultiPoly& form) {
  return series_order(chart.pullback(form));
}

LinearSystemOnX::LinearSystemOnX(CubicSurface X, unsigned degree, const std::vector<QMultiPoly>& sections)
    : X_(std::move(X)), degree_(degree) {
  for (const auto& s : sections)
    if (!s.is_zero() && (!s.is_homogeneous() || s.degree() != static_cast<int>(degree)))
      fail("DegreeMismatch", "section " + s.to_string() + " is not a form of degree " + std::to_string(degree));
  sections_ = independent_mod(echelon_basis(sections), surface_multiples());
}

LinearSystemOnX LinearSystemOnX::complete(const CubicSurface& X, unsigned degree) {
  std::vector<QMultiPoly> mons;
  for (const auto& m : monomials_of_degree(4, degree)) mons.push_back(QMultiPoly::monomial(4, m, Rational(1)));
  LinearSystemOnX sys(X, degree, {}, true);
  LinearConditionSet none;
  none.unknowns = mons.size();
  sys.sections_ = solve_and_complement(none, mons, sys.surface_multiples());
  return sys;
}

std::vector<QMultiPoly> LinearSystemOnX::surface_multiples() const {
  std::vector<QMultiPoly> out;
  if (degree_ < 3) return out;
  for (const auto& m : monomials_of_degree(4, degree_ - 3)) out.push_back(X_.equation().mul_term(m, Rational(1)));
  return out;
}

LinearConditionSet LinearSystemOnX::conditions(const BlowupChart& chart, unsigned m) const {
  if (m > chart.precision()) fail("InternalError", "chart precision below the imposed order");
  LinearConditionSet out;
  out.unknowns = sections_.size();
  if (m == 0) return out;
  // pull back each monomial once
  std::unordered_map<Monomial, ChartSeries, MonomialHash> cache;
  std::vector<ChartSeries> series;
  for (const auto& s : sections_) {
    ChartSeries S(m);
    for (const auto& [mon, c] : s.terms()) {
      auto it = cache.find(mon);
      if (it == cache.end()) it = cache.emplace(mon, chart.pullback(QMultiPoly::monomial(4, mon, Rational(1)))).first;
      for (std::size_t k = 0; k < m; ++k) S[k] += it->second[k] * NfElem(c);
    }
    series.push_back(std::move(S));
  }
  const int e = chart.field_degree();
  for (std::size_t k = 0; k < m; ++k) {
    int maxdeg = -1;
    for (const auto& S : series) maxdeg = std::max(maxdeg, S[k].degree());
    for (int j = 0; j <= maxdeg; ++j) {
      std::vector<NfElem> row;
      for (const auto& S : series) row.push_back(S[k].coeff(static_cast<std::size_t>(j)));
      for (auto& r : split_conditions(row, e))
        if (std::any_of(r.begin(), r.end(), [](const Rational& v) { return sgn(v) != 0; })) out.add(std::move(r));
    }
  }
  return out;
}

LinearSystemOnX LinearSystemOnX::restrict(const LinearConditionSet& conditions) const {
  return LinearSystemOnX(X_, degree_, solve_and_complement(conditions, sections_, {}), true);
}

LinearSystemOnX impose_basepoint(const LinearSystemOnX& system, const ClosedPoint& P, unsigned m) {
  if (m == 0) return system;
  if (P.degree() > 3) fail("UnsupportedDegree", "basepoints of degree > 3 are not supported");
  if (!P.ideal().contains(system.surface().equation())) fail("NotOnSurface", "basepoint does not lie on X");
  const BlowupChart chart(system.surface(), P.geometric(), m);
  return system.restrict(system.conditions(chart, m));
}

Multiplicity multiplicity(const LinearSystemOnX& system, const ClosedPoint& P, std::size_t precision) {
  if (system.empty()) fail("EmptySystem", "multiplicity of an empty system");
  if (P.degree() > 3) fail("UnsupportedDegree", "basepoints of degree > 3 are not supported");
  if (precision == 0) precision = 3 * system.degree() + 2;
  const BlowupChart chart(system.surface(), P.geometric(), precision);
  std::size_t best = precision;
  for (const auto& s : system.sections()) best = std::min(best, order_along(chart, s));
  return {static_cast<unsigned>(best), best >= precision};
}

}  // namespace halphen
