#include "halphen/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "halphen/errors.hpp"
#include "halphen/factor.hpp"
#include "halphen/mfactor.hpp"

namespace halphen {

PolyIdeal::PolyIdeal(std::vector<QMultiPoly> generators, int nvars)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& [m, c] : g.terms())
      for (int i = nvars; i < kMaxVars; ++i)
        if (m[i] != 0) fail("InternalError", "generator uses a variable beyond the ideal's ring");
    gens_.push_back(g.with_nvars(nvars));
  }
}

bool PolyIdeal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const QMultiPoly& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& PolyIdeal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = GroebnerBasis::compute(gens_, nvars_); });
  return cache_->gb;
}

bool PolyIdeal::contains(const PolyIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const QMultiPoly& g) { return contains(g); });
}

std::vector<std::string> PolyIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

GroebnerBasis groebner(const PolyIdeal& I, MonomialOrder order) {
  if (order == MonomialOrder::grevlex()) return I.groebner();
  return GroebnerBasis::compute(I.generators(), I.nvars(), order);
}

namespace {

// Move variable i to position perm[i].
QMultiPoly permute(const QMultiPoly& p, const std::vector<int>& perm, int nvars) {
  std::vector<QMultiPoly::Term> t;
  t.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (int i = 0; i < p.nvars(); ++i) r.e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = m.e[static_cast<std::size_t>(i)];
    r.deg = m.deg;
    t.emplace_back(r, c);
  }
  return QMultiPoly(nvars, std::move(t));
}

bool uses_any(const QMultiPoly& p, const std::vector<int>& vars) {
  for (const auto& [m, c] : p.terms())
    for (int v : vars)
      if (m[v]) return true;
  return false;
}

QMultiPoly homogenize(const QMultiPoly& p, int var) {
  const int d = p.degree();
  std::vector<QMultiPoly::Term> t;
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    r.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(r.e[static_cast<std::size_t>(var)] + d - static_cast<int>(m.deg));
    r.deg = static_cast<std::uint32_t>(d);
    t.emplace_back(r, c);
  }
  return QMultiPoly(p.nvars(), std::move(t));
}

}  // namespace

PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J) {
  auto g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return PolyIdeal(std::move(g), I.nvars());
}

PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J) {
  std::vector<QMultiPoly> g;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) g.push_back(a * b);
  return PolyIdeal(std::move(g), I.nvars());
}

PolyIdeal eliminate(const PolyIdeal& I, const std::vector<int>& elim) {
  const int n = I.nvars();
  std::vector<int> perm(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
  int next = 0;
  for (int v : elim) perm[static_cast<std::size_t>(v)] = next++;
  for (int v = 0; v < n; ++v)
    if (std::find(elim.begin(), elim.end(), v) == elim.end()) perm[static_cast<std::size_t>(v)] = next++;
  for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
  std::vector<QMultiPoly> g;
  for (const auto& p : I.generators()) g.push_back(permute(p, perm, n));
  const auto gb = GroebnerBasis::compute(g, n, MonomialOrder::elimination(static_cast<int>(elim.size())));
  std::vector<int> front;
  for (int i = 0; i < static_cast<int>(elim.size()); ++i) front.push_back(i);
  std::vector<QMultiPoly> out;
  for (const auto& p : gb.polys())
    if (!uses_any(p, front)) out.push_back(permute(p, inv, n));
  return PolyIdeal(std::move(out), n);
}

PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J) {
  const int n = I.nvars();
  if (I.generators().empty() || J.generators().empty()) return PolyIdeal({}, n);
  const QMultiPoly s = QMultiPoly::var(n + 1, n);
  const QMultiPoly one(n + 1, Rational(1));
  std::vector<QMultiPoly> g;
  for (const auto& a : I.generators()) g.push_back(s * a.with_nvars(n + 1));
  for (const auto& b : J.generators()) g.push_back((one - s) * b.with_nvars(n + 1));
  const auto E = eliminate(PolyIdeal(std::move(g), n + 1), {n});
  std::vector<QMultiPoly> out;
  for (const auto& p : E.generators()) out.push_back(p.with_nvars(n));
  return PolyIdeal(std::move(out), n);
}

PolyIdeal ideal_quotient(const PolyIdeal& I, const QMultiPoly& f) {
  const int n = I.nvars();
  if (f.is_zero() || I.contains(f)) return PolyIdeal::unit(n);
  const auto meet = intersect(I, PolyIdeal({f}, n));
  std::vector<QMultiPoly> out;
  for (const auto& p : meet.generators()) {
    QMultiPoly q;
    if (!p.divide_exact(f, q)) fail("InternalError", "intersection with <f> not divisible by f");
    out.push_back(q.with_nvars(n));
  }
  return PolyIdeal(std::move(out), n);
}

PolyIdeal ideal_quotient(const PolyIdeal& I, const PolyIdeal& P) {
  if (P.generators().empty()) return PolyIdeal::unit(I.nvars());
  PolyIdeal acc;
  bool first = true;
  for (const auto& p : P.generators()) {
    auto q = ideal_quotient(I, p);
    if (q.is_unit()) continue;
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return first ? PolyIdeal::unit(I.nvars()) : acc.reduced();
}

PolyIdeal saturate(const PolyIdeal& I, const QMultiPoly& f) {
  const int n = I.nvars();
  const QMultiPoly w = QMultiPoly::var(n + 1, n);
  auto g = I.generators();
  for (auto& p : g) p = p.with_nvars(n + 1);
  g.push_back(QMultiPoly(n + 1, Rational(1)) - w * f.with_nvars(n + 1));
  const auto E = eliminate(PolyIdeal(std::move(g), n + 1), {n});
  std::vector<QMultiPoly> out;
  for (const auto& p : E.generators()) out.push_back(p.with_nvars(n));
  return PolyIdeal(std::move(out), n);
}

Saturation saturation_exponent(const PolyIdeal& J, const PolyIdeal& P, int max_steps) {
  if (max_steps < 0) {
    max_steps = 64;
    if (const char* env = std::getenv("HALPHEN_MAX_SATURATION")) max_steps = std::atoi(env);
  }
  Saturation s{0, J};
  while (P.contains(s.ideal)) {
    if (s.n >= max_steps)
      fail("NoTermination", "saturation exponent exceeds " + std::to_string(max_steps));
    s.ideal = ideal_quotient(s.ideal, P);
    ++s.n;
  }
  return s;
}

DimensionDegree dimension_and_degree(const PolyIdeal& I) {
  if (!I.is_homogeneous()) fail("NotHomogeneous", "dimension_and_degree needs a homogeneous ideal");
  auto N = hilbert_numerator(I.groebner().leading_monomials(), I.nvars());
  int k = 0;
  while (!N.empty()) {
    Integer sum = 0;
    for (const auto& c : N) sum += c;
    if (sum != 0) break;
    // N = (1 - T) Q
    std::vector<Integer> q(N.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < N.size(); ++i) {
      acc += N[i];
      q[i] = acc;
    }
    N = std::move(q);
    ++k;
  }
  DimensionDegree r;
  r.dim = I.nvars() - k - 1;
  if (N.empty() || r.dim < 0) return {-1, 0};
  Integer deg = 0;
  for (const auto& c : N) deg += c;
  r.degree = static_cast<int>(deg.get_si());
  return r;
}

PolyIdeal canonical(const PolyIdeal& I) {
  return PolyIdeal(GroebnerBasis::compute(I.generators(), I.nvars(), MonomialOrder::lex()).polys(), I.nvars());
}

// ---------------------------------------------------------------------------
// Zero-dimensional part: chart by chart, via minimal polynomials in the
// finite-dimensional quotient algebra.

namespace {

QMultiPoly to_upoly_var(const QPoly& q, const QMultiPoly& f) {
  QMultiPoly acc(f.nvars());
  for (int i = q.degree(); i >= 0; --i) acc = acc * f + QMultiPoly(f.nvars(), q.coeff(static_cast<std::size_t>(i)));
  return acc;
}

using Vec = std::vector<Rational>;

// Row-echelon subspace; each row optionally remembers how it was combined
// from the inserted vectors.
class Echelon {
public:
  explicit Echelon(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces v in place; combo (if tracking) receives the coefficients c with
  // v_original = v_reduced + Σ c_j inserted_j.
  void reduce(Vec& v, Vec* combo = nullptr) const {
    for (const auto& r : rows_) {
      const Rational c = v[r.pivot];
      if (sgn(c) == 0) continue;
      for (std::size_t i = r.pivot; i < v.size(); ++i)
        if (sgn(r.v[i]) != 0) v[i] -= c * r.v[i];
      if (combo) {
        if (combo->size() < r.combo.size()) combo->resize(r.combo.size());
        for (std::size_t i = 0; i < r.combo.size(); ++i)
          if (sgn(r.combo[i]) != 0) (*combo)[i] += c * r.combo[i];
      }
    }
  }

  // Inserts v (the count-th inserted vector); returns false and leaves the
  // dependency in `relation` when v is already in the span.
  bool insert(Vec v, Vec* relation = nullptr) {
    Vec combo;
    reduce(v, track_ ? &combo : nullptr);
    const std::size_t id = inserted_++;
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) {
      if (relation) {
        // v_id = Σ combo_j v_j
        *relation = Vec(id + 1);
        for (std::size_t i = 0; i < combo.size(); ++i) (*relation)[i] = -combo[i];
        (*relation)[id] = 1;
      }
      return false;
    }
    Row r{std::move(v), Vec(), p};
    if (track_) {
      // row = v_id - Σ combo_j v_j, then scaled
      r.combo.assign(id + 1, Rational(0));
      for (std::size_t i = 0; i < combo.size(); ++i) r.combo[i] = -combo[i];
      r.combo[id] = 1;
    }
    const Rational inv = 1 / r.v[p];
    for (auto& x : r.v) x *= inv;
    for (auto& x : r.combo) x *= inv;
    rows_.push_back(std::move(r));
    return true;
  }

private:
  struct Row {
    Vec v, combo;
    std::size_t pivot;
  };
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

// Finite-dimensional algebra Q[vars]/J given by a Gröbner basis, with the
// multiplication matrices of the variables.
class QuotientAlgebra {
public:
  QuotientAlgebra(const GroebnerBasis& gb, const std::vector<int>& vars) : gb_(gb), vars_(vars) {
    const auto lms = gb.leading_monomials();
    auto standard = [&](const Monomial& m) {
      for (const auto& l : lms)
        if (l.divides(m)) return false;
      return true;
    };
    std::vector<Monomial> frontier{Monomial{}};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        if (index_.count(m) || !standard(m)) continue;
        index_[m] = basis_.size();
        basis_.push_back(m);
        if (basis_.size() > 100000) fail("UnsupportedDimension", "quotient algebra is not finite");
        for (int v : vars) next.push_back(m * Monomial::var(v));
      }
      frontier = std::move(next);
    }
    const int n = gb.nvars();
    for (int v : vars) {
      std::vector<Vec> cols;
      for (const auto& b : basis_) cols.push_back(coords(QMultiPoly::monomial(n, b * Monomial::var(v), Rational(1))));
      mult_.push_back(std::move(cols));
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  Vec coords(const QMultiPoly& f) const {
    Vec v(basis_.size());
    const QMultiPoly nf = gb_.normal_form(f);
    for (const auto& [m, c] : nf.terms()) v[index_.at(m)] = c;
    return v;
  }
  Vec one() const { return coords(QMultiPoly(gb_.nvars(), Rational(1))); }

  // Product of the element with a linear form Σ w_i vars_i.
  Vec mul_linear(const Vec& w, const Vec& x) const {
    Vec r(basis_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (sgn(w[i]) == 0) continue;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        const Rational c = w[i] * x[k];
        const Vec& col = mult_[i][k];
        for (std::size_t j = 0; j < col.size(); ++j)
          if (sgn(col[j]) != 0) r[j] += c * col[j];
      }
    }
    return r;
  }
  Vec mul_var(std::size_t i, const Vec& x) const {
    Vec w(vars_.size());
    w[i] = 1;
    return mul_linear(w, x);
  }

  /// Minimal polynomial of multiplication by the linear form w on the
  /// quotient by `sub`; `krylov` receives the tracked span of its powers.
  QPoly minimal_polynomial(const Vec& w, const Echelon& sub, Echelon* krylov = nullptr) const {
    Echelon local(true);
    Echelon& K = krylov ? *krylov : local;
    Vec x = one();
    for (;;) {
      Vec r = x;
      sub.reduce(r);
      Vec rel;
      if (!K.insert(r, &rel)) return QPoly(rel).monic();
      x = mul_linear(w, r);
    }
  }

private:
  const GroebnerBasis& gb_;
  std::vector<int> vars_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<Vec>> mult_;  // mult_[i][k] = coords(vars_i * basis_k)
};

// Points of V(J) in the chart x_v = 1, x_w = 0 for w > v.
std::vector<SchemeComponent> chart_points(const PolyIdeal& J, int v) {
  const int n = J.nvars();
  std::vector<QMultiPoly> sub;
  for (int i = 0; i < n; ++i) {
    if (i < v) sub.push_back(QMultiPoly::var(n, i));
    else sub.emplace_back(n, Rational(i == v ? 1 : 0));
  }
  // For grevlex, setting the last variable to 0 or 1 maps a basis to a basis.
  std::vector<QMultiPoly> aff;
  for (const auto& g : J.groebner().polys()) aff.push_back(g.substitute(sub));
  std::vector<int> vars;
  for (int i = 0; i < v; ++i) vars.push_back(i);
  const auto gb = GroebnerBasis::from_basis(aff, n);
  if (gb.is_unit()) return {};
  const QuotientAlgebra A(gb, vars);
  const std::size_t nv = vars.size();

  // Radical (Seidenberg): the ideal generated by the squarefree parts of the
  // univariate eliminants, as a subspace of A.
  Echelon nil;
  {
    const Echelon none;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < nv; ++i) {
      Vec w(nv);
      w[i] = 1;
      const QPoly sq = squarefree_part(A.minimal_polynomial(w, none));
      Vec acc(A.dim()), pw = A.one();
      for (int k = 0; k <= sq.degree(); ++k) {
        const Rational& c = sq.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) != 0)
          for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += c * pw[j];
        pw = A.mul_var(i, pw);
      }
      gens.push_back(std::move(acc));
    }
    // close under multiplication by the standard monomials
    std::vector<Vec> frontier = gens;
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (auto& g : frontier) {
        Vec r = g;
        nil.reduce(r);
        bool zero = std::all_of(r.begin(), r.end(), [](const Rational& c) { return sgn(c) == 0; });
        if (zero) continue;
        nil.insert(r);
        for (std::size_t i = 0; i < nv; ++i) next.push_back(A.mul_var(i, r));
      }
      frontier = std::move(next);
    }
  }
  const std::size_t npts = A.dim() - nil.rank();

  Vec w(nv);
  QPoly mu;
  Echelon krylov(true);
  for (long s = 1;; ++s) {
    Rational c = 1;
    for (std::size_t k = nv; k-- > 0;) {
      w[k] = c;
      c *= s;
    }
    krylov = Echelon(true);
    mu = A.minimal_polynomial(w, nil, &krylov);
    if (static_cast<std::size_t>(mu.degree()) == npts) break;
    if (s > 200) fail("InterpolationDegenerate", "no separating linear form found");
  }
  QMultiPoly ell(n);
  for (std::size_t i = 0; i < nv; ++i) ell += QMultiPoly::var(n, vars[i]) * w[i];

  // each coordinate as a polynomial in ell on the reduced points
  std::vector<QPoly> h;
  for (std::size_t i = 0; i < nv; ++i) {
    Vec x = A.coords(QMultiPoly::var(n, vars[i]));
    nil.reduce(x);
    Vec combo;
    krylov.reduce(x, &combo);
    h.emplace_back(combo);
  }

  std::vector<SchemeComponent> out;
  for (const auto& f : factor(mu)) {
    std::vector<QMultiPoly> gens{to_upoly_var(f.factor, ell)};
    for (std::size_t i = 0; i < nv; ++i)
      gens.push_back(QMultiPoly::var(n, vars[i]) - to_upoly_var(h[i] % f.factor, ell));
    const auto pg = GroebnerBasis::compute(gens, n).polys();
    std::vector<QMultiPoly> hom;
    for (const auto& p : pg) hom.push_back(homogenize(p, v));
    for (int u = v + 1; u < n; ++u) hom.push_back(QMultiPoly::var(n, u));
    out.push_back({canonical(PolyIdeal(hom, n)), 3, f.factor.degree()});
  }
  return out;
}

}  // namespace

PointParametrization parametrize_point(const PolyIdeal& prime) {
  const int n = prime.nvars();
  int v = n - 1;
  while (v >= 0 && prime.contains(QMultiPoly::var(n, v))) --v;
  if (v < 0) fail("NotAPoint", "ideal has no projective zeros");
  std::vector<QMultiPoly> sub;
  for (int i = 0; i < n; ++i) {
    if (i < v) sub.push_back(QMultiPoly::var(n, i));
    else sub.emplace_back(n, Rational(i == v ? 1 : 0));
  }
  std::vector<QMultiPoly> aff;
  for (const auto& g : prime.groebner().polys()) aff.push_back(g.substitute(sub));
  std::vector<int> vars;
  for (int i = 0; i < v; ++i) vars.push_back(i);
  const auto gb = GroebnerBasis::from_basis(aff, n);
  if (gb.is_unit()) fail("NotAPoint", "ideal has no zeros in its chart");
  const QuotientAlgebra A(gb, vars);
  const std::size_t nv = vars.size();
  const Echelon none;
  Vec w(nv);
  QPoly mu(Rational(1));
  Echelon krylov(true);
  for (long s = 1; nv > 0; ++s) {
    Rational c = 1;
    for (std::size_t k = nv; k-- > 0;) {
      w[k] = c;
      c *= s;
    }
    krylov = Echelon(true);
    mu = A.minimal_polynomial(w, none, &krylov);
    if (static_cast<std::size_t>(mu.degree()) == A.dim()) break;
    if (s > 200) fail("InterpolationDegenerate", "no primitive element found");
  }
  if (!is_irreducible(mu) && mu.degree() > 1) fail("NotPrime", "point ideal is not prime");
  PointParametrization out{mu, std::vector<QPoly>(static_cast<std::size_t>(n))};
  for (std::size_t i = 0; i < nv; ++i) {
    Vec x = A.coords(QMultiPoly::var(n, vars[i]));
    Vec combo;
    krylov.reduce(x, &combo);
    out.coords[i] = QPoly(combo) % mu;
  }
  out.coords[static_cast<std::size_t>(v)] = QPoly(Rational(1));
  return out;
}

namespace {

std::vector<SchemeComponent> point_primes(const PolyIdeal& J) {
  std::vector<SchemeComponent> out;
  for (int v = J.nvars() - 1; v >= 0; --v) {
    auto pts = chart_points(J, v);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Curves: project from a point off V(I), factor the image, lift each plane
// curve back through a relation B t - A.

std::vector<QMultiPoly> shear(int n, const Rational& s, bool inverse) {
  std::vector<QMultiPoly> sub;
  const QMultiPoly t = QMultiPoly::var(n, n - 1);
  Rational c = inverse ? -s : s;
  for (int i = 0; i + 1 < n; ++i) {
    sub.push_back(QMultiPoly::var(n, i) + t * c);
    c *= s;
  }
  sub.push_back(t);
  return sub;
}

std::vector<QMultiPoly> substitute_all(const std::vector<QMultiPoly>& ps, const std::vector<QMultiPoly>& sub) {
  std::vector<QMultiPoly> out;
  for (const auto& p : ps) out.push_back(p.substitute(sub));
  return out;
}

// Coefficients of p as a polynomial in variable v.
std::vector<QMultiPoly> coefficients_in(const QMultiPoly& p, int v) {
  std::vector<std::vector<QMultiPoly::Term>> parts;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[v];
    if (parts.size() <= e) parts.resize(e + 1);
    Monomial r = m;
    r.e[static_cast<std::size_t>(v)] = 0;
    r.deg -= e;
    parts[e].emplace_back(r, c);
  }
  std::vector<QMultiPoly> out;
  for (auto& t : parts) out.emplace_back(p.nvars(), std::move(t));
  return out;
}

bool try_curves(const PolyIdeal& I, long attempt, std::vector<SchemeComponent>& out) {
  const int n = I.nvars();
  const int tv = n - 1;
  const Rational s(attempt);
  const PolyIdeal Is(substitute_all(I.generators(), shear(n, s, false)), n);

  // the projection centre (0:..:0:1) must be off V(I)
  bool centre_off = false;
  for (const auto& g : Is.generators())
    if (sgn(g.coeff(Monomial::var(tv, static_cast<unsigned>(g.degree())))) != 0) centre_off = true;
  if (!centre_off) return false;

  const auto E = eliminate(Is, {tv});
  QMultiPoly h(n);
  for (const auto& g : E.generators()) h = poly_gcd(h, g);
  if (h.degree() < 1) return false;

  std::vector<SchemeComponent> found;
  for (const auto& fac : factor_poly(h)) {
    const QMultiPoly& hi = fac.factor;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i == tv ? 0 : i + 1;
    auto gens = Is.generators();
    gens.push_back(hi);
    // t moved to the front so that the block order ranks by t-degree first
    std::vector<QMultiPoly> tg;
    for (const auto& g : gens) tg.push_back(permute(g, perm, n));
    const auto tgb = GroebnerBasis::compute(tg, n, MonomialOrder::elimination(1));

    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    const QMultiPoly* best = nullptr;
    QMultiPoly best_poly;
    unsigned best_e = 0;
    for (const auto& gp : tgb.polys()) {
      const QMultiPoly g = permute(gp, inv, n);
      const auto cs = coefficients_in(g, tv);
      const unsigned e = static_cast<unsigned>(cs.size()) - 1;
      if (e == 0) continue;
      QMultiPoly q;
      if (cs.back().divide_exact(hi, q)) continue;
      if (!best || e < best_e) {
        best_poly = g;
        best = &best_poly;
        best_e = e;
      }
    }
    if (!best) return false;
    QMultiPoly L = best_poly;
    for (unsigned k = 1; k < best_e; ++k) L = L.derivative(tv);
    const QMultiPoly B = coefficients_in(L, tv)[1];
    const PolyIdeal P = saturate(PolyIdeal({hi, L}, n), B);
    if (!P.contains(Is)) return false;
    const auto dd = dimension_and_degree(P);
    if (dd.dim != 1 || dd.degree != hi.degree()) return false;
    const PolyIdeal back(substitute_all(P.generators(), shear(n, s, true)), n);
    found.push_back({canonical(back), 2, dd.degree});
  }
  out = std::move(found);
  return true;
}

std::vector<SchemeComponent> curve_primes(const PolyIdeal& I) {
  std::vector<SchemeComponent> out;
  for (long a = 0; a < 64; ++a)
    if (try_curves(I, a, out)) return out;
  fail("UnsupportedDimension", "could not isolate the curve components");
}

bool component_less(const SchemeComponent& a, const SchemeComponent& b) {
  if (a.height != b.height) return a.height < b.height;
  if (a.degree != b.degree) return a.degree < b.degree;
  const auto& ga = a.prime.generators();
  const auto& gb = b.prime.generators();
  const auto lex = MonomialOrder::lex();
  for (std::size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
    const auto& ta = ga[i].terms();
    const auto& tb = gb[i].terms();
    // leading monomials in lex, then the printed form
    auto lead = [&](const std::vector<QMultiPoly::Term>& t) {
      Monomial best = t.front().first;
      for (const auto& [m, c] : t)
        if (lex.compare(m, best, kMaxVars) > 0) best = m;
      return best;
    };
    const int c = lex.compare(lead(ta), lead(tb), kMaxVars);
    if (c != 0) return c > 0;
    const auto sa = ga[i].to_string(), sb = gb[i].to_string();
    if (sa != sb) return sa < sb;
  }
  return ga.size() < gb.size();
}

}  // namespace

std::vector<SchemeComponent> minimal_primes(const PolyIdeal& I) {
  if (!I.is_homogeneous()) fail("NotHomogeneous", "minimal_primes needs a homogeneous ideal");
  const auto dd = dimension_and_degree(I);
  if (dd.dim > 1) fail("UnsupportedDimension", "V(I) has dimension " + std::to_string(dd.dim));
  if (dd.dim < 0) return {};
  std::vector<SchemeComponent> out;
  PolyIdeal J = I;
  if (dd.dim == 1) {
    out = curve_primes(I);
    for (const auto& c : out) {
      for (;;) {
        PolyIdeal q = ideal_quotient(J, c.prime);
        if (J.contains(q)) break;
        J = q;
      }
    }
  }
  if (dimension_and_degree(J).dim >= 0) {
    for (auto& p : point_primes(J)) {
      bool on_curve = false;
      for (const auto& c : out)
        if (p.prime.contains(c.prime)) on_curve = true;
      if (!on_curve) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), component_less);
  return out;
}

PolyIdeal radical(const PolyIdeal& I) {
  const auto dd = dimension_and_degree(I);
  if (dd.dim > 1) fail("UnsupportedDimension", "V(I) has dimension " + std::to_string(dd.dim));
  if (dd.dim < 0) {
    if (I.is_unit()) return PolyIdeal::unit(I.nvars());
    std::vector<QMultiPoly> m;
    for (int i = 0; i < I.nvars(); ++i) m.push_back(QMultiPoly::var(I.nvars(), i));
    return PolyIdeal(m, I.nvars());
  }
  const auto comps = minimal_primes(I);
  PolyIdeal acc = comps.front().prime;
  for (std::size_t i = 1; i < comps.size(); ++i) acc = intersect(acc, comps[i].prime);
  return acc.reduced();
}

}  // namespace halphen
