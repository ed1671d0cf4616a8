#include "halphen/birational.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "halphen/errors.hpp"
#include "halphen/factor.hpp"
#include "halphen/mfactor.hpp"

namespace halphen {
namespace {

int max_samples() {
  if (const char* env = std::getenv("HALPHEN_MAX_SAMPLES")) return std::max(1, std::atoi(env));
  return 200;
}

// Scale a tuple to integer coefficients, content 1, first leading
// coefficient positive.
void normalize_tuple(std::vector<QMultiPoly>& eqs) {
  Integer num = 0, den = 1;
  for (const auto& e : eqs)
    for (const auto& [m, c] : e.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
  if (num == 0) return;
  Rational s(den, num);
  s.canonicalize();
  for (const auto& e : eqs)
    if (!e.is_zero()) {
      if (sgn(e.lead().second) < 0) s = -s;
      break;
    }
  for (auto& e : eqs) e = e * s;
}

// Small-height rationals: 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
const std::vector<Rational>& small_rationals() {
  static const std::vector<Rational> list = [] {
    std::vector<Rational> out{0};
    auto push = [&](long p, long q) {
      if (std::gcd(p, q) != 1) return;
      out.emplace_back(p, q);
      out.back().canonicalize();
      out.push_back(-out.back());
    };
    for (long h = 1; out.size() < 64; ++h) {
      push(h, 1);
      if (h > 1) push(1, h);
      for (long q = 2; q < h; ++q) {
        push(h, q);
        push(q, h);
      }
    }
    return out;
  }();
  return list;
}

// Tuples over small_rationals() enumerated shell by shell (by largest index).
class Schedule {
public:
  explicit Schedule(std::size_t dim) : dim_(dim), idx_(dim, 0) {}

  std::vector<Rational> next() {
    const auto& h = small_rationals();
    for (;;) {
      advance();
      if (*std::max_element(idx_.begin(), idx_.end()) != shell_) continue;
      std::vector<Rational> v;
      for (auto i : idx_) v.push_back(h[i % h.size()]);
      return v;
    }
  }

private:
  void advance() {
    if (first_) {
      first_ = false;
      shell_ = 1;
      return;
    }
    for (std::size_t k = dim_; k-- > 0;) {
      if (idx_[k] < shell_) {
        ++idx_[k];
        return;
      }
      idx_[k] = 0;
    }
    ++shell_;
  }

  std::size_t dim_;
  std::vector<std::size_t> idx_;
  std::size_t shell_ = 0;
  bool first_ = true;
};

using QPoint = std::array<Rational, 4>;

struct Sample {
  FieldPtr field;
  std::array<NfElem, 4> src, dst;
};

std::array<NfElem, 4> along(const QPoint& base, const QPoint& dir, const NfElem& lambda) {
  std::array<NfElem, 4> p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = NfElem(base[i]) + lambda * NfElem(dir[i]);
  return p;
}

bool proportional(const QPoint& a, const QPoint& b) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

// The two residual points of X on the line base + λ dir (base on X), as
// pairs (Q1 -> Q2) swapped by the involution.  Empty if degenerate.
std::vector<Sample> residual_pair(const QMultiPoly& F, const QPoint& base, const QPoint& dir) {
  if (proportional(base, dir)) return {};
  std::vector<QMultiPoly> sub;
  const QMultiPoly L = QMultiPoly::var(1, 0);
  for (std::size_t i = 0; i < 4; ++i) sub.push_back(QMultiPoly(1, base[i]) + L * dir[i]);
  const QMultiPoly r = F.substitute(sub);
  std::array<Rational, 4> c{};
  for (const auto& [m, v] : r.terms()) c[m[0]] = v;
  if (sgn(c[0]) != 0) fail("InternalError", "sampling base point is not on X");
  if (sgn(c[3]) == 0 || sgn(c[1]) == 0) return {};
  const Rational disc = c[2] * c[2] - 4 * c[3] * c[1];
  if (sgn(disc) == 0) return {};
  const QPoly q(std::vector<Rational>{c[1], c[2], c[3]});
  const auto roots = rational_roots(q);
  if (roots.size() == 2) {
    const auto p1 = along(base, dir, NfElem(roots[0]));
    const auto p2 = along(base, dir, NfElem(roots[1]));
    return {Sample{nullptr, p1, p2}, Sample{nullptr, p2, p1}};
  }
  const FieldPtr K = NumberField::create(q);
  const NfElem w = NfElem::generator(K);
  const NfElem wbar = NfElem(-c[2] / c[3]) - w;
  return {Sample{K, along(base, dir, w), along(base, dir, wbar)}};
}

// Interpolates tau (4x4) with tau * j(src) ∥ dst over all samples.
class TauSolver {
public:
  explicit TauSolver(std::vector<QMultiPoly> sections) : sections_(std::move(sections)) { rows_.unknowns = 16; }

  // Adds the sample; returns false if its source lies in the base locus.
  bool add(const Sample& s) {
    std::vector<NfElem> p(s.src.begin(), s.src.end());
    std::array<NfElem, 4> u;
    bool nonzero = false;
    for (std::size_t c = 0; c < 4; ++c) {
      u[c] = sections_[c].eval(p);
      nonzero = nonzero || !is_zero(u[c]);
    }
    if (!nonzero) return false;
    const int e = s.field ? s.field->degree() : 1;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = a + 1; b < 4; ++b) {
        std::vector<NfElem> row(16, NfElem(0));
        for (std::size_t c = 0; c < 4; ++c) {
          row[a * 4 + c] = u[c] * s.dst[b];
          row[b * 4 + c] = -(u[c] * s.dst[a]);
        }
        for (auto& r : split_conditions(row, e)) rows_.add(std::move(r));
      }
    ++count_;
    return true;
  }

  std::size_t count() const { return count_; }
  std::vector<QVector> kernel() const { return rows_.matrix().kernel(); }

private:
  std::vector<QMultiPoly> sections_;
  LinearConditionSet rows_;
  std::size_t count_ = 0;
};

// Needs at least five samples and a one-dimensional solution space.
bool try_finish(const TauSolver& solver, std::vector<QMultiPoly>& out, const std::vector<QMultiPoly>& sections) {
  if (solver.count() < 5) return false;
  const auto ker = solver.kernel();
  if (ker.empty()) fail("InterpolationDegenerate", "samples admit no projective matrix");
  if (ker.size() > 1) return false;
  out.clear();
  for (std::size_t a = 0; a < 4; ++a) {
    QMultiPoly e(4);
    for (std::size_t c = 0; c < 4; ++c) e += sections[c] * ker[0][a * 4 + c];
    out.push_back(std::move(e));
  }
  return true;
}

const GroebnerBasis& surface_basis(const CubicSurface& X, GroebnerBasis& storage) {
  storage = GroebnerBasis::from_basis({X.equation()}, 4);
  return storage;
}

QMultiPoly power_product(const std::vector<std::vector<QMultiPoly>>& pw, const Monomial& m, std::size_t n) {
  QMultiPoly acc;
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned e = m[static_cast<int>(j)];
    if (e == 0) continue;
    acc = first ? pw[j][e] : acc * pw[j][e];
    first = false;
  }
  return first ? QMultiPoly(pw[0][0].nvars(), Rational(1)) : acc;
}

std::vector<std::vector<QMultiPoly>> powers_of(const std::vector<QMultiPoly>& g, unsigned maxe) {
  std::vector<std::vector<QMultiPoly>> pw(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    pw[j].emplace_back(g[j].nvars(), Rational(1));
    for (unsigned e = 1; e <= maxe; ++e) pw[j].push_back(pw[j].back() * g[j]);
  }
  return pw;
}

}  // namespace

bool divisible_by_surface(const CubicSurface& X, const QMultiPoly& p) {
  QMultiPoly q;
  return p.is_zero() || p.with_nvars(4).divide_exact(X.equation(), q);
}

RationalMap::RationalMap(const CubicSurface& X, std::vector<QMultiPoly> equations) : X_(X) {
  degree_ = -1;
  for (auto& e : equations) {
    e = e.with_nvars(4);
    if (e.is_zero()) continue;
    if (!e.is_homogeneous() || (degree_ >= 0 && e.degree() != degree_))
      fail("DegreeMismatch", "map equations must be forms of one degree");
    degree_ = e.degree();
  }
  if (degree_ < 0 || std::all_of(equations.begin(), equations.end(),
                                 [&](const QMultiPoly& e) { return divisible_by_surface(X, e); }))
    fail("ZeroMap", "all equations vanish on X");
  QMultiPoly g;
  for (const auto& e : equations) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? primitive(e) : poly_gcd(g, e);
    if (g.degree() == 0) break;
  }
  if (g.degree() > 0) {
    for (auto& e : equations) {
      QMultiPoly q(4);
      if (!e.is_zero() && !e.divide_exact(g, q)) fail("InternalError", "gcd does not divide an equation");
      e = e.is_zero() ? e : q.with_nvars(4);
    }
    degree_ -= g.degree();
  }
  normalize_tuple(equations);
  eqs_ = std::move(equations);
}

RationalMap RationalMap::identity(const CubicSurface& X) {
  return RationalMap(X, {qvar(kX), qvar(kY), qvar(kZ), qvar(kT)});
}

std::vector<QMultiPoly> compose_equations_serial(const std::vector<QMultiPoly>& f, const std::vector<QMultiPoly>& g) {
  std::vector<QMultiPoly> out;
  for (const auto& e : f) out.push_back(e.substitute(g));
  return out;
}

std::vector<QMultiPoly> compose_equations_parallel(const std::vector<QMultiPoly>& f, const std::vector<QMultiPoly>& g) {
  unsigned maxe = 0;
  for (const auto& e : f)
    for (const auto& [m, c] : e.terms())
      for (std::size_t j = 0; j < g.size(); ++j) maxe = std::max(maxe, m[static_cast<int>(j)]);
  std::vector<std::vector<QMultiPoly>> pw(g.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < g.size(); ++j) pw[j] = powers_of({g[j]}, maxe)[0];

  // one work item per term of f; per-thread partial sums merged at the end
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < f[i].terms().size(); ++k) work.emplace_back(i, k);
  const int n = g.empty() ? f.front().nvars() : g.front().nvars();
  const int nthreads = omp_get_max_threads();
  std::vector<std::vector<QMultiPoly>> partial(static_cast<std::size_t>(nthreads),
                                               std::vector<QMultiPoly>(f.size(), QMultiPoly(n)));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t w = 0; w < work.size(); ++w) {
    const auto [i, k] = work[w];
    const auto& [m, c] = f[i].terms()[k];
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())][i];
    acc += power_product(pw, m, g.size()) * c;
  }
  std::vector<QMultiPoly> out(f.size(), QMultiPoly(n));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (const auto& p : partial) out[i] += p[i];
  return out;
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
  if (g.size() != 4) fail("ShapeMismatch", "inner map must land in P^3");
  return RationalMap(g.surface(), compose_equations_parallel(f.equations(), g.equations()));
}

bool maps_equal_on_X(const RationalMap& f, const RationalMap& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!divisible_by_surface(f.surface(), f.equations()[i] * g.equations()[j] - f.equations()[j] * g.equations()[i]))
        return false;
  return true;
}

std::string to_string(InvolutionKind k) { return k == InvolutionKind::geiser ? "geiser" : "bertini"; }

InvolutionRecord geiser(const CubicSurface& X, const ClosedPoint& P) {
  if (P.degree() != 1) fail("UnsupportedDegree", "Geiser involutions need a rational centre");
  const auto sys = impose_basepoint(LinearSystemOnX::complete(X, 2), P, 3);
  if (sys.size() != 4)
    fail("DimensionMismatch", "|2A - 3P| has " + std::to_string(sys.size()) + " sections, expected 4");
  const QPoint p = P.rational_coords();
  TauSolver solver(sys.sections());
  Schedule dirs(4);
  std::vector<QMultiPoly> eqs;
  bool done = false;
  for (int attempt = 0; attempt < max_samples() && !done; ++attempt) {
    const auto d = dirs.next();
    for (const auto& s : residual_pair(X.equation(), p, {d[0], d[1], d[2], d[3]})) solver.add(s);
    done = try_finish(solver, eqs, sys.sections());
  }
  if (!done) fail("InterpolationDegenerate", "sampling did not determine the Geiser involution");
  RationalMap map(X, eqs);
  const bool bireg = is_eckardt(X, P);
  return {InvolutionKind::geiser, P, std::move(map), bireg, solver.count()};
}

InvolutionRecord bertini(const CubicSurface& X, const ClosedPoint& Q) {
  if (Q.degree() != 2) fail("UnsupportedDegree", "Bertini involutions need a centre of degree 2");
  const auto sys = impose_basepoint(LinearSystemOnX::complete(X, 5), Q, 6);
  if (sys.size() == 5)
    fail("NonMinimalConfiguration", "|5A - 6Q| has 5 sections: X is not minimal along Q");
  if (sys.size() != 4)
    fail("DimensionMismatch", "|5A - 6Q| has " + std::to_string(sys.size()) + " sections, expected 4");
  const auto lr = line_and_residual(X, Q);
  QMatrix lm(0, 4);
  for (const auto& l : lr.line) {
    QVector row(4);
    for (int i = 0; i < 4; ++i) row[static_cast<std::size_t>(i)] = l.coeff(Monomial::var(i));
    lm.append_row(row);
  }
  const auto span = lm.kernel();
  const QPoint r = lr.residual.rational_coords();
  std::vector<Rational> rv(r.begin(), r.end());
  QPoint grad;
  for (std::size_t i = 0; i < 4; ++i) grad[i] = X.gradient()[i].eval(rv);
  auto dot = [](const QPoint& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += a[i] * b[i];
    return s;
  };

  TauSolver solver(sys.sections());
  Schedule planes(4), lines(3);
  std::vector<QMultiPoly> eqs;
  bool done = false;
  int attempts = 0;
  while (attempts < max_samples() && !done) {
    // plane through the line: span(u1, u2, w)
    const auto wv = planes.next();
    const std::vector<std::vector<Rational>> basis{span[0], span[1], wv};
    QMatrix B(0, 4);
    for (const auto& b : basis) B.append_row(b);
    if (B.rank() < 3) continue;
    ++attempts;
    // tangent line of E = X ∩ Π at R: direction d with grad(R)·d = 0
    QMatrix g(0, 3);
    g.append_row({dot(grad, basis[0]), dot(grad, basis[1]), dot(grad, basis[2])});
    if (g.rank() == 0) continue;  // Π is the tangent plane at R
    QPoint d{};
    bool found = false;
    for (const auto& k : g.kernel()) {
      QPoint cand{};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t b = 0; b < 3; ++b) cand[i] += k[b] * basis[b][i];
      if (!proportional(cand, r)) {
        d = cand;
        found = true;
        break;
      }
    }
    if (!found) continue;
    // F(R + λd) = B λ^2 + A λ^3; the third point O' of the tangent line
    std::vector<QMultiPoly> sub;
    const QMultiPoly L = QMultiPoly::var(1, 0);
    for (std::size_t i = 0; i < 4; ++i) sub.push_back(QMultiPoly(1, r[i]) + L * d[i]);
    const QMultiPoly cub = X.equation().substitute(sub);
    const Rational A = cub.coeff(Monomial::var(0, 3)), Bc = cub.coeff(Monomial::var(0, 2));
    if (sgn(A) == 0 && sgn(Bc) == 0) continue;  // tangent line on X
    QPoint o;
    for (std::size_t i = 0; i < 4; ++i) o[i] = sgn(A) == 0 ? d[i] : A * r[i] - Bc * d[i];
    // lines through O' in Π: pairs with Q1 + Q2 ~ 2R, i.e. Q2 = -Q1 with origin R
    for (int k = 0; k < 3 && attempts < max_samples() && !done; ++k, ++attempts) {
      const auto c = lines.next();
      QPoint e{};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t b = 0; b < 3; ++b) e[i] += c[b] * basis[b][i];
      for (const auto& s : residual_pair(X.equation(), o, e)) solver.add(s);
      done = try_finish(solver, eqs, sys.sections());
    }
  }
  if (!done) fail("InterpolationDegenerate", "sampling did not determine the Bertini involution");
  RationalMap map(X, eqs);
  return {InvolutionKind::bertini, Q, std::move(map), false, solver.count()};
}

PolyIdeal image_variety(const RationalMap& f, int max_degree) {
  return image_variety(f, PolyIdeal({f.surface().equation()}), max_degree);
}

PolyIdeal image_variety(const RationalMap& f, const PolyIdeal& source, int max_degree) {
  const int n = static_cast<int>(f.size());
  if (n > static_cast<int>(kMaxVars)) fail("UnsupportedDimension", "target space too large");
  const GroebnerBasis& gb = source.groebner();
  const auto pw = powers_of(f.equations(), static_cast<unsigned>(max_degree));
  std::vector<QMultiPoly> gens;
  for (int k = 1; k <= max_degree; ++k) {
    const auto mons = monomials_of_degree(n, static_cast<unsigned>(k));
    // normal forms of the pulled-back monomials; their relations are the
    // degree-k forms vanishing on the image
    std::vector<QMultiPoly> nfs(mons.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < mons.size(); ++i) nfs[i] = gb.normal_form(power_product(pw, mons[i], pw.size()));
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (const auto& p : nfs)
      for (const auto& [m, c] : p.terms()) idx.emplace(m, idx.size());
    QMatrix A(idx.size(), mons.size());
    for (std::size_t j = 0; j < nfs.size(); ++j)
      for (const auto& [m, c] : nfs[j].terms()) A(idx[m], j) = c;
    std::vector<QMultiPoly> found;
    for (const auto& v : A.kernel()) {
      QMultiPoly p(n);
      for (std::size_t j = 0; j < v.size(); ++j) p += QMultiPoly::monomial(n, mons[j], v[j]);
      found.push_back(p);
    }
    // drop what the lower-degree generators already give
    std::vector<QMultiPoly> lower;
    for (const auto& g : gens)
      for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(k - g.degree()))) lower.push_back(g.mul_term(m, 1));
    std::vector<QMultiPoly> all = lower;
    all.insert(all.end(), found.begin(), found.end());
    std::unordered_map<Monomial, std::size_t, MonomialHash> id2;
    for (const auto& p : all)
      for (const auto& [m, c] : p.terms()) id2.emplace(m, id2.size());
    QMatrix M(id2.size(), all.size());
    for (std::size_t j = 0; j < all.size(); ++j)
      for (const auto& [m, c] : all[j].terms()) M(id2[m], j) = c;
    for (auto c : M.rref())
      if (c >= lower.size()) gens.push_back(primitive(all[c]));
  }
  return PolyIdeal(gens, n);
}

PolyIdeal image_variety_elimination(const RationalMap& f, int degree_cap) {
  if (f.degree() > degree_cap)
    fail("EliminationOverflow", "map degree " + std::to_string(f.degree()) + " exceeds the elimination cap");
  const int n = static_cast<int>(f.size());
  const int nv = 5 + n;
  if (nv > static_cast<int>(kMaxVars)) fail("UnsupportedDimension", "target space too large");
  std::vector<QMultiPoly> gens{f.surface().equation().with_nvars(nv)};
  const QMultiPoly s = QMultiPoly::var(nv, 4);
  for (int i = 0; i < n; ++i)
    gens.push_back(QMultiPoly::var(nv, 5 + i) - s * f.equations()[static_cast<std::size_t>(i)].with_nvars(nv));
  const PolyIdeal E = eliminate(PolyIdeal(gens, nv), {0, 1, 2, 3, 4});
  std::vector<QMultiPoly> out;
  std::vector<QMultiPoly> sub(static_cast<std::size_t>(nv), QMultiPoly(n));
  for (int i = 0; i < n; ++i) sub[static_cast<std::size_t>(5 + i)] = QMultiPoly::var(n, i);
  for (const auto& g : E.generators()) out.push_back(g.substitute(sub));
  return PolyIdeal(out, n).reduced();
}

std::vector<QVector> match_coordinates(const RationalMap& f, const std::vector<QMultiPoly>& target) {
  const std::size_t n = f.size();
  if (target.size() != n) fail("ShapeMismatch", "target has a different number of coordinates");
  GroebnerBasis storage;
  const auto& gb = surface_basis(f.surface(), storage);
  // nf[k][j] = NF(e_k t_j)
  std::vector<std::vector<QMultiPoly>> nf(n, std::vector<QMultiPoly>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) nf[k][j] = gb.normal_form(f.equations()[k] * target[j].with_nvars(4));
  // unknown C_ik at i * n + k; condition per pair (i, j) and monomial
  LinearConditionSet rows;
  rows.unknowns = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::unordered_map<Monomial, QVector, MonomialHash> byMon;
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [m, c] : nf[k][j].terms()) {
          auto& row = byMon.try_emplace(m, QVector(n * n)).first->second;
          row[i * n + k] += c;
        }
        for (const auto& [m, c] : nf[k][i].terms()) {
          auto& row = byMon.try_emplace(m, QVector(n * n)).first->second;
          row[j * n + k] -= c;
        }
      }
      for (auto& [m, row] : byMon) rows.add(std::move(row));
    }
  const auto ker = rows.matrix().kernel();
  for (const auto& v : ker) {
    QMatrix C(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) C(i, k) = v[i * n + k];
    if (C.rank() != n) continue;
    std::vector<QVector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(C.row(i));
    return out;
  }
  return {};
}

}  // namespace halphen
