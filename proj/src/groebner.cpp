#include "halphen/groebner.hpp"

#include <algorithm>
#include <functional>

namespace halphen {
namespace {

using OPoly = GroebnerBasis::OPoly;

struct Ctx {
  int nvars;
  MonomialOrder order;
  int cmp(const Monomial& a, const Monomial& b) const { return order.compare(a, b, nvars); }
};

OPoly to_opoly(const QMultiPoly& p, const Ctx& ctx) {
  std::vector<std::size_t> idx(p.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& t = p.terms();
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return ctx.cmp(t[a].first, t[b].first) > 0; });
  OPoly o;
  o.mons.reserve(idx.size());
  o.coefs.reserve(idx.size());
  for (auto i : idx) {
    o.mons.push_back(t[i].first);
    o.coefs.push_back(t[i].second);
    o.sugar = std::max<unsigned>(o.sugar, t[i].first.deg);
  }
  return o;
}

QMultiPoly from_opoly(const OPoly& o, int nvars) {
  std::vector<QMultiPoly::Term> t;
  t.reserve(o.mons.size());
  for (std::size_t i = 0; i < o.mons.size(); ++i) t.emplace_back(o.mons[i], o.coefs[i]);
  return QMultiPoly(nvars, std::move(t));
}

void make_monic(OPoly& o) {
  if (o.empty() || o.coefs[0] == 1) return;
  const Rational inv = 1 / o.coefs[0];
  for (auto& c : o.coefs) c *= inv;
}

// a - c * m * b, both sorted by the order.
OPoly sub_mul(const OPoly& a, const Rational& c, const Monomial& m, const OPoly& b, const Ctx& ctx,
              std::size_t skip_a = 0) {
  OPoly r;
  r.mons.reserve(a.mons.size() + b.mons.size());
  r.coefs.reserve(a.mons.size() + b.mons.size());
  std::size_t i = skip_a, j = 0;
  while (i < a.mons.size() || j < b.mons.size()) {
    if (j == b.mons.size()) {
      r.mons.push_back(a.mons[i]);
      r.coefs.push_back(a.coefs[i]);
      ++i;
      continue;
    }
    const Monomial mb = b.mons[j] * m;
    const int s = i == a.mons.size() ? -1 : ctx.cmp(a.mons[i], mb);
    if (s > 0) {
      r.mons.push_back(a.mons[i]);
      r.coefs.push_back(a.coefs[i]);
      ++i;
    } else if (s < 0) {
      r.mons.push_back(mb);
      r.coefs.push_back(-c * b.coefs[j]);
      ++j;
    } else {
      Rational v = a.coefs[i] - c * b.coefs[j];
      if (sgn(v) != 0) {
        r.mons.push_back(mb);
        r.coefs.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  r.sugar = std::max(a.sugar, b.sugar + m.deg);
  return r;
}

const OPoly* find_reducer(const Monomial& m, const std::vector<const OPoly*>& basis) {
  for (const OPoly* g : basis)
    if (g->lm().divides(m)) return g;
  return nullptr;
}

// Reduce h by the basis: leading terms only, or every term when `full`.
OPoly reduce(OPoly h, const std::vector<const OPoly*>& basis, const Ctx& ctx, bool full) {
  OPoly done;
  std::size_t pos = 0;
  while (pos < h.mons.size()) {
    const OPoly* g = find_reducer(h.mons[pos], basis);
    if (g) {
      const Monomial m = h.mons[pos] / g->lm();
      const Rational c = h.coefs[pos];  // g monic
      h = sub_mul(h, c, m, *g, ctx, pos);
      pos = 0;
      continue;
    }
    if (!full) {
      done.mons.insert(done.mons.end(), h.mons.begin() + static_cast<long>(pos), h.mons.end());
      done.coefs.insert(done.coefs.end(), h.coefs.begin() + static_cast<long>(pos), h.coefs.end());
      break;
    }
    done.mons.push_back(h.mons[pos]);
    done.coefs.push_back(h.coefs[pos]);
    ++pos;
  }
  done.sugar = h.sugar;
  return done;
}

OPoly spoly(const OPoly& f, const OPoly& g, const Ctx& ctx) {
  const Monomial L = lcm(f.lm(), g.lm());
  const Monomial mf = L / f.lm(), mg = L / g.lm();
  OPoly a;
  a.mons.reserve(f.mons.size() - 1);
  for (std::size_t i = 1; i < f.mons.size(); ++i) {
    a.mons.push_back(f.mons[i] * mf);
    a.coefs.push_back(f.coefs[i]);
  }
  a.sugar = f.sugar + mf.deg;
  OPoly gt;
  gt.mons.assign(g.mons.begin() + 1, g.mons.end());
  gt.coefs.assign(g.coefs.begin() + 1, g.coefs.end());
  gt.sugar = g.sugar;
  return sub_mul(a, Rational(1), mg, gt, ctx);
}

// Tail-reduce a minimal basis; result sorted by increasing leading monomial.
std::vector<OPoly> interreduce(std::vector<OPoly> min, const Ctx& ctx) {
  std::sort(min.begin(), min.end(),
            [&](const OPoly& a, const OPoly& b) { return ctx.cmp(a.lm(), b.lm()) < 0; });
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<const OPoly*> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(&min[j]);
    OPoly r = reduce(min[i], others, ctx, true);
    make_monic(r);
    min[i] = std::move(r);
  }
  return min;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(const std::vector<QMultiPoly>& generators, int nvars,
                                     MonomialOrder order) {
  const Ctx ctx{nvars, order};
  GroebnerBasis gb;
  gb.nvars_ = nvars;
  gb.order_ = order;

  std::vector<OPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto pair_of = [&](std::size_t i, std::size_t j) {
    const Monomial L = lcm(polys[i].lm(), polys[j].lm());
    const unsigned s = std::max(polys[i].sugar + (L.deg - polys[i].lm().deg),
                                polys[j].sugar + (L.deg - polys[j].lm().deg));
    return Pair{i, j, L, s};
  };

  // Gebauer-Möller update with new element index h.
  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].lm();
    std::vector<Pair> C, D;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) C.push_back(pair_of(g, h));
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(polys[p.i].lm(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool drop = lh.divides(p.lcm) && lcm(polys[p.i].lm(), lh) != p.lcm &&
                        lcm(polys[p.j].lm(), lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& p : D)
      if (!coprime(polys[p.i].lm(), lh)) next.push_back(p);
    pairs = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(polys[g].lm())) active[g] = false;
    active[h] = true;
  };

  auto active_basis = [&] {
    std::vector<const OPoly*> b;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) b.push_back(&polys[i]);
    return b;
  };

  // Inter-reduced input, smallest leading monomials first.
  std::vector<OPoly> input;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    OPoly o = to_opoly(g, ctx);
    make_monic(o);
    input.push_back(std::move(o));
  }
  std::sort(input.begin(), input.end(),
            [&](const OPoly& a, const OPoly& b) { return ctx.cmp(a.lm(), b.lm()) < 0; });
  for (auto& o : input) {
    OPoly r = reduce(o, active_basis(), ctx, false);
    if (r.empty()) continue;
    make_monic(r);
    polys.push_back(std::move(r));
    active.push_back(false);
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& p = pairs[k];
      const auto& q = pairs[best];
      if (p.sugar < q.sugar || (p.sugar == q.sugar && ctx.cmp(p.lcm, q.lcm) < 0)) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    OPoly s = spoly(polys[p.i], polys[p.j], ctx);
    s.sugar = std::max(s.sugar, p.sugar);
    OPoly r = reduce(std::move(s), active_basis(), ctx, false);
    if (r.empty()) continue;
    make_monic(r);
    polys.push_back(std::move(r));
    active.push_back(false);
    update(polys.size() - 1);
  }

  std::vector<OPoly> min;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) min.push_back(polys[i]);
  gb.basis_ = interreduce(std::move(min), ctx);
  return gb;
}

GroebnerBasis GroebnerBasis::from_basis(const std::vector<QMultiPoly>& basis, int nvars,
                                        MonomialOrder order) {
  const Ctx ctx{nvars, order};
  GroebnerBasis gb;
  gb.nvars_ = nvars;
  gb.order_ = order;
  std::vector<OPoly> ps;
  for (const auto& p : basis) {
    if (p.is_zero()) continue;
    OPoly o = to_opoly(p, ctx);
    make_monic(o);
    ps.push_back(std::move(o));
  }
  std::sort(ps.begin(), ps.end(),
            [&](const OPoly& a, const OPoly& b) { return ctx.cmp(a.lm(), b.lm()) < 0; });
  std::vector<OPoly> min;
  for (auto& o : ps) {
    bool redundant = false;
    for (const auto& m : min)
      if (m.lm().divides(o.lm())) redundant = true;
    if (!redundant) min.push_back(std::move(o));
  }
  gb.basis_ = interreduce(std::move(min), ctx);
  return gb;
}

std::vector<QMultiPoly> GroebnerBasis::polys() const {
  std::vector<QMultiPoly> out;
  out.reserve(basis_.size());
  for (const auto& o : basis_) out.push_back(from_opoly(o, nvars_));
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& o : basis_) out.push_back(o.lm());
  return out;
}

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_[0].lm().deg == 0;
}

QMultiPoly GroebnerBasis::normal_form(const QMultiPoly& f) const {
  if (f.is_zero()) return f;
  const Ctx ctx{nvars_, order_};
  std::vector<const OPoly*> b;
  for (const auto& o : basis_) b.push_back(&o);
  return from_opoly(reduce(to_opoly(f, ctx), b, ctx, true), f.nvars());
}

// ---------------------------------------------------------------------------

namespace {

using HPoly = std::vector<Integer>;

HPoly hsub(HPoly a, const HPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

HPoly shift(const HPoly& a, unsigned d) {
  HPoly r(d, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

HPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // Pure powers of distinct variables: product formula.
  bool simple = true;
  for (const auto& m : gens) {
    int nz = 0;
    for (int i = 0; i < nvars; ++i) nz += m[i] != 0;
    if (nz > 1) {
      simple = false;
      break;
    }
  }
  if (simple) {
    HPoly r{1};
    for (const auto& m : gens) r = hsub(r, shift(r, m.deg));
    return r;
  }
  // Pivot on the variable occurring in most non-pure generators.
  int best = 0, count = -1;
  for (int v = 0; v < nvars; ++v) {
    int c = 0;
    for (const auto& m : gens) {
      int nz = 0;
      for (int i = 0; i < nvars; ++i) nz += m[i] != 0;
      c += nz > 1 && m[v] != 0;
    }
    if (c > count) {
      count = c;
      best = v;
    }
  }
  const Monomial p = Monomial::var(best);
  // N(M) = N(M + <p>) + T * N(M : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> quot;
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.e[static_cast<std::size_t>(best)] > 0) {
      q.e[static_cast<std::size_t>(best)] -= 1;
      q.deg -= 1;
    }
    quot.push_back(q);
  }
  HPoly a = numerator_rec(std::move(plus), nvars);
  HPoly b = shift(numerator_rec(std::move(quot), nvars), 1);
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& generators, int nvars) {
  HPoly r = numerator_rec(generators, nvars);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace halphen
