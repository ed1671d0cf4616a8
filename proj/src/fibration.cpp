#include "halphen/fibration.hpp"

#include <algorithm>
#include <unordered_map>

#include "halphen/errors.hpp"
#include "halphen/factor.hpp"

namespace halphen {
namespace {

bool is_linear_form(const QMultiPoly& l) { return !l.is_zero() && l.is_homogeneous() && l.degree() == 1; }

// G is singular at P iff grad F(P) is proportional to the coefficients of l.
bool singular_on_G(const CubicSurface& X, const QMultiPoly& l, const ClosedPoint& P) {
  const auto g = P.geometric();
  std::vector<NfElem> v(g.coords.begin(), g.coords.end());
  Matrix<NfElem> M(2, 4);
  for (int i = 0; i < 4; ++i) {
    M(0, static_cast<std::size_t>(i)) = X.gradient()[static_cast<std::size_t>(i)].eval(v);
    M(1, static_cast<std::size_t>(i)) = NfElem(l.coeff(Monomial::var(i)));
  }
  return M.rank() < 2;
}

QPoly rational_poly(const KPoly& p) {
  std::vector<Rational> c;
  for (const auto& v : p.coeffs()) c.push_back(v.rational_value());
  return QPoly(std::move(c));
}

// Root of the degree-1 leading coefficient of G's strict transform.
std::optional<NfElem> strict_transform_meets(const BlowupChart& chart, const QMultiPoly& l) {
  const auto S = chart.pullback(l);
  const auto k = series_order(S);
  if (k >= S.size()) fail("InternalError", "G vanishes to full precision along the exceptional curve");
  const KPoly& c = S[k];
  if (c.degree() == 0) return std::nullopt;
  if (c.degree() != 1) fail("PointOnSingularLocus", "G is singular at an infinitely near point");
  return -(c.coeff(0) / c.coeff(1));
}

LinearSystemOnX impose_along(const LinearSystemOnX& sys, const BlowupChart& chart, unsigned m) {
  return sys.restrict(sys.conditions(chart, m));
}

// Order of the pencil along the exceptional curve of the chart, and the
// leading coefficients there.
struct ChartOrder {
  std::size_t order;
  std::vector<KPoly> lead;
};

ChartOrder chart_order(const BlowupChart& chart, const std::vector<QMultiPoly>& forms) {
  std::vector<ChartSeries> S;
  std::size_t o = chart.precision();
  for (const auto& f : forms) {
    S.push_back(chart.pullback(f));
    o = std::min(o, series_order(S.back()));
  }
  ChartOrder out{o, {}};
  if (o < chart.precision())
    for (const auto& s : S) out.lead.push_back(s[o]);
  return out;
}

void explore_infinitely_near(const BlowupChart& chart, const std::vector<QMultiPoly>& forms, const ClosedPoint& P,
                             std::size_t order, unsigned depth, std::vector<BasePoint>& out) {
  const auto co = chart_order(chart, forms);
  if (co.order >= chart.precision()) return;
  KPoly g;
  for (const auto& c : co.lead) g = gcd(g, c);
  std::vector<Rational> roots;
  if (g.degree() > 0) roots = rational_roots(rational_poly(g));
  for (const auto& s : roots) {
    const auto next = chart.iterate(NfElem(s), NfElem(0));
    const auto no = chart_order(next, forms);
    if (no.order <= order) continue;
    const auto m = static_cast<unsigned>(no.order - order);
    const bool capped = no.order >= next.precision();
    out.push_back(BasePoint{P, 1, m, capped, depth + 1});
    if (!capped) explore_infinitely_near(next, forms, P, no.order, depth + 1, out);
  }
}

std::optional<Fibration> try_degree(const Fibration& fib, const GroebnerBasis& gbF, const QMultiPoly& g1,
                                    const QMultiPoly& g2, unsigned d) {
  const auto& X = fib.surface();
  const auto B = LinearSystemOnX::complete(X, d).sections();
  std::vector<QMultiPoly> cols;
  for (const auto& b : B) cols.push_back(gbF.normal_form(b * g2));
  for (const auto& b : B) cols.push_back(gbF.normal_form(b * g1) * Rational(-1));
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (const auto& p : cols)
    for (const auto& [m, c] : p.terms()) idx.emplace(m, idx.size());
  QMatrix A(idx.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j].terms()) A(idx[m], j) = c;
  for (const auto& v : A.kernel()) {
    const QVector a(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(B.size()));
    const QVector b(v.begin() + static_cast<std::ptrdiff_t>(B.size()), v.end());
    QMultiPoly h1 = combine(a, B), h2 = combine(b, B);
    if (h1.is_zero() || h2.is_zero()) continue;
    try {
      const RationalMap r(X, {h1, h2});
      return Fibration(X, r.equations()[0], r.equations()[1]);
    } catch (const HalphenError&) {
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(HalphenCase c) {
  switch (c) {
    case HalphenCase::A1: return "A1";
    case HalphenCase::A2: return "A2";
    case HalphenCase::A3: return "A3";
    case HalphenCase::B: return "B";
    case HalphenCase::C: return "C";
  }
  return "?";
}

HalphenCase parse_halphen_case(const std::string& s) {
  if (s == "A1") return HalphenCase::A1;
  if (s == "A2") return HalphenCase::A2;
  if (s == "A3") return HalphenCase::A3;
  if (s == "B") return HalphenCase::B;
  if (s == "C") return HalphenCase::C;
  throw ParseError("unknown Halphen case '" + s + "' (expected A1, A2, A3, B or C)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::linear: return "linear";
    case Verdict::halphen_caseC: return "halphen_caseC";
    case Verdict::halphen_with_centres: return "halphen_with_centres";
  }
  return "?";
}

HalphenData validate_halphen_data(const CubicSurface& X, HalphenData data) {
  if (!is_linear_form(data.G)) fail("BadWeights", "G must be given by a linear form");
  data.G = primitive(data.G.with_nvars(4));
  if (data.mu < 1) fail("BadWeights", "the index must be at least 1");
  const auto comps = minimal_primes(PolyIdeal({data.G, X.equation()}));
  if (comps.size() != 1 || comps[0].degree != 3) fail("ReducibleG", "the plane section G is reducible over Q");
  unsigned total = 0;
  for (const auto& wp : data.D) {
    if (wp.weight < 1 || wp.weight > 3) fail("BadWeights", "weights must lie in {1, 2, 3}");
    if (!wp.point.ideal().contains(data.G) || !wp.point.ideal().contains(X.equation()))
      fail("PointNotOnG", "a point of D does not lie on G");
    if (singular_on_G(X, data.G, wp.point)) fail("PointOnSingularLocus", "a point of D is a singular point of G");
    total += wp.weight * static_cast<unsigned>(wp.point.degree());
  }
  if (total != 3) fail("BadWeights", "D must have degree 3");
  for (std::size_t i = 0; i < data.D.size(); ++i)
    for (std::size_t j = i + 1; j < data.D.size(); ++j)
      if (data.D[i].point == data.D[j].point) fail("BadWeights", "points of D must be distinct");
  auto pattern = [&](std::vector<std::pair<int, unsigned>> want) {
    std::vector<std::pair<int, unsigned>> have;
    for (const auto& wp : data.D) have.emplace_back(wp.point.degree(), wp.weight);
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    return have == want;
  };
  bool ok = false;
  switch (data.kind) {
    case HalphenCase::A1: ok = pattern({{1, 1}, {1, 1}, {1, 1}}); break;
    case HalphenCase::A2: ok = pattern({{1, 1}, {1, 2}}); break;
    case HalphenCase::A3: ok = pattern({{1, 3}}); break;
    case HalphenCase::B: ok = pattern({{1, 1}, {2, 1}}); break;
    case HalphenCase::C: ok = pattern({{3, 1}}); break;
  }
  if (!ok) fail("BadWeights", "weights and degrees do not match case " + to_string(data.kind));
  if (data.kind == HalphenCase::A2 && data.D[0].weight != 1) std::swap(data.D[0], data.D[1]);
  return data;
}

LinearSystemOnX halphen_system(const CubicSurface& X, const HalphenData& input) {
  const HalphenData data = validate_halphen_data(X, input);
  const unsigned mu = data.mu;
  auto sys = LinearSystemOnX::complete(X, mu);
  // the chain P, then G's strict transform on each exceptional curve
  auto chain = [&](const ClosedPoint& P, unsigned length) {
    const std::size_t prec = length * mu + 1;
    BlowupChart chart(X, P.geometric(), prec);
    auto s = strict_transform_meets(chart, data.G);
    if (!s) {
      chart = BlowupChart(X, P.geometric(), prec, true);
      s = strict_transform_meets(chart, data.G);
      if (!s) fail("InternalError", "G is tangent to no direction at P");
    }
    sys = impose_along(sys, chart, mu);
    for (unsigned k = 2; k <= length; ++k) {
      chart = chart.iterate(*s, NfElem(0));
      sys = impose_along(sys, chart, k * mu);
      if (k < length) {
        s = strict_transform_meets(chart, data.G);
        if (!s) fail("InternalError", "G meets the exceptional curve outside the chart");
      }
    }
  };
  switch (data.kind) {
    case HalphenCase::A1:
    case HalphenCase::B:
    case HalphenCase::C:
      for (const auto& wp : data.D) sys = impose_basepoint(sys, wp.point, mu);
      break;
    case HalphenCase::A2:
      sys = impose_basepoint(sys, data.D[0].point, mu);
      chain(data.D[1].point, 2);
      break;
    case HalphenCase::A3:
      chain(data.D[0].point, 3);
      break;
  }
  if (sys.size() != 2)
    fail("NotAPencil", "Halphen system has " + std::to_string(sys.size()) +
                           " sections; check the data or try a divisor of the index");
  return sys;
}

Fibration::Fibration(const CubicSurface& X, QMultiPoly f1, QMultiPoly f2)
    : X_(X), f1_(f1.with_nvars(4)), f2_(f2.with_nvars(4)) {
  if (f1_.is_zero() || f2_.is_zero() || !f1_.is_homogeneous() || !f2_.is_homogeneous() || f1_.degree() != f2_.degree() ||
      f1_.degree() < 1)
    fail("DegreeMismatch", "a pencil needs two nonzero forms of one positive degree");
  mu_ = static_cast<unsigned>(f1_.degree());
  if (LinearSystemOnX(X_, mu_, {f1_, f2_}).size() != 2) fail("NotAPencil", "the two forms are dependent modulo F");
}

Fibration Fibration::from_system(const LinearSystemOnX& pencil) {
  if (pencil.size() != 2) fail("NotAPencil", "system does not have two sections");
  return Fibration(pencil.surface(), pencil.sections()[0], pencil.sections()[1]);
}

LinearSystemOnX Fibration::system() const { return LinearSystemOnX(X_, mu_, {f1_, f2_}); }

bool same_fibration(const Fibration& a, const Fibration& b) {
  return divisible_by_surface(a.surface(), a.f1() * b.f2() - a.f2() * b.f1());
}

BaseLocusReport base_locus(const Fibration& fib) {
  BaseLocusReport r;
  const PolyIdeal I({fib.f1(), fib.f2(), fib.surface().equation()});
  const auto comps = minimal_primes(I);
  PolyIdeal J = I;
  for (const auto& c : comps)
    if (c.height == 2) {
      r.removed_curves.push_back(c);
      J = saturation_exponent(J, c.prime).ideal;
    }
  if (r.removed_curves.empty()) {
    for (const auto& c : comps)
      if (c.height == 3) r.potential_basepoints.push_back(c);
  } else if (!J.is_unit()) {
    for (const auto& c : minimal_primes(J))
      if (c.height == 3) r.potential_basepoints.push_back(c);
  }
  return r;
}

BaseLocusReport with_multiplicities(const Fibration& fib, BaseLocusReport report) {
  report.multiplicities.clear();
  const auto sys = fib.system();
  const std::vector<QMultiPoly> forms{fib.f1(), fib.f2()};
  const std::size_t prec = 3 * fib.mu() + 2;
  for (const auto& c : report.potential_basepoints) {
    if (c.degree > 3) continue;
    const ClosedPoint P = ClosedPoint::from_ideal(c.prime);
    const auto m = multiplicity(sys, P, prec);
    report.multiplicities.push_back(BasePoint{P, static_cast<unsigned>(c.degree), m.m, m.lower_bound, 0});
    if (c.degree != 1 || m.lower_bound || m.m == 0) continue;
    for (bool swap : {false, true}) {
      const BlowupChart chart(fib.surface(), P.geometric(), prec, swap);
      if (!swap) {
        explore_infinitely_near(chart, forms, P, m.m, 0, report.multiplicities);
        continue;
      }
      // the point x = 0 of the swapped chart is the one the first chart misses
      const auto co = chart_order(chart, forms);
      if (co.order >= chart.precision()) continue;
      bool all_vanish = std::all_of(co.lead.begin(), co.lead.end(), [](const KPoly& k) { return is_zero(k.coeff(0)); });
      if (!all_vanish) continue;
      const auto next = chart.iterate(NfElem(0), NfElem(0));
      const auto no = chart_order(next, forms);
      if (no.order <= co.order) continue;
      const auto mm = static_cast<unsigned>(no.order - co.order);
      const bool capped = no.order >= next.precision();
      report.multiplicities.push_back(BasePoint{P, 1, mm, capped, 1});
      if (!capped) explore_infinitely_near(next, forms, P, no.order, 1, report.multiplicities);
    }
  }
  return report;
}

std::optional<ClosedPoint> has_maximal_centre(const Fibration& fib) {
  const auto sys = fib.system();
  for (const auto& c : base_locus(fib).potential_basepoints) {
    if (c.degree > 2) continue;
    const ClosedPoint P = ClosedPoint::from_ideal(c.prime);
    if (multiplicity(sys, P).m > fib.mu()) return P;
  }
  return std::nullopt;
}

NfiSums nfi_sums(unsigned mu, const std::vector<BasePoint>& points) {
  NfiSums s;
  s.sum_dm2 = 0;
  s.sum_dm_defect = 0;
  for (const auto& p : points) {
    const Integer d = p.degree, m = p.multiplicity;
    s.sum_dm2 += d * m * m;
    s.sum_dm_defect += Rational(d * m) * (Rational(1) - Rational(m, mu));
  }
  s.sum_dm_defect.canonicalize();
  s.holds = s.sum_dm2 == Integer(3 * mu * mu) && sgn(s.sum_dm_defect) == 0;
  return s;
}

std::optional<Fibration> reduce_pencil(const Fibration& fib, unsigned max_degree) {
  const auto gbF = GroebnerBasis::compute({fib.surface().equation()}, 4);
  const QMultiPoly g1 = gbF.normal_form(fib.f1()), g2 = gbF.normal_form(fib.f2());
  for (unsigned d = 1; d <= max_degree; ++d)
    if (auto r = try_degree(fib, gbF, g1, g2, d)) return r;
  return std::nullopt;
}

UntwistCertificate untwist(const Fibration& fib) {
  UntwistCertificate cert{{}, fib, Verdict::linear, {}, {}, {}};
  Fibration cur = fib;
  for (;;) {
    const unsigned mu = cur.mu();
    if (mu == 1) {
      cert.verdict = Verdict::linear;
      cert.final_base = with_multiplicities(cur, base_locus(cur));
      break;
    }
    auto base = base_locus(cur);
    std::vector<ClosedPoint> centres;
    std::size_t cubic_points = 0;
    for (const auto& c : base.potential_basepoints) {
      if (c.degree <= 2) centres.push_back(ClosedPoint::from_ideal(c.prime));
      if (c.degree == 3) ++cubic_points;
    }
    if (centres.empty()) {
      cert.verdict = Verdict::halphen_caseC;
      if (cubic_points != 1 || base.potential_basepoints.size() != 1)
        cert.warnings.push_back("case C expects a single basepoint of degree 3; found " +
                                std::to_string(base.potential_basepoints.size()) + " potential basepoints");
      cert.final_base = with_multiplicities(cur, std::move(base));
      break;
    }
    const auto sys = cur.system();
    std::optional<ClosedPoint> centre;
    unsigned centre_m = 0;
    for (const auto& P : centres) {
      const auto m = multiplicity(sys, P);
      if (m.m > mu) {
        centre = P;
        centre_m = m.m;
        break;
      }
    }
    if (!centre) {
      cert.verdict = Verdict::halphen_with_centres;
      cert.final_base = with_multiplicities(cur, std::move(base));
      break;
    }
    InvolutionRecord inv = centre->degree() == 1 ? geiser(cur.surface(), *centre) : bertini(cur.surface(), *centre);
    const RationalMap composed = compose(RationalMap(cur.surface(), {cur.f1(), cur.f2()}), inv.map);
    Fibration next(cur.surface(), composed.equations()[0], composed.equations()[1]);
    if (next.mu() >= mu) {
      auto reduced = reduce_pencil(next, mu - 1);
      if (!reduced)
        fail("DegreeNotDecreasing", "composition with the involution did not lower the degree below " +
                                        std::to_string(mu));
      next = *reduced;
    }
    cert.steps.push_back(UntwistStep{std::move(inv), mu, next.mu(), centre_m});
    cur = next;
  }
  cert.final_fibration = cur;
  cert.nfi = nfi_sums(cur.mu(), cert.final_base.multiplicities);
  return cert;
}

}  // namespace halphen
