#include <random>

#include "doctest.h"
#include "halphen/factor.hpp"
#include "halphen/linalg.hpp"
#include "halphen/parse.hpp"
#include "halphen/series.hpp"

using namespace halphen;

namespace {

using RF = RationalFunction<Rational>;
using RFPoly = MultiPoly<RF>;

QPoly qp(std::vector<long> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return QPoly(v);
}

// g(y, z) over Q(x) from a polynomial over Q in variables (y, z).
RFPoly lift(const char* text) {
  auto p = parse_poly(text, {"y", "z"});
  return p.map_coeffs([](const Rational& c) { return RF(c); });
}

// Residual g(Y(z), z) computed independently by plain truncated arithmetic.
std::vector<RF> residual(const RFPoly& g, const TruncatedSeries<RF>& Y) {
  const std::size_t n = Y.precision();
  std::vector<RF> acc(n, RF(0));
  for (const auto& [m, c] : g.terms()) {
    std::vector<RF> term(n, RF(0));
    if (m[1] < n) term[m[1]] = c;
    for (unsigned a = 0; a < m[0]; ++a) term = series_mul(term, Y.coeffs, n);
    for (std::size_t i = 0; i < n; ++i) acc[i] += term[i];
  }
  return acc;
}

// Coefficients of (-1 + sqrt(1 + 4z))/2 via the binomial series; this is the
// root of y^2 + y - z vanishing at 0.
std::vector<Rational> sqrt_root_oracle(std::size_t n) {
  std::vector<Rational> out(n);
  Rational binom = 1;  // binomial(1/2, k)
  Rational four_pow = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      binom *= (Rational(1, 2) - Rational(static_cast<long>(k) - 1)) / Rational(static_cast<long>(k));
      four_pow *= 4;
    }
    out[k] = binom * four_pow / 2;
  }
  out[0] = 0;
  return out;
}

}  // namespace

TEST_CASE("series_root examples") {
  SUBCASE("exact linear root") {
    auto Y = series_root(lift("y - z"), 4);
    CHECK(Y.precision() == 4);
    CHECK(Y[0] == RF(0));
    CHECK(Y[1] == RF(1));
    CHECK(Y[2] == RF(0));
    CHECK(Y[3] == RF(0));
  }
  SUBCASE("y^2 + y - z matches binomial series") {
    auto Y = series_root(lift("y^2 + y - z"), 4);
    CHECK(Y[1] == RF(1));
    CHECK(Y[2] == RF(-1));
    CHECK(Y[3] == RF(2));
    auto oracle = sqrt_root_oracle(4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(Y[i] == RF(oracle[i]));
  }
  SUBCASE("truncation below first nonzero term") {
    auto Y = series_root(lift("y - z^2"), 1);
    CHECK(Y.precision() == 1);
    CHECK(Y[0] == RF(0));
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(series_root(lift("y - z + 1"), 3), doctest::Contains("NotVanishing"),
                         HalphenError);
    CHECK_THROWS_WITH_AS(series_root(lift("y^2 - z"), 3), doctest::Contains("SingularAtOrigin"),
                         HalphenError);
  }
}

TEST_CASE("series_root over Q(x): residual vanishes and precision extends consistently") {
  // g = (1 + x) y + x z + y^2 z - x y z^2 + z^3: genuinely rational coefficients.
  const RF x = RF::x();
  RFPoly g(2);
  auto y = RFPoly::var(2, 0), z = RFPoly::var(2, 1);
  g = y * (RF(1) + x) + z * x + y * y * z - y * z * z * x + z * z * z;
  for (std::size_t n : {4u, 8u, 16u}) {
    auto Y = series_root(g, n);
    for (const auto& c : residual(g, Y)) CHECK(is_zero(c));
    auto Y5 = series_root(g, n + 5);
    for (std::size_t i = 0; i < n; ++i) CHECK(Y[i] == Y5[i]);
  }
  auto Y = series_root(g, 3);
  CHECK(!Y[1].is_polynomial());  // -x/(1+x)
}

TEST_CASE("univariate_factor") {
  SUBCASE("x^2 - 1") {
    auto f = factor(qp({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].factor == qp({-1, 1}));
    CHECK(f[1].factor == qp({1, 1}));
  }
  SUBCASE("irreducible quadratic") {
    auto f = factor(qp({-1, 1, 1}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].multiplicity == 1);
  }
  SUBCASE("8w^2 + 117w + 135 is irreducible") {
    auto f = factor(qp({135, 117, 8}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].factor == QPoly({Rational(135, 8), Rational(117, 8), Rational(1)}));
  }
  SUBCASE("zero polynomial") { CHECK_THROWS_AS(factor(QPoly()), HalphenError); }
  SUBCASE("Swinnerton-Dyer style x^4 - 10x^2 + 1 stays irreducible") {
    CHECK(is_irreducible(qp({1, 0, -10, 0, 1})));
  }
  SUBCASE("products reconstruct the input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
      QPoly p(Rational(1));
      const int nf = 1 + trial % 4;
      for (int k = 0; k < nf; ++k) {
        std::vector<long> c;
        const int d = 1 + (trial + k) % 3;
        for (int i = 0; i < d; ++i) c.push_back(coef(rng));
        c.push_back(1 + (trial + k) % 2);
        QPoly f = qp(c);
        p = p * f;
        if (k == 0 && trial % 3 == 0) p = p * f;
      }
      auto fs = factor(p);
      QPoly prod(Rational(1));
      for (const auto& f : fs) {
        CHECK(f.factor.lead() == Rational(1));
        for (int m = 0; m < f.multiplicity; ++m) prod = prod * f.factor;
      }
      CHECK(prod == p.monic());
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK(!(fs[i].factor == fs[j].factor));
    }
  }
  SUBCASE("rational roots") {
    auto r = rational_roots(qp({-6, 11, -6, 1}) * qp({1, 0, 1}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == 1);
    CHECK(r[2] == 3);
  }
}

TEST_CASE("number field arithmetic") {
  auto K = NumberField::create(qp({-2, 0, 1}));
  auto w = NfElem::generator(K);
  CHECK(w * w == NfElem(2));
  auto a = NfElem(3) + w;
  CHECK(a * a.inverse() == NfElem(1));
  CHECK(a.conjugate() == NfElem(3) - w);
  CHECK_THROWS_AS(NumberField::create(qp({-1, 0, 1})), HalphenError);
}

TEST_CASE("split_conditions") {
  SUBCASE("Q[w]/(w^2+1): a1 + w a2") {
    auto K = NumberField::create(qp({1, 0, 1}));
    auto w = NfElem::generator(K);
    auto rows = split_conditions({NfElem(1), w}, 2);
    CHECK(rows[0] == QVector{1, 0});
    CHECK(rows[1] == QVector{0, 1});
  }
  SUBCASE("Q[w]/(w^2-2): (1+w) a1") {
    auto K = NumberField::create(qp({-2, 0, 1}));
    auto rows = split_conditions({NfElem(1) + NfElem::generator(K)}, 2);
    CHECK(rows[0] == QVector{1});
    CHECK(rows[1] == QVector{1});
  }
  SUBCASE("Q[w]/(w^3-2): w a1 + a2 + w^2 a3") {
    auto K = NumberField::create(qp({-2, 0, 0, 1}));
    auto w = NfElem::generator(K);
    auto rows = split_conditions({w, NfElem(1), w * w}, 3);
    CHECK(rows[0] == QVector{0, 1, 0});
    CHECK(rows[1] == QVector{1, 0, 0});
    CHECK(rows[2] == QVector{0, 0, 1});
  }
  SUBCASE("recombination with the power basis reproduces the row") {
    auto K = NumberField::create(qp({-2, 0, 0, 1}));
    auto w = NfElem::generator(K);
    std::vector<NfElem> row{w * w + NfElem(3), NfElem(Rational(1, 2)) - w, NfElem(0)};
    auto rows = split_conditions(row, 3);
    for (std::size_t j = 0; j < row.size(); ++j) {
      NfElem acc(0), wp(1);
      for (int k = 0; k < 3; ++k) {
        acc += NfElem(rows[static_cast<std::size_t>(k)][j]) * wp;
        wp *= w;
      }
      CHECK(acc == row[j]);
    }
  }
}

TEST_CASE("solve_and_complement") {
  auto monos = monomials_of_degree(4, 3);
  std::vector<QMultiPoly> basis;
  for (const auto& m : monos) basis.push_back(QMultiPoly::monomial(4, m, Rational(1)));
  REQUIRE(basis.size() == 20);
  SUBCASE("no conditions, no modulus") {
    LinearConditionSet c{20, {}};
    auto out = solve_and_complement(c, basis, {});
    CHECK(out == basis);
  }
  SUBCASE("all coefficients forced to zero") {
    LinearConditionSet c{20, {}};
    for (std::size_t i = 0; i < 20; ++i) {
      QVector r(20);
      r[i] = 1;
      c.add(r);
    }
    CHECK(solve_and_complement(c, basis, {}).empty());
  }
  SUBCASE("cubics modulo F") {
    auto F = parse_poly("t^3 - x^3 + y^2*z + 2*x*z^2 - z^3");
    auto out = solve_and_complement(LinearConditionSet{20, {}}, basis, {F});
    CHECK(out.size() == 19);
    // complement plus F spans everything
    auto all = out;
    all.push_back(F);
    CHECK(echelon_basis(all).size() == 20);
  }
  SUBCASE("returned elements satisfy the conditions") {
    LinearConditionSet c{20, {}};
    QVector r(20);
    r[0] = 1;
    r[5] = -2;
    r[19] = 3;
    c.add(r);
    auto out = solve_and_complement(c, basis, {});
    CHECK(out.size() == 19);
    for (const auto& p : out) {
      auto coords = coordinates_in_basis({p}, basis)[0];
      Rational s = 0;
      for (std::size_t i = 0; i < 20; ++i) s += coords[i] * r[i];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("polynomial parsing and printing") {
  auto F = parse_poly("t^3 - x^3 + y^2*z + 2*x*z^2 - z^3");
  CHECK(F.is_homogeneous());
  CHECK(F.degree() == 3);
  CHECK(parse_poly(F.to_string()) == F);
  CHECK(parse_poly("3/4 x y - (x+y)^2") == parse_poly("-x^2 - 5/4*x*y - y^2"));
  CHECK_THROWS_AS(parse_poly("x + q"), ParseError);
  CHECK_THROWS_AS(parse_poly("x / y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x + "), ParseError);
}
