#include <random>

#include "doctest.h"
#include "halphen/ideal.hpp"
#include "halphen/mfactor.hpp"
#include "halphen/parse.hpp"

using namespace halphen;

namespace {

PolyIdeal ideal(std::initializer_list<const char*> gens) {
  std::vector<QMultiPoly> g;
  for (const char* s : gens) g.push_back(parse_poly(s));
  return PolyIdeal(g);
}

QMultiPoly random_poly(std::mt19937& rng, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, static_cast<int>(max_deg));
  QMultiPoly p(4);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < 4; ++v) {
      const int e = ex(rng);
      if (m.deg + static_cast<unsigned>(e) > max_deg) continue;
      m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
      m.deg += static_cast<unsigned>(e);
    }
    p += QMultiPoly::monomial(4, m, Rational(coef(rng)));
  }
  return p;
}

// S-polynomials of a basis reduce to zero: the Buchberger criterion.
bool buchberger_closed(const GroebnerBasis& gb) {
  const auto ps = gb.polys();
  const auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const Monomial L = lcm(lms[i], lms[j]);
      auto lc = [&](const QMultiPoly& p, const Monomial& m) { return p.coeff(m); };
      const QMultiPoly s = ps[i].mul_term(L / lms[i], 1 / lc(ps[i], lms[i])) -
                           ps[j].mul_term(L / lms[j], 1 / lc(ps[j], lms[j]));
      if (!gb.normal_form(s).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("groebner examples") {
  SUBCASE("<x, y> grevlex") {
    auto gb = groebner(ideal({"x", "y"}));
    CHECK(gb.polys().size() == 2);
    CHECK(gb.contains(parse_poly("3x - 7y")));
  }
  SUBCASE("<x^2 - y, y^2> lex") {
    auto gb = groebner(ideal({"x^2 - y", "y^2"}), MonomialOrder::lex());
    auto ps = gb.polys();
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == parse_poly("y^2"));
    CHECK(gb.leading_monomials()[1] == Monomial::var(kX, 2));
    CHECK(buchberger_closed(gb));
  }
  SUBCASE("unit ideal") {
    auto gb = groebner(ideal({"1"}));
    CHECK(gb.is_unit());
    CHECK(gb.polys() == std::vector<QMultiPoly>{parse_poly("1")});
  }
  SUBCASE("elimination order keeps the eliminant") {
    // twisted cubic: eliminating x from its ideal leaves y z - x t's shadow
    auto I = ideal({"x*z - y^2", "y*t - z^2", "x*t - y*z"});
    auto E = eliminate(I, {kX});
    CHECK(E.contains(parse_poly("y*t - z^2")));
    for (const auto& g : E.generators()) CHECK(g.coeff(Monomial::var(kX)) == 0);
  }
}

TEST_CASE("groebner membership oracle on random ideals") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<QMultiPoly> gens;
    const int ng = 2 + trial % 2;
    for (int i = 0; i < ng; ++i) gens.push_back(random_poly(rng, 3, 4));
    PolyIdeal I(gens);
    const auto& gb = I.groebner();
    CHECK(buchberger_closed(gb));
    for (const auto& g : gens) CHECK(gb.contains(g));
    const QMultiPoly h = random_poly(rng, 2, 3);
    CHECK(gb.contains(gens[0] + gens[1]));
    CHECK(gb.contains(gens[0] * h));
    CHECK(gb.contains(gens[1] * h - gens[0] * gens[1]));
    // the basis generates no more than the input: each element reduces to 0
    // modulo a basis recomputed from the original generators plus itself
    for (const auto& p : gb.polys()) CHECK(PolyIdeal(gens).contains(p));
  }
}

TEST_CASE("ideal_quotient") {
  CHECK(ideal_quotient(ideal({"x", "y"}), ideal({"x"})).is_unit());
  CHECK(ideal_quotient(ideal({"x*y"}), ideal({"x"})) == ideal({"y"}));
  auto I = ideal({"x^2*y", "y^3 - z*t^2"});
  CHECK(ideal_quotient(I, ideal({"1"})) == I);
  SUBCASE("containment and iterated quotient") {
    auto P = ideal({"x", "z"});
    auto Q1 = ideal_quotient(I, P);
    CHECK(Q1.contains(I));
    auto Q2 = ideal_quotient(Q1, P);
    CHECK(Q2 == ideal_quotient(I, ideal_product(P, P)));
  }
}

TEST_CASE("saturation_exponent") {
  SUBCASE("<x^2> : <x>^n") {
    auto s = saturation_exponent(ideal({"x^2"}), ideal({"x"}));
    CHECK(s.n == 2);
    CHECK(s.ideal.is_unit());
  }
  SUBCASE("<xy, xz> : <x>^n") {
    auto s = saturation_exponent(ideal({"x*y", "x*z"}), ideal({"x"}));
    CHECK(s.n == 1);
    CHECK(s.ideal == ideal({"y", "z"}));
  }
  SUBCASE("already outside") {
    auto J = ideal({"y"});
    auto s = saturation_exponent(J, ideal({"x"}));
    CHECK(s.n == 0);
    CHECK(s.ideal == J);
  }
  SUBCASE("bound") {
    CHECK_THROWS_WITH_AS(saturation_exponent(ideal({"x^5"}), ideal({"x"}), 3),
                         doctest::Contains("NoTermination"), HalphenError);
  }
}

TEST_CASE("dimension_and_degree") {
  auto dd = dimension_and_degree(ideal({"x", "y", "z", "t"}));
  CHECK(dd.dim == -1);
  CHECK(dd.degree == 0);
  dd = dimension_and_degree(ideal({"x", "y", "z"}));
  CHECK(dd.dim == 0);
  CHECK(dd.degree == 1);
  dd = dimension_and_degree(ideal({"y", "t", "x^2 + x*z - z^2"}));
  CHECK(dd.dim == 0);
  CHECK(dd.degree == 2);
  dd = dimension_and_degree(ideal({"x^3 + y^3 + z^3 + 2t^3"}));
  CHECK(dd.dim == 2);
  CHECK(dd.degree == 3);
  SUBCASE("r distinct rational points") {
    PolyIdeal acc = ideal({"x - t", "y", "z"});
    const char* pts[][3] = {{"x", "y - t", "z"}, {"x", "y", "z - 2t"}, {"x - 3t", "y + t", "z - t"}};
    int r = 1;
    for (auto& p : pts) {
      acc = intersect(acc, ideal({p[0], p[1], p[2]}));
      ++r;
      auto d = dimension_and_degree(acc);
      CHECK(d.dim == 0);
      CHECK(d.degree == r);
    }
  }
}

TEST_CASE("radical") {
  CHECK_THROWS_WITH_AS(radical(ideal({"x^2"})), doctest::Contains("UnsupportedDimension"), HalphenError);
  CHECK(radical(ideal({"x^2", "y"})) == ideal({"x", "y"}));
  CHECK(radical(ideal({"(x - t)^2", "y", "z"})) == ideal({"x - t", "y", "z"}));
  SUBCASE("idempotent and contains the input") {
    auto I = ideal({"x^2*y", "y^2*z", "z^3", "t*x*z"});
    auto R = radical(I);
    CHECK(R.contains(I));
    CHECK(radical(R) == R);
  }
}

TEST_CASE("minimal_primes") {
  SUBCASE("degree 2 point") {
    auto c = minimal_primes(ideal({"y", "t", "x^2 + x*z - z^2"}));
    REQUIRE(c.size() == 1);
    CHECK(c[0].height == 3);
    CHECK(c[0].degree == 2);
  }
  SUBCASE("coordinate points of t = 0") {
    auto c = minimal_primes(ideal({"x*y", "x*z", "y*z", "t"}));
    REQUIRE(c.size() == 3);
    for (const auto& p : c) {
      CHECK(p.height == 3);
      CHECK(p.degree == 1);
    }
  }
  SUBCASE("rational point") {
    auto c = minimal_primes(ideal({"z + t", "y + t", "x + t"}));
    REQUIRE(c.size() == 1);
    CHECK(c[0].degree == 1);
    CHECK(c[0].prime == ideal({"x + t", "y + t", "z + t"}));
  }
  SUBCASE("curves plus points, intersection recovers the radical") {
    // line x = y = 0, conic {z = 0, x^2 + y^2 = t^2}, and a stray point
    auto line = ideal({"x", "y"});
    auto conic = ideal({"z", "x^2 + y^2 - t^2"});
    auto pt = ideal({"x - t", "y - 2t", "z - 3t"});
    auto I = intersect(intersect(line, conic), pt);
    auto c = minimal_primes(I);
    REQUIRE(c.size() == 3);
    CHECK(c[0].height == 2);
    CHECK(c[0].degree == 1);
    CHECK(c[0].prime == line);
    CHECK(c[1].height == 2);
    CHECK(c[1].degree == 2);
    CHECK(c[1].prime == conic);
    CHECK(c[2].height == 3);
    CHECK(c[2].prime == pt);
    PolyIdeal acc = c[0].prime;
    for (std::size_t i = 1; i < c.size(); ++i) acc = intersect(acc, c[i].prime);
    CHECK(acc == I);
  }
}

TEST_CASE("multivariate gcd and factorization") {
  auto a = parse_poly("(x + y - z)*(x^2 - y*t)");
  auto b = parse_poly("(x + y - z)*(z^3 + t^3)");
  CHECK(poly_gcd(a, b) == parse_poly("x + y - z"));
  CHECK(poly_gcd(parse_poly("x^2 + y^2"), parse_poly("x*y + t^2")) == parse_poly("1"));
  auto f = factor_poly(parse_poly("x*(x^2 + y^2 - z^2)^2*(y - 3z)"));
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor == parse_poly("x"));
  CHECK(f[1].factor == parse_poly("y - 3z"));
  CHECK(f[2].multiplicity == 2);
  CHECK(factor_poly(parse_poly("x^2 - 2y^2")).size() == 1);
}
