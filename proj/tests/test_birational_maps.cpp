#include "doctest.h"
#include "halphen/birational.hpp"
#include "halphen/errors.hpp"
#include "halphen/parse.hpp"

using namespace halphen;

namespace {

std::vector<QMultiPoly> polys(std::initializer_list<const char*> s) {
  std::vector<QMultiPoly> out;
  for (const char* p : s) out.push_back(parse_poly(p));
  return out;
}

ClosedPoint fermat_q(const CubicSurface& X) {
  return ClosedPoint::from_ideal(PolyIdeal(polys({"x - y", "z + t", "y^2 - y*t + t^2"})), X);
}

bool is_involution(const InvolutionRecord& r) {
  return maps_equal_on_X(compose(r.map, r.map), RationalMap::identity(r.map.surface()));
}

}  // namespace

TEST_CASE("rational maps: construction and equality") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 3t^3"));
  auto id = RationalMap::identity(X);
  RationalMap scaled(X, polys({"3x/2", "3y/2", "3z/2", "3t/2"}));
  CHECK(scaled.equations() == id.equations());
  CHECK(maps_equal_on_X(id, scaled));
  CHECK_FALSE(maps_equal_on_X(id, RationalMap(X, polys({"y", "x", "z", "t"}))));
  // common factors cancel
  RationalMap common(X, polys({"x*(x + y)", "y*(x + y)", "z*(x + y)", "t*(x + y)"}));
  CHECK(common.degree() == 1);
  CHECK(common.equations() == id.equations());
  // equal modulo F although the polynomials differ
  RationalMap shifted(X, polys({"x*t^2", "y*t^2", "z*t^2", "t^3 + (x^3 + y^3 + z^3 + 3t^3)"}));
  CHECK(maps_equal_on_X(shifted, id));
  CHECK_THROWS_WITH_AS(RationalMap(X, polys({"x^3 + y^3 + z^3 + 3t^3", "0", "0", "0"})),
                       doctest::Contains("ZeroMap"), HalphenError);
}

TEST_CASE("compose") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 2t^3"));
  RationalMap f(X, polys({"x^2 + y*t", "y^2", "z*t", "t^2 - x*z"}));
  auto id = RationalMap::identity(X);
  CHECK(maps_equal_on_X(compose(f, id), f));
  CHECK(maps_equal_on_X(compose(id, f), f));
  RationalMap swap(X, polys({"y", "x", "z", "t"}));
  CHECK(maps_equal_on_X(compose(swap, swap), id));
  SUBCASE("parallel kernel matches the serial reference") {
    RationalMap g(X, polys({"x + 2y - t", "y - z", "3z + x", "t - y + x"}));
    CHECK(compose_equations_parallel(f.equations(), g.equations()) ==
          compose_equations_serial(f.equations(), g.equations()));
  }
  SUBCASE("pencils compose like maps") {
    RationalMap pencil(X, polys({"x^2 - y*z", "t^2"}));
    auto r = compose(pencil, swap);
    CHECK(r.equations() == RationalMap(X, polys({"y^2 - x*z", "t^2"})).equations());
  }
}

TEST_CASE("Geiser involution at a non-Eckardt point") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 3t^3"));
  auto P = ClosedPoint::rational({1, 1, 1, -1});
  auto r = geiser(X, P);
  CHECK(r.kind == InvolutionKind::geiser);
  CHECK_FALSE(r.biregular);
  CHECK(r.samples >= 5);
  RationalMap expected(X, polys({"-x*y + y^2 - x*z + z^2 - 3*x*t - 3*t^2", "x^2 - x*y - y*z + z^2 - 3*y*t - 3*t^2",
                                "x^2 + y^2 - x*z - y*z - 3*z*t - 3*t^2", "-x^2 - y^2 - z^2 - x*t - y*t - z*t"}));
  CHECK(maps_equal_on_X(r.map, expected));
  CHECK(is_involution(r));
  SUBCASE("the tangent curve is contracted to one point") {
    PolyIdeal CP({X.equation(), tangent_plane(X, P)});
    auto img = image_variety(r.map, CP, 1);
    auto comps = minimal_primes(img);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].degree == 1);
    CHECK(comps[0].prime == ClosedPoint::rational({-1, -1, -1, 1}).ideal());
  }
}

TEST_CASE("Geiser involution at an Eckardt point is biregular") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 2t^3"));
  auto r = geiser(X, ClosedPoint::rational({1, -1, 0, 0}));
  CHECK(r.biregular);
  CHECK(r.map.degree() == 1);
  CHECK(r.map.equations() == polys({"y", "x", "z", "t"}));
}

TEST_CASE("Geiser involutions: involution property on several fixtures") {
  struct Fixture {
    const char* F;
    std::array<Rational, 4> P;
  };
  const Fixture fx[] = {{"x^3 + y^3 + z^3 + 3t^3", {0, -1, 1, 0}},
                        {"x^3 + y^3 + z^3 + 2t^3", {1, 0, -1, 0}},
                        {"t^3 - x^3 + y^2*z + 2*x*z^2 - z^3", {0, 1, 0, 0}},
                        {"x^3 + 2y^3 + 3z^3 + t^3 + x*y*z", {1, 0, 0, -1}},
                        {"x^2*y + y^2*z + z^2*t + t^2*x", {1, 0, 0, 0}}};
  for (const auto& f : fx) {
    CubicSurface X(parse_poly(f.F));
    auto P = ClosedPoint::rational(f.P);
    REQUIRE(P.ideal().contains(X.equation()));
    auto r = geiser(X, P);
    CHECK(is_involution(r));
    // the centre is the image of its tangent curve unless the point is Eckardt
    CHECK(r.biregular == is_eckardt(X, P));
  }
}

TEST_CASE("Bertini involution") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 3t^3"));
  auto Q = fermat_q(X);
  auto r = bertini(X, Q);
  CHECK(r.kind == InvolutionKind::bertini);
  CHECK(r.map.degree() == 5);
  const auto& e0 = r.map.equations()[0];
  CHECK(e0.size() == 38);
  CHECK(e0.to_string().rfind("6*x^2*y^3 - 5*x*y^4 + 5*y^5 - x^2*y^2*z - x*y^3*z - 4*x^2*y*z^2", 0) == 0);
  CHECK(is_involution(r));
}

TEST_CASE("non-minimal configuration is refused") {
  CubicSurface X(parse_poly("x*t^2 + x^2*y + y^3 - z^3"));
  auto Z = ClosedPoint::from_ideal(PolyIdeal(polys({"x", "t", "y^2 + y*z + z^2"})), X);
  CHECK(is_eckardt(X, ClosedPoint::rational({0, 0, 0, 1})));
  CHECK_THROWS_WITH_AS(bertini(X, Z), doctest::Contains("NonMinimalConfiguration"), HalphenError);
  auto sys = impose_basepoint(LinearSystemOnX::complete(X, 5), Z, 6);
  REQUIRE(sys.size() == 5);
  RationalMap f(X, sys.sections());
  // In the echelon basis the image has the quadric 4 a1 a3 + 6 a2 a3 + 3 a4 a5
  // and the cubic cone 27 (a1 + 2 a2)^3 + a1^3 + 9 a1 a5^2 - 27 a3^2 a5 with
  // vertex e4, which is X under (y, -z, t/3, -x/3).  That fixes the change
  // to the coordinates of the determinantal presentation below.
  const auto& s = f.equations();
  const std::vector<QMultiPoly> a{s[4] * Rational(3), s[0], s[0] * Rational(-3) - s[1] * Rational(6), s[2] * Rational(3),
                                  s[3] * Rational(3)};
  const std::vector<std::string> names{"a1", "a2", "a3", "a4", "a5"};
  const auto minors = parse_poly_list({"-a4*(a2 - a3) - a5*a1", "-a4*(a4^2 - a1*a3) - a5*(a1^2 + a2^2 + a2*a3 + a3^2)",
                                       "(a1^2 + a2^2 + a2*a3 + a3^2)*(a2 - a3) - a1*(a4^2 - a1*a3)"},
                                      names);
  for (const auto& m : minors) CHECK(divisible_by_surface(X, m.substitute(a)));
  SUBCASE("the implicit image is the determinantal surface in these coordinates") {
    auto I = image_variety(f, 3);
    CHECK(I.contains(parse_poly_list({"4*a1*a3 + 6*a2*a3 + 3*a4*a5"}, names)[0]));
    CHECK(I.contains(parse_poly_list({"27*(a1 + 2*a2)^3 + a1^3 + 9*a1*a5^2 - 27*a3^2*a5"}, names)[0]));
    // (A1..A5) = (3 a5, a1, -3 a1 - 6 a2, 3 a3, 3 a4)
    const auto sub = parse_poly_list({"3*a5", "a1", "-3*a1 - 6*a2", "3*a3", "3*a4"}, names);
    std::vector<QMultiPoly> pulled;
    for (const auto& m : minors) pulled.push_back(m.substitute(sub));
    CHECK(PolyIdeal(pulled, 5) == I);
  }
  SUBCASE("a map outside the system is not matched") {
    CHECK(match_coordinates(f, polys({"-x^2", "x*y", "x*z", "x*t", "t*(y - z)"})).empty());
    std::vector<QMultiPoly> g{s[1] + s[2], s[0] - s[3] * Rational(2), s[4], s[2] + s[0], s[3] + s[4] + s[1]};
    CHECK(match_coordinates(f, g).size() == 5);
  }
}

TEST_CASE("image_variety") {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 2t^3"));
  auto id = RationalMap::identity(X);
  CHECK(image_variety(id) == PolyIdeal({X.equation()}));
  CHECK(image_variety_elimination(id) == PolyIdeal({X.equation()}));
  RationalMap constant(X, polys({"x", "2x", "-x", "3x"}));
  CHECK(image_variety(constant, 1) == ClosedPoint::rational({1, 2, -1, 3}).ideal());
  CHECK_THROWS_WITH_AS(image_variety_elimination(RationalMap(X, polys({"x^3", "y^3", "z^3", "t^3"}))),
                       doctest::Contains("EliminationOverflow"), HalphenError);
}
