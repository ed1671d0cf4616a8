#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "halphen/errors.hpp"

using namespace halphen;

namespace {

bool same_span(const std::vector<QMultiPoly>& a, const std::vector<QMultiPoly>& b) {
  auto all = a;
  all.insert(all.end(), b.begin(), b.end());
  return echelon_basis(all).size() == echelon_basis(a).size() && echelon_basis(a).size() == echelon_basis(b).size();
}

bool contains_power_of_G(const LinearSystemOnX& sys, const QMultiPoly& l, unsigned mu) {
  QMultiPoly p(4, Rational(1));
  for (unsigned i = 0; i < mu; ++i) p = p * l;
  auto with = sys.sections();
  with.push_back(p);
  return LinearSystemOnX(sys.surface(), mu, with).size() == sys.size();
}

}  // namespace

TEST_CASE("Halphen data validation") {
  const auto X = corpus::halphen_surface();
  const auto data = corpus::halphen_data();
  for (const auto& d : data) CHECK_NOTHROW(validate_halphen_data(X, d.data));
  SUBCASE("reducible plane section") {
    auto d = data[0].data;
    d.G = parse_poly("z");  // t^3 - x^3 splits off the line t = x
    CHECK_THROWS_WITH_AS(validate_halphen_data(X, d), doctest::Contains("ReducibleG"), HalphenError);
  }
  SUBCASE("weights not matching the case") {
    auto d = data[0].data;
    d.kind = HalphenCase::A1;
    CHECK_THROWS_WITH_AS(validate_halphen_data(X, d), doctest::Contains("BadWeights"), HalphenError);
    d = data[3].data;
    d.D[0].weight = 2;
    CHECK_THROWS_WITH_AS(validate_halphen_data(X, d), doctest::Contains("BadWeights"), HalphenError);
  }
  SUBCASE("point off G") {
    CubicSurface Y(parse_poly("x^3 + y^3 + z^3 + 3*t^3"));
    CHECK_THROWS_WITH_AS(validate_halphen_data(Y, {parse_poly("x - 2*y"), {{ClosedPoint::rational({1, 1, 1, -1}), 3}}, 2,
                                                   HalphenCase::A3}),
                         doctest::Contains("PointNotOnG"), HalphenError);
  }
  SUBCASE("point at the node of a tangent section") {
    CubicSurface Y(parse_poly("x^3 + y^3 + z^3 + 3*t^3"));
    HalphenData d{parse_poly("x + y + z + 3*t"), {{ClosedPoint::rational({1, 1, 1, -1}), 3}}, 2, HalphenCase::A3};
    CHECK_THROWS_WITH_AS(validate_halphen_data(Y, d), doctest::Contains("PointOnSingularLocus"), HalphenError);
  }
}

TEST_CASE("Halphen systems") {
  const auto X = corpus::halphen_surface();
  const auto data = corpus::halphen_data();
  SUBCASE("case B pencil") {
    auto sys = halphen_system(X, data[0].data);
    CHECK(same_span(sys.sections(), parse_poly_list({"x^2 + x*z - z^2", "t^2"})));
  }
  for (const auto& d : data) {
    CAPTURE(d.name);
    auto sys = halphen_system(X, d.data);
    CHECK(sys.size() == 2);
    CHECK(contains_power_of_G(sys, d.data.G, d.data.mu));
  }
  SUBCASE("wrong index") {
    auto d = data[0].data;
    d.mu = 1;
    CHECK_THROWS_WITH_AS(halphen_system(X, d), doctest::Contains("NotAPencil"), HalphenError);
    d.mu = 4;  // |4A - 4D| holds f^2, fg, g^2
    CHECK_THROWS_WITH_AS(halphen_system(X, d), doctest::Contains("NotAPencil"), HalphenError);
  }
  SUBCASE("index one gives planes") {
    // the tangent line to G at O meets G only at O
    HalphenData d{parse_poly("t"), {{ClosedPoint::rational({0, 1, 0, 0}), 3}}, 1, HalphenCase::A3};
    auto sys = halphen_system(X, d);
    CHECK(same_span(sys.sections(), parse_poly_list({"z", "t"})));
  }
}

TEST_CASE("Fibration construction") {
  const auto X = corpus::halphen_surface();
  CHECK_THROWS_WITH_AS(Fibration(X, parse_poly("x"), parse_poly("y^2")), doctest::Contains("DegreeMismatch"),
                       HalphenError);
  CHECK_THROWS_WITH_AS(Fibration(X, parse_poly("x*t^2"), parse_poly("x*t^2 + t^3 - x^3 + y^2*z + 2*x*z^2 - z^3")),
                       doctest::Contains("NotAPencil"), HalphenError);
  Fibration f(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2"));
  CHECK(f.mu() == 2);
  CHECK(same_fibration(f, Fibration(X, parse_poly("x^2*t + x*z*t - z^2*t"), parse_poly("t^3"))));
}

TEST_CASE("base loci") {
  const auto X = corpus::halphen_surface();
  SUBCASE("case B pencil") {
    Fibration f(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2"));
    auto r = base_locus(f);
    CHECK(r.removed_curves.empty());
    REQUIRE(r.potential_basepoints.size() == 2);
    CHECK(r.potential_basepoints[0].degree == 1);
    CHECK(r.potential_basepoints[0].prime == ClosedPoint::rational({0, 1, 0, 0}).ideal());
    CHECK(r.potential_basepoints[1].degree == 2);
    CHECK(r.potential_basepoints[1].prime == PolyIdeal(parse_poly_list({"x^2 + x*z - z^2", "y", "t"})));
    for (const auto& c : r.potential_basepoints)
      for (const auto& g : {f.f1(), f.f2(), X.equation()}) CHECK(c.prime.contains(g));
  }
  SUBCASE("a fixed plane section is removed") {
    Fibration f(X, parse_poly("x*(x^2 + x*z - z^2)"), parse_poly("x*t^2"));
    auto r = base_locus(f);
    REQUIRE(r.removed_curves.size() == 1);
    CHECK(r.removed_curves[0].prime == PolyIdeal({parse_poly("x"), X.equation()}));
    std::vector<int> degrees;
    for (const auto& c : r.potential_basepoints) degrees.push_back(c.degree);
    // O and the degree-2 point survive; so do the points where the fixed curve meets the pencil
    CHECK(std::find(degrees.begin(), degrees.end(), 2) != degrees.end());
    for (const auto& c : r.potential_basepoints)
      for (const auto& g : {f.f1(), f.f2(), X.equation()}) CHECK(c.prime.contains(g));
  }
}

TEST_CASE("maximal centres and untwisting on small pencils") {
  for (const auto& e : corpus::fibrations(false)) {
    CAPTURE(e.name);
    auto cert = untwist(e.fib);
    CHECK(cert.nfi.holds);
    CHECK(untwist(cert.final_fibration).steps.empty());
    for (std::size_t i = 0; i < cert.steps.size(); ++i) CHECK(cert.steps[i].mu_after < cert.steps[i].mu_before);
    if (e.name.rfind("halphen", 0) == 0) {
      CHECK(cert.steps.empty());
      CHECK_FALSE(has_maximal_centre(e.fib).has_value());
      CHECK(cert.verdict == (e.name == "halphen C" ? Verdict::halphen_caseC : Verdict::halphen_with_centres));
    }
  }
  const auto X = corpus::halphen_surface();
  SUBCASE("case B pencil") {
    auto cert = untwist(Fibration(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2")));
    CHECK(cert.verdict == Verdict::halphen_with_centres);
    REQUIRE(cert.final_base.multiplicities.size() == 2);
    CHECK(cert.final_base.multiplicities[0].degree == 1);
    CHECK(cert.final_base.multiplicities[1].degree == 2);
    for (const auto& b : cert.final_base.multiplicities) CHECK(b.multiplicity == 2);
  }
  SUBCASE("case A3 has two infinitely near points") {
    auto fib = Fibration::from_system(halphen_system(X, corpus::halphen_data()[3].data));
    auto cert = untwist(fib);
    REQUIRE(cert.final_base.multiplicities.size() == 3);
    for (unsigned k = 0; k < 3; ++k) CHECK(cert.final_base.multiplicities[k].infinitely_near == k);
  }
  SUBCASE("planes") {
    auto cert = untwist(Fibration(X, parse_poly("x + y"), parse_poly("z - t")));
    CHECK(cert.verdict == Verdict::linear);
    CHECK(cert.steps.empty());
  }
  SUBCASE("a Geiser twist is undone") {
    const Fibration B(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2"));
    auto e = corpus::fibrations(false);
    const auto& tw = std::find_if(e.begin(), e.end(), [](const auto& x) { return x.name == "geiser-twisted B"; })->fib;
    CHECK(tw.mu() == 4);
    auto P = has_maximal_centre(tw);
    REQUIRE(P.has_value());
    CHECK(*P == ClosedPoint::rational({1, 0, 1, 0}));
    auto cert = untwist(tw);
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.steps[0].involution.kind == InvolutionKind::geiser);
    // degree 2 mu - m
    CHECK(cert.steps[0].mu_after == 2 * 4 - cert.steps[0].centre_multiplicity);
    CHECK(same_fibration(cert.final_fibration, B));
  }
}

TEST_CASE("reduce_pencil") {
  const auto X = corpus::halphen_surface();
  Fibration f(X, parse_poly("x*(y^2 + z*t) + t^3 - x^3 + y^2*z + 2*x*z^2 - z^3"), parse_poly("y*(y^2 + z*t)"));
  auto r = reduce_pencil(f, 2);
  REQUIRE(r.has_value());
  CHECK(r->mu() == 1);
  CHECK(same_fibration(*r, Fibration(X, parse_poly("x"), parse_poly("y"))));
  CHECK_FALSE(reduce_pencil(Fibration(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2")), 1).has_value());
}

TEST_CASE("the degree-5 pencil untwists to a pencil of planes") {
  const auto f = corpus::untwist_example();
  auto Q = has_maximal_centre(f);
  REQUIRE(Q.has_value());
  CHECK(Q->ideal() ==
        PolyIdeal(parse_poly_list({"z^2 - 31/4*z*t - 5/4*t^2", "x + 3/2*z + 3/2*t", "y - 3/2*z - 1/2*t"})));
  auto cert = untwist(f);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].involution.kind == InvolutionKind::bertini);
  CHECK(cert.steps[0].mu_after == 5 * 5 - 4 * cert.steps[0].centre_multiplicity);
  CHECK(cert.verdict == Verdict::linear);
  const auto& g = cert.final_fibration;
  CHECK(divisible_by_surface(f.surface(), parse_poly("x") * g.f2() - parse_poly("y") * g.f1()));
  CHECK(cert.nfi.holds);
  CHECK(untwist(g).steps.empty());
}
