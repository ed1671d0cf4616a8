#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "halphen/fibration.hpp"
#include "halphen/parse.hpp"

namespace corpus {

using namespace halphen;

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HALPHEN_TEST_DATA_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline ClosedPoint point(std::initializer_list<const char*> gens) {
  std::vector<QMultiPoly> g;
  for (const char* s : gens) g.push_back(parse_poly(s));
  return ClosedPoint::from_ideal(PolyIdeal(g));
}

/// t^3 - x^3 + y^2 z + 2 x z^2 - z^3; the section G = V(t) is the curve
/// y^2 z = x^3 - 2 x z^2 + z^3 with flex O = (0:1:0:0) and 2-torsion point
/// T = (1:0:1:0), which gives index-2 data in every case.
inline CubicSurface halphen_surface() { return CubicSurface(parse_poly("t^3 - x^3 + y^2*z + 2*x*z^2 - z^3")); }

struct DataEntry {
  std::string name;
  HalphenData data;
};

inline std::vector<DataEntry> halphen_data() {
  const auto G = parse_poly("t");
  const auto T = ClosedPoint::rational({1, 0, 1, 0});
  const auto O = ClosedPoint::rational({0, 1, 0, 0});
  const auto R = ClosedPoint::rational({0, 1, 1, 0});
  const auto Rm = ClosedPoint::rational({0, -1, 1, 0});
  const auto P2 = point({"x^2 + x*z - z^2", "y", "t"});
  // residual intersection with the conic x^2 + 2yz - z^2 through T, tangent at O
  const auto C3 = ClosedPoint::from_ideal(
      saturate(PolyIdeal(parse_poly_list({"t", "x^3 - 3*x^2*z - 5*x*z^2 + 3*z^3", "x^2 + 2*y*z - z^2"})),
               parse_poly("z")));
  return {{"B", {G, {{P2, 1}, {O, 1}}, 2, HalphenCase::B}},
          {"A1", {G, {{T, 1}, {R, 1}, {Rm, 1}}, 2, HalphenCase::A1}},
          {"A2", {G, {{T, 1}, {O, 2}}, 2, HalphenCase::A2}},
          {"A3", {G, {{T, 3}}, 2, HalphenCase::A3}},
          {"C", {G, {{C3, 1}}, 2, HalphenCase::C}}};
}

struct FibrationEntry {
  std::string name;
  Fibration fib;
  bool slow = false;
};

inline Fibration untwist_example() {
  CubicSurface X(parse_poly("x^3 + y^3 + z^3 + 2*t^3"));
  return Fibration(X, parse_poly(read_data("untwist_f1.txt")), parse_poly(read_data("untwist_f2.txt")));
}

/// The Halphen pencils above, a pencil of planes, the case-B pencil twisted
/// by a Geiser involution and the degree-5 pencil that needs a Bertini
/// involution.
inline std::vector<FibrationEntry> fibrations(bool include_slow) {
  const auto X = halphen_surface();
  std::vector<FibrationEntry> out;
  for (const auto& d : halphen_data()) out.push_back({"halphen " + d.name, Fibration::from_system(halphen_system(X, d.data))});
  out.push_back({"planes", Fibration(X, parse_poly("x + y"), parse_poly("z - t"))});
  const Fibration B(X, parse_poly("x^2 + x*z - z^2"), parse_poly("t^2"));
  const auto g = geiser(X, ClosedPoint::rational({1, 0, 1, 0}));
  const auto tw = compose(RationalMap(X, {B.f1(), B.f2()}), g.map);
  out.push_back({"geiser-twisted B", Fibration(X, tw.equations()[0], tw.equations()[1])});
  if (include_slow) out.push_back({"degree-5 pencil", untwist_example(), true});
  return out;
}

}  // namespace corpus
