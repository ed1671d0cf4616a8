#include "halphen_cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "halphen/birational.hpp"
#include "halphen/errors.hpp"
#include "halphen/fibration.hpp"
#include "halphen/parse.hpp"
#include "json.hpp"

namespace halphen::cli {
namespace {

using json = nlohmann::ordered_json;

std::string resolve(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw ParseError("cannot read " + s.substr(1));
  std::stringstream b;
  b << in.rdbuf();
  std::string t = b.str();
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  return t;
}

QMultiPoly poly(const std::string& s) { return parse_poly(resolve(s)); }

std::vector<QMultiPoly> polys(const std::vector<std::string>& v) {
  std::vector<QMultiPoly> out;
  for (const auto& s : v) out.push_back(poly(s));
  return out;
}

std::vector<std::string> strings(const std::vector<QMultiPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> ideal_strings(const PolyIdeal& I) { return canonical(I).to_strings(); }

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

CubicSurface surface(const std::string& s) { return CubicSurface(poly(s)); }

ClosedPoint point(const std::vector<std::string>& gens, const CubicSurface& X) {
  return ClosedPoint::from_ideal(PolyIdeal(polys(gens)), X);
}

// Text report: "key: value" lines in insertion order.
void print_text(const json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (k == "command" || (k == "count" && j.contains("sections"))) continue;
    if (k == "sections" && j.contains("count")) {
      std::vector<std::string> parts;
      for (const auto& e : v) parts.push_back(e.get<std::string>());
      out << indent << j["count"].dump() << " sections: " << joined(parts) << "\n";
      continue;
    }
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        out << indent << "  -\n";
        print_text(e, out, indent + "    ");
      }
    } else if (v.is_object()) {
      out << indent << k << ":\n";
      print_text(v, out, indent + "  ");
    } else if (v.is_array()) {
      std::vector<std::string> parts;
      for (const auto& e : v) parts.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      out << indent << k << ": " << joined(parts) << "\n";
    } else {
      out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

json map_json(const RationalMap& m) {
  json j;
  j["degree"] = m.degree();
  j["equations"] = strings(m.equations());
  std::vector<std::size_t> terms;
  for (const auto& e : m.equations()) terms.push_back(e.size());
  j["terms"] = terms;
  return j;
}

json involution_json(const InvolutionRecord& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["centre"] = ideal_strings(r.centre.ideal());
  j["centre_degree"] = r.centre.degree();
  j["biregular"] = r.biregular;
  j["samples"] = r.samples;
  j.update(map_json(r.map));
  return j;
}

json components_json(const std::vector<SchemeComponent>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(json{{"ideal", ideal_strings(c.prime)}, {"degree", c.degree}});
  return a;
}

json base_json(const BaseLocusReport& r) {
  json j;
  j["potential_basepoints"] = components_json(r.potential_basepoints);
  j["removed_curves"] = components_json(r.removed_curves);
  json m = json::array();
  for (const auto& b : r.multiplicities)
    m.push_back(json{{"ideal", ideal_strings(b.point.ideal())},
                     {"degree", b.degree},
                     {"multiplicity", b.multiplicity},
                     {"lower_bound", b.lower_bound},
                     {"infinitely_near", b.infinitely_near}});
  j["base_points"] = m;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic fibrations on cubic surfaces: Halphen pencils, Geiser and Bertini involutions, untwisting"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON report instead of text");
  app.fallthrough();

  std::string F;
  auto add_surface = [&](CLI::App* s) { s->add_option("--surface", F, "cubic form in x, y, z, t (or @file)")->required(); };
  std::vector<std::string> point_gens;
  auto add_point = [&](CLI::App* s) {
    s->add_option("--point", point_gens, "generators of the point ideal")->required()->expected(1, -1);
  };

  std::function<json()> job;

  auto* check = app.add_subcommand("check-surface", "is X nonsingular");
  check->add_option("--surface", F, "cubic form")->required();
  check->callback([&] {
    job = [&] {
      CubicSurface X(poly(F), false);
      return json{{"command", "check-surface"}, {"surface", X.equation().to_string()}, {"nonsingular", is_nonsingular(X)}};
    };
  });

  unsigned degree = 0, mult = 0;
  auto* impose = app.add_subcommand("impose", "impose a basepoint of given multiplicity on |dA|");
  add_surface(impose);
  add_point(impose);
  impose->add_option("--degree", degree, "degree d of |dA|")->required();
  impose->add_option("--mult", mult, "multiplicity")->required();
  impose->callback([&] {
    job = [&] {
      const auto X = surface(F);
      const auto P = point(point_gens, X);
      const auto sys = impose_basepoint(LinearSystemOnX::complete(X, degree), P, mult);
      return json{{"command", "impose"},
                  {"point", ideal_strings(P.ideal())},
                  {"degree", degree},
                  {"multiplicity", mult},
                  {"count", sys.size()},
                  {"sections", strings(sys.sections())}};
    };
  });

  std::vector<std::string> sections;
  std::size_t precision = 0;
  auto* mul = app.add_subcommand("multiplicity", "multiplicity of a linear system at a point");
  add_surface(mul);
  add_point(mul);
  mul->add_option("--sections", sections, "forms spanning the system")->required()->expected(1, -1);
  mul->add_option("--precision", precision, "series precision (default 3d + 2)");
  mul->callback([&] {
    job = [&] {
      const auto X = surface(F);
      const auto P = point(point_gens, X);
      const auto s = polys(sections);
      const LinearSystemOnX sys(X, static_cast<unsigned>(s.front().degree()), s);
      const auto m = multiplicity(sys, P, precision);
      return json{{"command", "multiplicity"},
                  {"point", ideal_strings(P.ideal())},
                  {"multiplicity", m.m},
                  {"lower_bound", m.lower_bound}};
    };
  });

  std::string G, kind = "B";
  std::vector<std::vector<std::string>> points;
  std::vector<unsigned> weights;
  unsigned mu = 1;
  auto* hal = app.add_subcommand("halphen", "Halphen pencil of given data");
  add_surface(hal);
  hal->add_option("--G", G, "linear form of the plane section G")->required();
  hal->add_option("--point", points, "generators of one point of D (repeat per point)")->required()->expected(1, -1);
  hal->add_option("--weight", weights, "weight of each point, in order (default 1)");
  hal->add_option("--mu", mu, "index")->required();
  hal->add_option("--case", kind, "A1, A2, A3, B or C")->required();
  hal->callback([&] {
    job = [&] {
      const auto X = surface(F);
      HalphenData d{poly(G), {}, mu, parse_halphen_case(kind)};
      for (std::size_t i = 0; i < points.size(); ++i)
        d.D.push_back({point(points[i], X), i < weights.size() ? weights[i] : 1u});
      const auto sys = halphen_system(X, d);
      return json{{"command", "halphen"},
                  {"case", kind},
                  {"mu", mu},
                  {"count", sys.size()},
                  {"sections", strings(sys.sections())}};
    };
  });

  auto* gei = app.add_subcommand("geiser", "Geiser involution at a rational point");
  add_surface(gei);
  add_point(gei);
  gei->callback([&] {
    job = [&] {
      const auto X = surface(F);
      json j{{"command", "geiser"}};
      j.update(involution_json(geiser(X, point(point_gens, X))));
      return j;
    };
  });

  auto* ber = app.add_subcommand("bertini", "Bertini involution at a point of degree 2");
  add_surface(ber);
  add_point(ber);
  ber->callback([&] {
    job = [&] {
      const auto X = surface(F);
      json j{{"command", "bertini"}};
      j.update(involution_json(bertini(X, point(point_gens, X))));
      return j;
    };
  });

  std::string f1, f2;
  auto add_pencil = [&](CLI::App* s) {
    add_surface(s);
    s->add_option("--f1", f1, "first form of the pencil (or @file)")->required();
    s->add_option("--f2", f2, "second form of the pencil (or @file)")->required();
  };
  auto* base = app.add_subcommand("base-locus", "potential basepoints and multiplicities of a pencil");
  add_pencil(base);
  base->callback([&] {
    job = [&] {
      const Fibration fib(surface(F), poly(f1), poly(f2));
      json j{{"command", "base-locus"}, {"mu", fib.mu()}};
      j.update(base_json(with_multiplicities(fib, base_locus(fib))));
      return j;
    };
  });

  auto* unt = app.add_subcommand("untwist", "untwist a pencil by Geiser and Bertini involutions");
  add_pencil(unt);
  unt->callback([&] {
    job = [&] {
      const Fibration fib(surface(F), poly(f1), poly(f2));
      const auto cert = untwist(fib);
      json steps = json::array();
      for (const auto& s : cert.steps) {
        json e = involution_json(s.involution);
        e["mu_before"] = s.mu_before;
        e["mu_after"] = s.mu_after;
        e["centre_multiplicity"] = s.centre_multiplicity;
        steps.push_back(e);
      }
      json j{{"command", "untwist"}, {"mu", fib.mu()}, {"involutions", steps}};
      j["verdict"] = to_string(cert.verdict);
      j["final"] = json{{"mu", cert.final_fibration.mu()},
                        {"f1", cert.final_fibration.f1().to_string()},
                        {"f2", cert.final_fibration.f2().to_string()}};
      j.update(base_json(cert.final_base));
      const unsigned m = cert.final_fibration.mu();
      j["nfi"] = json{{"sum_dm2", cert.nfi.sum_dm2.get_str()},
                      {"three_mu2", std::to_string(3 * m * m)},
                      {"sum_dm_defect", cert.nfi.sum_dm_defect.get_str()},
                      {"holds", cert.nfi.holds}};
      j["warnings"] = cert.warnings;
      return j;
    };
  });

  std::vector<std::string> eqs;
  int max_degree = 3;
  auto* img = app.add_subcommand("image", "equations of the image of a rational map");
  add_surface(img);
  img->add_option("--map", eqs, "forms of one degree defining the map")->required()->expected(1, -1);
  img->add_option("--max-degree", max_degree, "largest degree of image equations searched");
  img->callback([&] {
    job = [&] {
      const RationalMap f(surface(F), polys(eqs));
      return json{{"command", "image"}, {"generators", image_variety(f, max_degree).to_strings()}};
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  auto report_error = [&](const std::string& code, const std::string& detail, int exit) {
    if (as_json) out << json{{"error", code}, {"detail", detail}}.dump(2) << "\n";
    err << "error: " << code << ": " << detail << "\n";
    return exit;
  };
  try {
    const json j = job();
    if (as_json)
      out << j.dump(2) << "\n";
    else
      print_text(j, out);
    if (j.contains("nfi") && !j["nfi"]["holds"].get<bool>()) {
      err << "error: NfiViolation: the identities fail on the terminal pencil\n";
      return kDomainError;
    }
    return kOk;
  } catch (const ParseError& e) {
    return report_error("ParseError", e.what(), kParseError);
  } catch (const HalphenError& e) {
    const std::string what = e.what();
    return report_error(e.code(), what.substr(std::min(what.size(), e.code().size() + 2)), kDomainError);
  }
}

}  // namespace halphen::cli
