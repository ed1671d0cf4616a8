#pragma once

#include <optional>
#include <string>
#include <vector>

#include "halphen/birational.hpp"
#include "halphen/ideal.hpp"
#include "halphen/linear_system.hpp"
#include "halphen/surface.hpp"

namespace halphen {

enum class HalphenCase { A1, A2, A3, B, C };
std::string to_string(HalphenCase c);
/// Throws ParseError for anything but A1, A2, A3, B, C.
HalphenCase parse_halphen_case(const std::string& s);

struct WeightedPoint {
  ClosedPoint point;
  unsigned weight = 1;
};

/// A plane section G = V(l, F) with a degree-3 divisor D on it and an index.
/// In case A2 the weight-1 point comes first; ordering is otherwise free.
struct HalphenData {
  QMultiPoly G;
  std::vector<WeightedPoint> D;
  unsigned mu = 1;
  HalphenCase kind = HalphenCase::B;
};

/// Errors: ReducibleG, PointNotOnG, PointOnSingularLocus, BadWeights.
HalphenData validate_halphen_data(const CubicSurface& X, HalphenData data);

/// Members of |mu A| with multiplicity mu at every point of the resolution.
/// NotAPencil if the result is not two-dimensional.
LinearSystemOnX halphen_system(const CubicSurface& X, const HalphenData& data);

/// phi = (f1 : f2) on X.
class Fibration {
public:
  /// Errors: DegreeMismatch, NotAPencil (dependent modulo F).
  Fibration(const CubicSurface& X, QMultiPoly f1, QMultiPoly f2);
  static Fibration from_system(const LinearSystemOnX& pencil);

  const CubicSurface& surface() const { return X_; }
  const QMultiPoly& f1() const { return f1_; }
  const QMultiPoly& f2() const { return f2_; }
  unsigned mu() const { return mu_; }
  LinearSystemOnX system() const;

private:
  CubicSurface X_;
  QMultiPoly f1_, f2_;
  unsigned mu_ = 0;
};

/// f1 g2 - f2 g1 is divisible by F.
bool same_fibration(const Fibration& a, const Fibration& b);

struct BasePoint {
  ClosedPoint point;
  unsigned degree = 1;
  unsigned multiplicity = 0;
  bool lower_bound = false;
  /// Point on the blowup, reached through this many exceptional curves.
  unsigned infinitely_near = 0;
};

struct BaseLocusReport {
  std::vector<SchemeComponent> potential_basepoints;
  std::vector<SchemeComponent> removed_curves;
  /// Filled by `with_multiplicities`; includes infinitely near points.
  std::vector<BasePoint> multiplicities;
};

/// Reduced points supporting the base locus after removing curve
/// components (saturation by each curve prime).
BaseLocusReport base_locus(const Fibration& fib);
/// Multiplicities at the potential basepoints of degree <= 3 and at the
/// rational infinitely near points over them.
BaseLocusReport with_multiplicities(const Fibration& fib, BaseLocusReport report);

/// First potential basepoint of degree <= 2 with multiplicity > mu.
std::optional<ClosedPoint> has_maximal_centre(const Fibration& fib);

enum class Verdict { linear, halphen_caseC, halphen_with_centres };
std::string to_string(Verdict v);

struct NfiSums {
  Integer sum_dm2;          // sum d_i m_i^2, to compare with 3 mu^2
  Rational sum_dm_defect;   // sum d_i m_i (1 - m_i / mu), expected 0
  bool holds = false;
};
NfiSums nfi_sums(unsigned mu, const std::vector<BasePoint>& points);

struct UntwistStep {
  InvolutionRecord involution;
  unsigned mu_before = 0;
  unsigned mu_after = 0;
  unsigned centre_multiplicity = 0;
};

struct UntwistCertificate {
  std::vector<UntwistStep> steps;
  Fibration final_fibration;
  Verdict verdict = Verdict::linear;
  BaseLocusReport final_base;
  NfiSums nfi;
  std::vector<std::string> warnings;
};

/// The pencil of the least degree agreeing with phi on X, searched up to
/// degree `max_degree`; nullopt if none.
std::optional<Fibration> reduce_pencil(const Fibration& fib, unsigned max_degree);

/// Untwist by Geiser and Bertini involutions at maximal centres until none
/// is left.  Errors: DegreeNotDecreasing, NonMinimalConfiguration.
UntwistCertificate untwist(const Fibration& fib);

}  // namespace halphen
