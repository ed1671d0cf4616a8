#pragma once

#include <string>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/linear_system.hpp"
#include "halphen/surface.hpp"

namespace halphen {

/// X ⇢ P^{n-1} given by n forms of one degree.  The common polynomial
/// factor is cancelled at construction and the tuple scaled to integer
/// coefficients with content 1.  Nothing is reduced modulo F.
class RationalMap {
public:
  /// Throws ZeroMap if every equation vanishes on X, DegreeMismatch for
  /// forms of different degrees.
  RationalMap(const CubicSurface& X, std::vector<QMultiPoly> equations);

  static RationalMap identity(const CubicSurface& X);

  const CubicSurface& surface() const { return X_; }
  const std::vector<QMultiPoly>& equations() const { return eqs_; }
  int degree() const { return degree_; }
  std::size_t size() const { return eqs_.size(); }

private:
  CubicSurface X_;
  std::vector<QMultiPoly> eqs_;
  int degree_ = 0;
};

/// F divides p.
bool divisible_by_surface(const CubicSurface& X, const QMultiPoly& p);

/// f ∘ g: substitute g's four equations into f's.  OpenMP kernel.
RationalMap compose(const RationalMap& f, const RationalMap& g);
/// Same result, one thread, plain substitution.  Reference for tests and
/// the benchmark.
std::vector<QMultiPoly> compose_equations_serial(const std::vector<QMultiPoly>& f, const std::vector<QMultiPoly>& g);
std::vector<QMultiPoly> compose_equations_parallel(const std::vector<QMultiPoly>& f, const std::vector<QMultiPoly>& g);

/// All f_i g_j - f_j g_i are divisible by F.
bool maps_equal_on_X(const RationalMap& f, const RationalMap& g);

enum class InvolutionKind { geiser, bertini };
std::string to_string(InvolutionKind k);

struct InvolutionRecord {
  InvolutionKind kind;
  ClosedPoint centre;
  RationalMap map;
  bool biregular = false;
  std::size_t samples = 0;  // sample pairs used for the interpolation
};

/// i_P from |2A - 3P|.  Errors: DimensionMismatch, InterpolationDegenerate.
InvolutionRecord geiser(const CubicSurface& X, const ClosedPoint& P);
/// i_Q from |5A - 6Q|.  Errors: NonMinimalConfiguration (5 sections),
/// DimensionMismatch, LineOnSurface, InterpolationDegenerate.
InvolutionRecord bertini(const CubicSurface& X, const ClosedPoint& Q);

/// Ideal generated by the forms of degree <= max_degree in the target
/// coordinates that vanish on f(V(source)); `source` defaults to <F>.
/// Minimal generators, degree by degree.
PolyIdeal image_variety(const RationalMap& f, int max_degree = 3);
PolyIdeal image_variety(const RationalMap& f, const PolyIdeal& source, int max_degree);
/// Closure of f(X) by elimination from <F, a_i - s f_i>.  Refuses maps of
/// degree above `degree_cap` with EliminationOverflow.
PolyIdeal image_variety_elimination(const RationalMap& f, int degree_cap = 2);

/// Coordinates making f agree with `target` on X: sigma = C e with
/// sigma_i target_j - sigma_j target_i divisible by F.  Returns the rows of
/// C, or an empty list if no such change exists.
std::vector<QVector> match_coordinates(const RationalMap& f, const std::vector<QMultiPoly>& target);

}  // namespace halphen
