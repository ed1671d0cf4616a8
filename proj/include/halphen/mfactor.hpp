#pragma once

#include <utility>
#include <vector>

#include "halphen/poly.hpp"

namespace halphen {

/// gcd over Q of multivariate polynomials, normalized by `primitive`.
QMultiPoly poly_gcd(const QMultiPoly& a, const QMultiPoly& b);

struct MFactor {
  QMultiPoly factor;
  int multiplicity = 1;
};

/// Irreducible factors over Q (Kronecker substitution, then recombination
/// of the univariate factors).  Factors are primitive; constants dropped.
std::vector<MFactor> factor_poly(const QMultiPoly& p);

}  // namespace halphen
