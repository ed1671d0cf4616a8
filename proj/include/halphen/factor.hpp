#pragma once

#include <vector>

#include "halphen/upoly.hpp"

namespace halphen {

struct QFactor {
  QPoly factor;  // monic, irreducible over Q
  int multiplicity = 1;
};

/// Factorization over Q into monic irreducibles, ordered by degree then by
/// coefficients.  Squarefree decomposition followed by Zassenhaus
/// (Cantor-Zassenhaus modulo a small prime, Hensel lifting, recombination).
/// Throws HalphenError(ZeroPolynomial) for p = 0.
std::vector<QFactor> factor(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace halphen
