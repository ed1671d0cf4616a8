#pragma once

#include <vector>

#include "halphen/monomial.hpp"
#include "halphen/poly.hpp"

namespace halphen {

/// Reduced Gröbner basis over Q.  Buchberger with the sugar selection
/// strategy and the Gebauer-Möller criteria; every stored polynomial is
/// monic with respect to `order`.
class GroebnerBasis {
public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(const std::vector<QMultiPoly>& generators, int nvars,
                               MonomialOrder order = MonomialOrder::grevlex());
  /// Trusts `basis` to be a Gröbner basis already; only minimalizes and
  /// inter-reduces it.
  static GroebnerBasis from_basis(const std::vector<QMultiPoly>& basis, int nvars,
                                  MonomialOrder order = MonomialOrder::grevlex());

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  /// The basis in canonical (grevlex-sorted) form, ordered by increasing
  /// leading monomial in `order`.
  std::vector<QMultiPoly> polys() const;
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;

  /// Remainder of f on division by the basis (fully reduced).
  QMultiPoly normal_form(const QMultiPoly& f) const;
  bool contains(const QMultiPoly& f) const { return normal_form(f).is_zero(); }

  /// Polynomial stored sorted by decreasing `order`.
  struct OPoly {
    std::vector<Monomial> mons;
    std::vector<Rational> coefs;
    unsigned sugar = 0;
    bool empty() const { return mons.empty(); }
    const Monomial& lm() const { return mons.front(); }
  };

private:
  int nvars_ = 0;
  MonomialOrder order_;
  std::vector<OPoly> basis_;
};

/// Hilbert-series numerator of k[x_0..x_{n-1}]/M for a monomial ideal M,
/// as integer coefficients of powers of T (denominator (1-T)^n).
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& generators, int nvars);

}  // namespace halphen
