#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "halphen/poly.hpp"

namespace halphen {

/// Parse a polynomial over Q.  Grammar: sums of products of powers of
/// variables, integer or rational literals and parenthesized expressions;
/// `*` is optional between a coefficient and a monomial; `/` only by a
/// nonzero constant.  Example: `t^3 - x^3 + y^2*z + 2*x*z^2 - z^3`.
/// Throws ParseError.
QMultiPoly parse_poly(std::string_view text,
                      const std::vector<std::string>& names = {"x", "y", "z", "t"});

std::vector<QMultiPoly> parse_poly_list(const std::vector<std::string>& texts,
                                        const std::vector<std::string>& names = {"x", "y", "z",
                                                                                 "t"});

inline std::string str(const QMultiPoly& p) { return p.to_string(); }

}  // namespace halphen
