#pragma once

#include <string>
#include <string_view>

#include "polymat/ideal.hpp"

namespace polymat {

/// Parse the ideal text format:
///
///     ring <n>
///     x1*x2, x2^2*x3
///     x3
///
/// The `ring` header comes first; generators follow, one or more per line,
/// comma separated. Each generator is a `*`-separated product of `x<i>` or
/// `x<i>^<e>` factors with 1-based indices and e >= 1. Blank lines and `#`
/// comments are ignored. Throws ParseError with a 1-based line/column.
MonomialIdeal parse_ideal(std::string_view text);

/// Parse a single generator expression like "x1*x3^2" against a known ring
/// dimension.
Monomial parse_monomial(std::string_view text, int n);

std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);

/// {"n": int, "generators": [[e1,...,en], ...]} with generators in canonical
/// order.
std::string ideal_json(const MonomialIdeal& ideal);

}  // namespace polymat
