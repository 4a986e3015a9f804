#pragma once

#include <string>
#include <string_view>

#include "bil/ring/ring_context.hpp"

namespace bil::ring {

/// Grammar (whitespace insignificant):
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coeff | coeff '*' monos | monos
///   monos := var ['^' exp] ('*' var ['^' exp])*
///   var   := 'x' digit+
/// Errors: SyntaxError (with a byte offset), UnknownVariable, and NonHomogeneous
/// when require_homogeneous is set.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring,
                            bool require_homogeneous = false);

/// Canonical form: terms in decreasing degrevlex order, coefficients as
/// symmetric representatives, e.g. "x0^2*x1 - 3*x2*x3^2".
std::string print_polynomial(const Polynomial& f, const RingContext& ring);
std::string print_monomial(const Monomial& m, int num_vars);

}  // namespace bil::ring
