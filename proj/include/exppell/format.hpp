#ifndef EXPPELL_FORMAT_HPP
#define EXPPELL_FORMAT_HPP

#include <string>

#include "exppell/exppoly.hpp"

namespace exppell {

/// Text format, e.g. `2*z^2 - 1`, `(1/2 + 3i)*z`, `z*exp(z^2) + exp(-z)`.
/// Grammar (documented in the README):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := rat | 'i' | 'z' | 'exp' '(' expr ')' | '(' expr ')'
///   rat    := nat ['/' nat] ['i']
/// parse/print round-trips identically on canonical forms.

ExpPoly parse_exppoly(const std::string& text);
/// Like parse_exppoly but rejects genuine exponential terms.
Poly parse_poly(const std::string& text);

std::string to_string(const GRat& c);
std::string to_string(const Poly& p);
std::string to_string(const ExpPoly& e);

}  // namespace exppell

#endif
