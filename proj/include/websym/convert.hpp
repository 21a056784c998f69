#pragma once

#include <optional>

#include "websym/expr.hpp"
#include "websym/ratfunc.hpp"

namespace websym {

/// Converts an expression holding no ln, exp or fractional power to a
/// rational function in lowest terms. Returns nullopt (NotRational) when the
/// expression leaves the rational-function field; that is an answer, not an
/// error.
std::optional<RatFunc> to_ratfunc(const Expr& e);

/// Converts a polynomial expression; nullopt when it is rational but not
/// polynomial, or not rational at all.
std::optional<MPoly> to_mpoly(const Expr& e);

}  // namespace websym
