#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace websym {

/// Exact rational scalar. Always kept canonical (lowest terms, positive
/// denominator) by construction.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign(const Rat& q) { return sgn(q); }

/// Exact integer power; `e` may be negative (base must be nonzero then).
Rat pow_rat(const Rat& base, long e);

/// Exact n-th root of a nonnegative rational, if one exists.
std::optional<Rat> exact_root(const Rat& base, unsigned long n);

inline std::string to_string(const Rat& q) { return q.get_str(); }

/// Parses "n" or "n/d" with optional leading '-'. Returns nullopt on junk.
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace websym
