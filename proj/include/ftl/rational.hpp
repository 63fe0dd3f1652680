#pragma once

#include <gmpxx.h>

#include <string>

namespace ftl {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace ftl
