#pragma once

#include <gmpxx.h>

#include <string>

namespace clifford {

/// Exact scalar. GMP keeps every value in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// `n` or `n/d`.
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace clifford
