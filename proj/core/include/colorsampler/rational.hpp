#pragma once

#include <gmpxx.h>

#include <string>

namespace colorsampler {

/// Exact rational arithmetic (GMP).
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace colorsampler
