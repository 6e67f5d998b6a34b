#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace permdiag {

/// Exact nonnegative counts. Everything in the library counts with arbitrary
/// precision; the Schröder numbers alone overflow 64 bits near n = 30.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

inline Count count_from_decimal(const std::string& s) { return Count(s); }

}  // namespace permdiag
