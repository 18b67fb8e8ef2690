#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace duality {

// Exact arbitrary-precision rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the
// canonical form the rest of the engine relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace duality
