#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace netforge::algebra {

using Int = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);

}  // namespace netforge::algebra
