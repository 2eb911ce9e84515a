#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace defco {

/// Exact rational arithmetic for the charge ledger. Denominators are
/// unbounded: even splits happen over arbitrary recipient counts, so a
/// fixed-denominator representation would not do.
using Rational = boost::multiprecision::cpp_rational;

/// Serialized form is always "p/q", including "-8/1" for integers.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text);

}  // namespace defco
