#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace accsim {

// All load accounting is exact. cpp_rational keeps numerator/denominator in
// lowest terms automatically.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational_pow(const Rational& base, int exp) {
    Rational out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace accsim
