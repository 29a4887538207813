#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mspkit {

// Exact rational arithmetic over arbitrary-precision integers.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint rat_num(const rational& r) { return boost::multiprecision::numerator(r); }
inline bigint rat_den(const rational& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_str(const rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace mspkit
