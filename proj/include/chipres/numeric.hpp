#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chipres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Int& v) { return v.sign(); }
inline int sign(const Rat& v) { return num(v).sign(); }

// ceil(a / b) for exact integers, b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

inline Int floor_rat(const Rat& r) {
    Int q = num(r) / den(r);
    if (num(r) < 0 && num(r) % den(r) != 0) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace chipres
