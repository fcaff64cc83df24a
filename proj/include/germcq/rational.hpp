#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace germcq {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rat>;

inline int sign(const Rat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline Rat dot(const RationalVector& a, const RationalVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

/// Nearest rational with denominator at most `max_den` (continued fractions).
Rat rat_from_double(double x, long max_den = 1 << 20);

}  // namespace germcq
