#include "germcq/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace germcq {

std::string rat_to_string(const Rat& x) {
    return x.str();
}

Rat rat_from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rat(t);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

Rat rat_from_double(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // Continued fraction expansion with bounded denominator.
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0 || p2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    return neg ? -r : r;
}

}  // namespace germcq
