#pragma once

#include "germcq/polynomial.hpp"

#include <vector>

namespace germcq {

/// Constraint germ at the origin: q inequality components g (g <= 0) and
/// r equality components h (h = 0), all polynomials in the same n variables.
/// Every h component must vanish at 0.
struct ConstraintGerm {
    int n = 0;
    std::vector<Polynomial> g;
    std::vector<Polynomial> h;

    int q() const { return static_cast<int>(g.size()); }
    int r() const { return static_cast<int>(h.size()); }

    void check() const;
};

struct ActiveSet {
    std::vector<int> indices;  // 1-based positions j with g_j(0) = 0
    bool feasible = true;      // all g_j(0) <= 0
};

ActiveSet active_set(const ConstraintGerm& germ);

}  // namespace germcq
