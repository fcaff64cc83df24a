#pragma once

#include "germcq/rational.hpp"

#include <vector>

namespace germcq {

using RatMatrix = std::vector<RationalVector>;

/// Maximize c.x subject to A x <= b, x >= 0, where every b_i >= 0 so the
/// slack basis is feasible from the start. Bland's rule throughout, exact
/// rational pivots. The feasible set must be bounded in the optimizing
/// direction (all callers here box their variables).
struct LpSolution {
    Rat optimum;
    RationalVector x;
};

LpSolution simplex_max(const RationalVector& c, const RatMatrix& a,
                       const RationalVector& b);

/// Row rank by Gaussian elimination over the rationals.
int rank(RatMatrix m);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<RationalVector> nullspace(const RatMatrix& m, int ncols);

}  // namespace germcq
