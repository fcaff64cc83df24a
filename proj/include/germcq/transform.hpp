#pragma once

#include "germcq/germ.hpp"
#include "germcq/simplex.hpp"

#include <vector>

namespace germcq {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Structure-preserving change of constraint: linear source change phi,
/// generalized permutation scale_perm on the inequality block, polynomial
/// mixing of equalities into inequalities, and an invertible-at-0 polynomial
/// recombination of the equalities.
struct KgElement {
    RatMatrix phi;        // n x n, invertible
    RatMatrix scale_perm; // q x q, one positive entry per row and column
    PolyMatrix mix;       // q x r
    PolyMatrix eq_mix;    // r x r, constant part invertible

    static KgElement identity(int n, int q, int r);
};

/// (g', h') with g' o phi = scale_perm * g + mix * h and
/// h' o phi = eq_mix * h.
ConstraintGerm apply_kg(const KgElement& e, const ConstraintGerm& germ);

/// Drop inactive inequalities and eliminate equalities with independent
/// differentials by solving one variable out of each, exactly when the
/// component is linear in that variable and by truncated series otherwise.
struct ReductionPlan {
    std::vector<int> drop_inequalities;    // 1-based, g_j(0) < 0 required
    std::vector<int> eliminate_equalities; // 1-based, dh(0) rows independent
    int series_order = 6;                  // exceeds every catalog determinacy
};

ConstraintGerm reduce(const ConstraintGerm& germ, const ReductionPlan& plan);

std::optional<RatMatrix> invert(const RatMatrix& m);

}  // namespace germcq
