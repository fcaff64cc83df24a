#include "germcq/cq_direct.hpp"

#include <stdexcept>

namespace germcq {

namespace {

RationalVector origin(int n) {
    return RationalVector(n, Rat(0));
}

void require_feasible(const ConstraintGerm& germ, const ActiveSet& as) {
    if (!as.feasible)
        throw std::invalid_argument("germ is infeasible: some g_j(0) > 0");
    germ.check();
}

}  // namespace

RatMatrix active_jacobian(const ConstraintGerm& germ) {
    ActiveSet as = active_set(germ);
    RatMatrix rows;
    RationalVector zero = origin(germ.n);
    for (int j : as.indices) rows.push_back(germ.g[j - 1].gradient_at(zero));
    for (const auto& hj : germ.h) rows.push_back(hj.gradient_at(zero));
    return rows;
}

bool licq(const ConstraintGerm& germ) {
    ActiveSet as = active_set(germ);
    require_feasible(germ, as);
    RatMatrix rows = active_jacobian(germ);
    if (rows.empty()) return true;
    return rank(rows) == static_cast<int>(rows.size());
}

MfcqResult mfcq(const ConstraintGerm& germ) {
    ActiveSet as = active_set(germ);
    require_feasible(germ, as);
    const int n = germ.n;
    const int r = germ.r();
    RationalVector zero = origin(n);

    MfcqResult result;
    RatMatrix dh;
    for (const auto& hj : germ.h) dh.push_back(hj.gradient_at(zero));
    if (r > 0 && rank(dh) < r) return result;  // singular equality block

    // Directions satisfying dh(0) d = 0, written as d = N z.
    std::vector<RationalVector> nsbasis;
    if (r > 0) {
        nsbasis = nullspace(dh, n);
    } else {
        for (int i = 0; i < n; ++i) {
            RationalVector e(n, Rat(0));
            e[i] = 1;
            nsbasis.push_back(e);
        }
    }
    const int dim = static_cast<int>(nsbasis.size());
    if (dim == 0) {
        // Only d = 0 remains; it is an MF-vector exactly when nothing is active.
        if (as.indices.empty()) {
            result.holds = true;
            result.witness = zero;
        }
        return result;
    }

    // max t  s.t.  grad(g_j).(N z) + t <= 0 for active j,
    //              -1 <= (N z)_i <= 1,  0 <= t <= 1.
    // Free z is split as z = zp - zm. Variable layout: [zp | zm | t].
    const int nv = 2 * dim + 1;
    RationalVector cost(nv, Rat(0));
    cost[nv - 1] = 1;
    RatMatrix a;
    RationalVector b;
    auto push_row = [&](const RationalVector& wrt_z, const Rat& tcoef, const Rat& rhs) {
        RationalVector row(nv, Rat(0));
        for (int j = 0; j < dim; ++j) {
            row[j] = wrt_z[j];
            row[dim + j] = -wrt_z[j];
        }
        row[nv - 1] = tcoef;
        a.push_back(row);
        b.push_back(rhs);
    };
    for (int j : as.indices) {
        RationalVector grad = germ.g[j - 1].gradient_at(zero);
        RationalVector wrt_z(dim, Rat(0));
        for (int t = 0; t < dim; ++t) wrt_z[t] = dot(grad, nsbasis[t]);
        push_row(wrt_z, Rat(1), Rat(0));
    }
    for (int i = 0; i < n; ++i) {
        RationalVector wrt_z(dim, Rat(0));
        for (int t = 0; t < dim; ++t) wrt_z[t] = nsbasis[t][i];
        push_row(wrt_z, Rat(0), Rat(1));  // (Nz)_i <= 1
        for (auto& v : wrt_z) v = -v;
        push_row(wrt_z, Rat(0), Rat(1));  // -(Nz)_i <= 1
    }
    {
        RationalVector none(dim, Rat(0));
        push_row(none, Rat(1), Rat(1));  // t <= 1
    }

    LpSolution sol = simplex_max(cost, a, b);
    if (sol.optimum <= 0) return result;
    result.holds = true;
    RationalVector d(n, Rat(0));
    for (int t = 0; t < dim; ++t) {
        Rat zt = sol.x[t] - sol.x[dim + t];
        for (int i = 0; i < n; ++i) d[i] += zt * nsbasis[t][i];
    }
    result.witness = d;
    return result;
}

}  // namespace germcq
