#include "germcq/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace germcq {

std::optional<RatMatrix> invert(const RatMatrix& m) {
    const int n = static_cast<int>(m.size());
    RatMatrix a = m;
    RatMatrix inv(n, RationalVector(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument("matrix is not square");
        inv[i][i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i) {
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

KgElement KgElement::identity(int n, int q, int r) {
    KgElement e;
    e.phi.assign(n, RationalVector(n, Rat(0)));
    for (int i = 0; i < n; ++i) e.phi[i][i] = 1;
    e.scale_perm.assign(q, RationalVector(q, Rat(0)));
    for (int i = 0; i < q; ++i) e.scale_perm[i][i] = 1;
    e.mix.assign(q, std::vector<Polynomial>(r, Polynomial(n)));
    e.eq_mix.assign(r, std::vector<Polynomial>(r, Polynomial(n)));
    for (int i = 0; i < r; ++i) e.eq_mix[i][i] = Polynomial::constant(n, 1);
    return e;
}

namespace {

void check_scale_perm(const RatMatrix& c, int q) {
    if (static_cast<int>(c.size()) != q)
        throw std::invalid_argument("scale_perm has wrong shape");
    std::vector<int> col_used(q, 0);
    for (int i = 0; i < q; ++i) {
        if (static_cast<int>(c[i].size()) != q)
            throw std::invalid_argument("scale_perm has wrong shape");
        int nonzero = 0;
        for (int j = 0; j < q; ++j) {
            if (c[i][j] == 0) continue;
            if (c[i][j] < 0)
                throw std::invalid_argument("scale_perm entries must be positive");
            ++nonzero;
            ++col_used[j];
        }
        if (nonzero != 1)
            throw std::invalid_argument("scale_perm must have one entry per row");
    }
    for (int j = 0; j < q; ++j)
        if (col_used[j] != 1)
            throw std::invalid_argument("scale_perm must have one entry per column");
}

}  // namespace

ConstraintGerm apply_kg(const KgElement& e, const ConstraintGerm& germ) {
    germ.check();
    const int n = germ.n, q = germ.q(), r = germ.r();
    if (static_cast<int>(e.phi.size()) != n)
        throw std::invalid_argument("phi has wrong shape");
    check_scale_perm(e.scale_perm, q);
    if (static_cast<int>(e.mix.size()) != q ||
        (q > 0 && static_cast<int>(e.mix[0].size()) != r))
        throw std::invalid_argument("mix block has wrong shape");
    if (static_cast<int>(e.eq_mix.size()) != r)
        throw std::invalid_argument("eq_mix block has wrong shape");
    if (r > 0) {
        RatMatrix a0(r, RationalVector(r, Rat(0)));
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(e.eq_mix[i].size()) != r)
                throw std::invalid_argument("eq_mix block has wrong shape");
            for (int j = 0; j < r; ++j) a0[i][j] = e.eq_mix[i][j].constant_term();
        }
        if (!invert(a0))
            throw std::invalid_argument("eq_mix is singular at the origin");
    }
    auto phi_inv = invert(e.phi);
    if (!phi_inv) throw std::invalid_argument("phi is singular");

    // Substitution x_t -> row t of phi^{-1} applied to x.
    std::vector<Polynomial> sub;
    for (int t = 0; t < n; ++t) {
        Polynomial row(n);
        for (int s = 0; s < n; ++s)
            if ((*phi_inv)[t][s] != 0)
                row = row + Polynomial::monomial(n, s + 1, 1, (*phi_inv)[t][s]);
        sub.push_back(row);
    }

    ConstraintGerm out;
    out.n = n;
    for (int i = 0; i < q; ++i) {
        Polynomial acc(n);
        for (int j = 0; j < q; ++j)
            if (e.scale_perm[i][j] != 0) acc = acc + e.scale_perm[i][j] * germ.g[j];
        for (int j = 0; j < r; ++j) acc = acc + e.mix[i][j] * germ.h[j];
        out.g.push_back(acc.substitute(sub));
    }
    for (int i = 0; i < r; ++i) {
        Polynomial acc(n);
        for (int j = 0; j < r; ++j) acc = acc + e.eq_mix[i][j] * germ.h[j];
        out.h.push_back(acc.substitute(sub));
    }
    return out;
}

namespace {

// Largest-index variable in which the component has a nonzero constant-
// coefficient linear term; the canonical choice for elimination.
int pick_solved_variable(const Polynomial& h) {
    for (int t = h.nvars(); t >= 1; --t)
        if (h.linear_coeff(t) != 0) return t;
    return 0;
}

bool linear_in_variable(const Polynomial& h, int t) {
    for (const auto& [e, c] : h.terms()) {
        (void)c;
        if (e[t - 1] > 1) return false;
        if (e[t - 1] == 1 && total_degree(e) > 1) return false;
    }
    return true;
}

// x_t = s(x_others) solving h = 0 near 0; exact when h is linear in x_t,
// otherwise a truncated series of the given order.
Polynomial solve_for_variable(const Polynomial& h, int t, int order) {
    const int n = h.nvars();
    Rat c = h.linear_coeff(t);
    if (c == 0) throw std::invalid_argument("component has no unit linear part");
    auto subst_t = [&](const Polynomial& value, int cap) {
        std::vector<Polynomial> sub;
        for (int u = 1; u <= n; ++u)
            sub.push_back(u == t ? value : Polynomial::variable(n, u));
        return h.substitute(sub, cap);
    };
    if (linear_in_variable(h, t)) {
        Polynomial rest = h - Polynomial::monomial(n, t, 1, c);
        return rest * (Rat(-1) / c);
    }
    Polynomial s(n);
    for (int it = 0; it <= order; ++it) {
        Polynomial residual = subst_t(s, order);
        s = s - residual * (Rat(1) / c);
        s = s.truncate_jet(order);
    }
    if (!subst_t(s, order).is_zero())
        throw std::logic_error("series elimination failed to stabilize");
    return s;
}

}  // namespace

ConstraintGerm reduce(const ConstraintGerm& germ, const ReductionPlan& plan) {
    germ.check();
    ActiveSet as = active_set(germ);
    if (!as.feasible) throw std::invalid_argument("germ is infeasible");
    for (int j : plan.drop_inequalities) {
        if (j < 1 || j > germ.q()) throw std::invalid_argument("drop index out of range");
        if (germ.g[j - 1].constant_term() >= 0)
            throw std::invalid_argument("cannot drop an active inequality");
    }
    {
        RatMatrix rows;
        RationalVector zero(germ.n, Rat(0));
        for (int i : plan.eliminate_equalities) {
            if (i < 1 || i > germ.r())
                throw std::invalid_argument("eliminate index out of range");
            rows.push_back(germ.h[i - 1].gradient_at(zero));
        }
        if (!rows.empty() && rank(rows) < static_cast<int>(rows.size()))
            throw std::invalid_argument("eliminated equalities have dependent differentials");
    }

    ConstraintGerm cur;
    cur.n = germ.n;
    std::vector<int> keep_tag;  // original 1-based h index, 0 once consumed
    for (int j = 1; j <= germ.q(); ++j) {
        if (std::find(plan.drop_inequalities.begin(), plan.drop_inequalities.end(), j) ==
            plan.drop_inequalities.end())
            cur.g.push_back(germ.g[j - 1]);
    }
    for (int i = 1; i <= germ.r(); ++i) {
        cur.h.push_back(germ.h[i - 1]);
        keep_tag.push_back(i);
    }

    std::vector<int> order = plan.eliminate_equalities;
    std::sort(order.begin(), order.end());
    for (int target : order) {
        int pos = -1;
        for (std::size_t i = 0; i < keep_tag.size(); ++i)
            if (keep_tag[i] == target) pos = static_cast<int>(i);
        if (pos < 0) throw std::logic_error("eliminated component lost");
        Polynomial hi = cur.h[pos];
        int t = pick_solved_variable(hi);
        if (t == 0)
            throw std::invalid_argument("eliminated equality lost its unit linear part");
        Polynomial s = solve_for_variable(hi, t, plan.series_order);
        bool exact = linear_in_variable(hi, t);
        int cap = exact ? -1 : plan.series_order;
        std::vector<Polynomial> sub;
        for (int u = 1; u <= cur.n; ++u)
            sub.push_back(u == t ? s : Polynomial::variable(cur.n, u));
        ConstraintGerm next;
        next.n = cur.n - 1;
        for (const auto& p : cur.g)
            next.g.push_back(p.substitute(sub, cap).drop_variable(t));
        std::vector<int> next_tag;
        for (std::size_t i = 0; i < cur.h.size(); ++i) {
            if (static_cast<int>(i) == pos) continue;
            next.h.push_back(cur.h[i].substitute(sub, cap).drop_variable(t));
            next_tag.push_back(keep_tag[i]);
        }
        cur = std::move(next);
        keep_tag = std::move(next_tag);
    }
    return cur;
}

}  // namespace germcq
