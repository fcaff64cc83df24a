#include "germcq/codim.hpp"

#include <map>
#include <stdexcept>

namespace germcq {

namespace {

void enumerate_monomials(int n, int order, Exponents& cur, int var, int left,
                         std::vector<Exponents>& out) {
    if (var == n) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= left; ++e) {
        cur[var] = e;
        enumerate_monomials(n, order, cur, var + 1, left - e, out);
    }
    cur[var] = 0;
}

}  // namespace

JetSpace JetSpace::make(int n, int components, int order) {
    JetSpace js;
    js.n = n;
    js.components = components;
    js.order = order;
    Exponents cur(n, 0);
    enumerate_monomials(n, order, cur, 0, order, js.monomials);
    std::sort(js.monomials.begin(), js.monomials.end(), GradedLexLess{});
    return js;
}

int JetSpace::monomial_index(const Exponents& e) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), e, GradedLexLess{});
    if (it == monomials.end() || *it != e)
        throw std::invalid_argument("monomial outside jet space");
    return static_cast<int>(it - monomials.begin());
}

namespace {

SparseColumn column_of(const JetSpace& jets, int component, const Polynomial& p) {
    SparseColumn col;
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) > jets.order) continue;
        col.emplace_back(jets.slot(component, jets.monomial_index(e)), c);
    }
    return col;
}

}  // namespace

std::vector<SparseColumn> tangent_generators(const ConstraintGerm& germ, int k,
                                             const JetSpace& jets) {
    germ.check();
    const int q = germ.q(), r = germ.r();
    std::vector<SparseColumn> cols;
    std::vector<Polynomial> monos;
    for (const auto& e : jets.monomials) {
        Polynomial m(germ.n);
        m.add_term(e, 1);
        monos.push_back(m);
    }
    // Jacobian columns: m * sum_i (d comp_i / d x_j) e_i.
    for (const auto& m : monos) {
        for (int j = 1; j <= germ.n; ++j) {
            SparseColumn col;
            for (int i = 0; i < q; ++i) {
                Polynomial part = (m * germ.g[i].partial(j)).truncate_jet(k);
                for (const auto& [e, c] : part.terms())
                    col.emplace_back(jets.slot(i, jets.monomial_index(e)), c);
            }
            for (int i = 0; i < r; ++i) {
                Polynomial part = (m * germ.h[i].partial(j)).truncate_jet(k);
                for (const auto& [e, c] : part.terms())
                    col.emplace_back(jets.slot(q + i, jets.monomial_index(e)), c);
            }
            if (!col.empty()) cols.push_back(std::move(col));
        }
    }
    // Equality multiples reach every component slot.
    for (int i = 0; i < r; ++i) {
        for (int slot = 0; slot < q + r; ++slot) {
            for (const auto& m : monos) {
                Polynomial part = (m * germ.h[i]).truncate_jet(k);
                if (part.is_zero()) continue;
                cols.push_back(column_of(jets, slot, part));
            }
        }
    }
    // Inequality multiples stay in their own slot.
    for (int j = 0; j < q; ++j) {
        for (const auto& m : monos) {
            Polynomial part = (m * germ.g[j]).truncate_jet(k);
            if (part.is_zero()) continue;
            cols.push_back(column_of(jets, j, part));
        }
    }
    return cols;
}

std::vector<SparseColumn> tangent_generators(const ConstraintGerm& germ, int k) {
    JetSpace jets = JetSpace::make(germ.n, germ.q() + germ.r(), k);
    return tangent_generators(germ, k, jets);
}

namespace {

// Incremental rank of a stream of sparse columns.
class RankAccumulator {
  public:
    explicit RankAccumulator(int dim) : dim_(dim) {}

    void add(const SparseColumn& col) {
        RationalVector v(dim_, Rat(0));
        for (const auto& [i, c] : col) v[i] += c;
        for (const auto& [piv, row] : basis_) {
            if (v[piv] == 0) continue;
            Rat f = v[piv];
            for (int j = 0; j < dim_; ++j) v[j] -= f * row[j];
        }
        int piv = -1;
        for (int j = 0; j < dim_; ++j) {
            if (v[j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv < 0) return;
        Rat lead = v[piv];
        for (int j = 0; j < dim_; ++j) v[j] /= lead;
        basis_.emplace(piv, std::move(v));
    }

    int rank() const { return static_cast<int>(basis_.size()); }

  private:
    int dim_;
    std::map<int, RationalVector> basis_;
};

}  // namespace

std::string verdict_name(CodimVerdict v) {
    switch (v) {
        case CodimVerdict::Finite: return "FINITE";
        case CodimVerdict::Growing: return "GROWING";
        case CodimVerdict::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

CodimReport codim_sequence(const ConstraintGerm& germ, int k_max) {
    if (k_max < 3) throw std::invalid_argument("k_max must be at least 3");
    CodimReport report;
    for (int k = 1; k <= k_max; ++k) {
        JetSpace jets = JetSpace::make(germ.n, germ.q() + germ.r(), k);
        RankAccumulator acc(jets.dim());
        for (const auto& col : tangent_generators(germ, k, jets)) acc.add(col);
        report.codims.push_back(jets.dim() - acc.rank());
    }
    const auto& c = report.codims;
    const std::size_t m = c.size();
    if (c[m - 1] == c[m - 2] && c[m - 2] == c[m - 3]) {
        report.verdict = CodimVerdict::Finite;
        report.value = c[m - 1];
    } else if (c[m - 1] > c[m - 2] && c[m - 2] > c[m - 3]) {
        report.verdict = CodimVerdict::Growing;
    } else {
        report.verdict = CodimVerdict::Undetermined;
    }
    return report;
}

}  // namespace germcq
