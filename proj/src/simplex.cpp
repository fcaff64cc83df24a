#include "germcq/simplex.hpp"

#include <stdexcept>

namespace germcq {

LpSolution simplex_max(const RationalVector& c, const RatMatrix& a,
                       const RationalVector& b) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("row size mismatch");
        if (b[i] < 0) throw std::invalid_argument("simplex_max needs b >= 0");
    }
    // Tableau: m rows of [A | I | b], objective row of reduced costs.
    const int total = n + m;
    std::vector<RationalVector> t(m, RationalVector(total + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
    }
    RationalVector z(total + 1, Rat(0));
    for (int j = 0; j < n; ++j) z[j] = c[j];
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        // Bland: entering column = smallest index with positive reduced cost.
        int enter = -1;
        for (int j = 0; j < total; ++j) {
            if (z[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        // Leaving row: minimum ratio, ties broken by smallest basis index.
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("simplex_max: unbounded objective");
        // Pivot.
        Rat piv = t[leave][enter];
        for (int j = 0; j <= total; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rat f = z[enter];
            for (int j = 0; j <= total; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution sol;
    sol.optimum = -z[total];
    sol.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) sol.x[basis[i]] = t[i][total];
    return sol;
}

int rank(RatMatrix m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[r][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<RationalVector> nullspace(const RatMatrix& m, int ncols) {
    // Reduced row echelon form, then read the free-variable parametrization.
    RatMatrix a = m;
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < ncols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        Rat p = a[r][col];
        for (int j = 0; j < ncols; ++j) a[r][j] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(ncols, Rat(0));
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -a[i][free];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace germcq
