#include "germcq/cones.hpp"

#include "germcq/rng.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace germcq {

namespace {

bool vec_is_zero(const RationalVector& v) {
    return is_zero_vector(v);
}

/// Positive rescale to a primitive integer vector (orientation preserved).
RationalVector normalize_ray(const RationalVector& v) {
    Int lcm_den = 1;
    for (const auto& x : v) {
        Int d = denominator(x);
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    Int g = 0;
    std::vector<Int> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        Int a = ints[i] < 0 ? Int(-ints[i]) : ints[i];
        g = gcd(g, a);
    }
    if (g == 0) g = 1;
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

struct DdRay {
    RationalVector v;
    std::set<int> tight;  // inserted-row indices where the row vanishes on v
};

struct DdState {
    int n;
    int rows_inserted = 0;
    std::vector<RationalVector> lineality;
    std::vector<DdRay> rays;

    explicit DdState(int dim) : n(dim) {
        for (int i = 0; i < n; ++i) {
            RationalVector e(n, Rat(0));
            e[i] = 1;
            lineality.push_back(e);
        }
    }

    void insert(const RationalVector& a, bool is_equality) {
        const int row_id = rows_inserted++;
        if (vec_is_zero(a)) {
            for (auto& r : rays) r.tight.insert(row_id);
            return;
        }
        // Consume one lineality direction if the row sees the lineality space.
        int hit = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (dot(a, lineality[i]) != 0) {
                hit = static_cast<int>(i);
                break;
            }
        }
        if (hit >= 0) {
            RationalVector l = lineality[hit];
            Rat al = dot(a, l);
            lineality.erase(lineality.begin() + hit);
            for (auto& w : lineality) {
                Rat f = dot(a, w) / al;
                for (int i = 0; i < n; ++i) w[i] -= f * l[i];
            }
            for (auto& r : rays) {
                Rat f = dot(a, r.v) / al;
                for (int i = 0; i < n; ++i) r.v[i] -= f * l[i];
                r.v = normalize_ray(r.v);
                r.tight.insert(row_id);
            }
            if (!is_equality) {
                DdRay born;
                born.v = l;
                if (al > 0)
                    for (auto& x : born.v) x = -x;
                born.v = normalize_ray(born.v);
                // Every earlier row vanished on the whole lineality space.
                for (int j = 0; j < row_id; ++j) born.tight.insert(j);
                rays.push_back(std::move(born));
            }
            return;
        }
        // Row vanishes on the lineality space: split the rays.
        std::vector<DdRay> zero, pos, neg;
        for (auto& r : rays) {
            Rat val = dot(a, r.v);
            if (val == 0) {
                r.tight.insert(row_id);
                zero.push_back(std::move(r));
            } else if (val > 0) {
                pos.push_back(std::move(r));
            } else {
                neg.push_back(std::move(r));
            }
        }
        std::vector<DdRay> result = std::move(zero);
        if (!is_equality)
            for (auto& r : neg) result.push_back(r);
        if (!pos.empty() && !neg.empty()) {
            auto adjacent = [&](const DdRay& p, const DdRay& q) {
                std::set<int> common;
                std::set_intersection(p.tight.begin(), p.tight.end(), q.tight.begin(),
                                      q.tight.end(), std::inserter(common, common.begin()));
                auto covers = [&common](const DdRay& other) {
                    return std::includes(other.tight.begin(), other.tight.end(),
                                         common.begin(), common.end());
                };
                for (const auto& other : pos)
                    if (&other != &p && covers(other)) return false;
                for (const auto& other : neg)
                    if (&other != &q && covers(other)) return false;
                for (const auto& other : result)
                    if (covers(other)) return false;
                return true;
            };
            for (const auto& p : pos) {
                for (const auto& q : neg) {
                    if (!adjacent(p, q)) continue;
                    Rat ap = dot(a, p.v), aq = dot(a, q.v);
                    RationalVector w(n, Rat(0));
                    for (int i = 0; i < n; ++i) w[i] = ap * q.v[i] - aq * p.v[i];
                    if (vec_is_zero(w)) continue;
                    DdRay combo;
                    combo.v = normalize_ray(w);
                    std::set_intersection(p.tight.begin(), p.tight.end(), q.tight.begin(),
                                          q.tight.end(),
                                          std::inserter(combo.tight, combo.tight.begin()));
                    combo.tight.insert(row_id);
                    result.push_back(std::move(combo));
                }
            }
        }
        rays = std::move(result);
    }
};

void double_description(PolyhedralCone& cone) {
    if (cone.n > kMaxDoubleDescriptionDim)
        throw std::invalid_argument("double description capped at dimension 12");
    DdState dd(cone.n);
    for (const auto& a : cone.eq) dd.insert(a, true);
    for (const auto& a : cone.le) dd.insert(a, false);
    cone.rays.clear();
    cone.lineality.clear();
    std::set<RationalVector> seen;
    for (const auto& r : dd.rays) {
        if (vec_is_zero(r.v)) continue;
        if (seen.insert(r.v).second) cone.rays.push_back(r.v);
    }
    for (const auto& l : dd.lineality) cone.lineality.push_back(normalize_ray(l));
    cone.has_v = true;
}

}  // namespace

PolyhedralCone PolyhedralCone::from_h(int n, std::vector<RationalVector> le,
                                      std::vector<RationalVector> eq) {
    PolyhedralCone c;
    c.n = n;
    c.le = std::move(le);
    c.eq = std::move(eq);
    c.has_h = true;
    return c;
}

PolyhedralCone PolyhedralCone::from_v(int n, std::vector<RationalVector> rays,
                                      std::vector<RationalVector> lineality) {
    PolyhedralCone c;
    c.n = n;
    c.rays = std::move(rays);
    c.lineality = std::move(lineality);
    c.has_v = true;
    return c;
}

void PolyhedralCone::ensure_v() {
    if (has_v) return;
    if (!has_h) throw std::logic_error("cone has no representation");
    double_description(*this);
}

void PolyhedralCone::ensure_h() {
    if (has_h) return;
    if (!has_v) throw std::logic_error("cone has no representation");
    // H-rows of this cone are the generators of its polar.
    PolyhedralCone p = polar(*this);
    p.ensure_v();
    le = p.rays;
    eq = p.lineality;
    has_h = true;
}

bool PolyhedralCone::member(const RationalVector& d) const {
    if (!has_h) throw std::logic_error("membership needs an H-representation");
    for (const auto& a : le)
        if (dot(a, d) > 0) return false;
    for (const auto& a : eq)
        if (dot(a, d) != 0) return false;
    return true;
}

PolyhedralCone linearized_cone(const ConstraintGerm& germ) {
    ActiveSet as = active_set(germ);
    if (!as.feasible) throw std::invalid_argument("germ is infeasible");
    RationalVector zero(germ.n, Rat(0));
    std::vector<RationalVector> le, eq;
    for (int j : as.indices) {
        RationalVector grad = germ.g[j - 1].gradient_at(zero);
        if (!vec_is_zero(grad)) le.push_back(grad);
    }
    for (const auto& hj : germ.h) {
        RationalVector grad = hj.gradient_at(zero);
        if (!vec_is_zero(grad)) eq.push_back(grad);
    }
    return PolyhedralCone::from_h(germ.n, std::move(le), std::move(eq));
}

PolyhedralCone polar(const PolyhedralCone& cone) {
    PolyhedralCone c = cone;
    c.ensure_v();
    return PolyhedralCone::from_h(c.n, c.rays, c.lineality);
}

bool cone_equal_polyhedral(const PolyhedralCone& a, const PolyhedralCone& b) {
    if (a.n != b.n) return false;
    PolyhedralCone x = a, y = b;
    x.ensure_v();
    x.ensure_h();
    y.ensure_v();
    y.ensure_h();
    auto contained = [](const PolyhedralCone& inner, const PolyhedralCone& outer) {
        for (const auto& r : inner.rays)
            if (!outer.member(r)) return false;
        for (const auto& l : inner.lineality) {
            if (!outer.member(l)) return false;
            RationalVector neg = l;
            for (auto& v : neg) v = -v;
            if (!outer.member(neg)) return false;
        }
        return true;
    };
    return contained(x, y) && contained(y, x);
}

bool member(const ConeDescriptor& cone, const RationalVector& d) {
    if (static_cast<int>(d.size()) != cone.n)
        throw std::invalid_argument("dimension mismatch");
    for (int i : cone.zero_indices)
        if (d[i - 1] != 0) return false;
    for (int i : cone.nonpos_indices)
        if (d[i - 1] > 0) return false;
    if (!cone.quad.is_zero()) {
        Rat v = cone.quad.eval(d);
        if (cone.rel == QuadRel::EQ0 ? v != 0 : v > 0) return false;
    }
    if (cone.excluded) {
        bool outside_zero = true;
        for (int i = 1; i <= cone.n; ++i) {
            bool in_support = std::find(cone.excluded->support.begin(),
                                        cone.excluded->support.end(),
                                        i) != cone.excluded->support.end();
            if (!in_support && d[i - 1] != 0) {
                outside_zero = false;
                break;
            }
        }
        if (outside_zero && cone.excluded->sign_poly.eval(d) > 0) return false;
    }
    return true;
}

bool member_within(const ConeDescriptor& cone, const std::vector<double>& d, double tol) {
    if (static_cast<int>(d.size()) != cone.n)
        throw std::invalid_argument("dimension mismatch");
    for (int i : cone.zero_indices)
        if (std::abs(d[i - 1]) > tol) return false;
    for (int i : cone.nonpos_indices)
        if (d[i - 1] > tol) return false;
    if (!cone.quad.is_zero()) {
        // |Q(d)| / |grad Q(d)| is the first-order distance to the quadric, so
        // the gradient scale turns `tol` into an angular tolerance.
        double v = cone.quad.eval_double(d);
        double gnorm = 0;
        for (double gi : cone.quad.gradient_double(d)) gnorm += gi * gi;
        double scale = std::max(1.0, std::sqrt(gnorm));
        if (cone.rel == QuadRel::EQ0 ? std::abs(v) > tol * scale : v > tol * scale)
            return false;
    }
    if (cone.excluded) {
        bool outside_zero = true;
        for (int i = 1; i <= cone.n; ++i) {
            bool in_support = std::find(cone.excluded->support.begin(),
                                        cone.excluded->support.end(),
                                        i) != cone.excluded->support.end();
            if (!in_support && std::abs(d[i - 1]) > tol) {
                outside_zero = false;
                break;
            }
        }
        if (outside_zero && cone.excluded->sign_poly.eval_double(d) > tol) return false;
    }
    return true;
}

namespace {

ConeDescriptor zero_cone(int n) {
    ConeDescriptor c;
    c.n = n;
    for (int i = 1; i <= n; ++i) c.zero_indices.push_back(i);
    c.quad = Polynomial(n);
    c.rel = QuadRel::LE0;
    return c;
}

ConeDescriptor sign_quad_cone(int n, int zero_upto, int nonpos_from, int nonpos_upto,
                              Polynomial quad, QuadRel rel) {
    ConeDescriptor c;
    c.n = n;
    for (int i = 1; i <= zero_upto; ++i) c.zero_indices.push_back(i);
    for (int i = nonpos_from; i <= nonpos_upto; ++i) c.nonpos_indices.push_back(i);
    c.quad = std::move(quad);
    c.rel = rel;
    return c;
}

void set_exclusion(ConeDescriptor& c, std::vector<int> support, Polynomial p) {
    ExcludedSet ex;
    ex.support = std::move(support);
    ex.sign_poly = std::move(p);
    c.excluded = ex;
}

bool all_eps(const NormalForm& nf, int from, int to, int value) {
    for (int j = from; j <= to; ++j)
        if (nf.eps_at(j) != value) return false;
    return true;
}

// True when the tail eps_from..eps_n all share one sign; that sign goes out.
bool constant_tail(const NormalForm& nf, int from, int* sign_out) {
    if (from > nf.n) return false;
    int s = nf.eps_at(from);
    for (int j = from + 1; j <= nf.n; ++j)
        if (nf.eps_at(j) != s) return false;
    *sign_out = s;
    return true;
}

}  // namespace

ConeDescriptor tangent_cone_descriptor(const NormalForm& nf) {
    require_valid(nf);
    const int n = nf.n, q = nf.q;
    if (nf.is_regular()) {
        ConeDescriptor c;
        c.n = n;
        for (int i = 1; i <= q; ++i) c.nonpos_indices.push_back(i);
        for (int i = q + 1; i <= q + nf.r; ++i) c.zero_indices.push_back(i);
        c.quad = Polynomial(n);
        c.rel = QuadRel::LE0;
        return c;
    }
    if (nf.table == Table::T2 && nf.l1 > 0)
        throw std::invalid_argument(
            "tangent cone for l1 > 0 equals the linearized cone; no sign-quadratic "
            "description applies");
    ConstraintGerm germ = realize(nf);
    const Polynomial& head = nf.table == Table::T2 ? germ.g.back() : germ.h.front();
    Polynomial quad = head.homogeneous_part(2);
    auto mono = [&](int i, int e, const Rat& c) { return Polynomial::monomial(n, i, e, c); };

    if (nf.table == Table::T1) {
        ConeDescriptor c = sign_quad_cone(n, 0, 1, 0, quad, QuadRel::EQ0);
        if (nf.type == "(1,k)") {
            if (nf.k == 2) return c;
            bool plus = all_eps(nf, 2, n, 1), minus = all_eps(nf, 2, n, -1);
            if (nf.k % 2 == 0 && plus) return zero_cone(n);
            if (nf.k % 2 == 1 && (plus || minus))
                set_exclusion(c, {1}, mono(1, 1, plus ? 1 : -1));
            return c;
        }
        // type (2): quad is x3^2 + tail, the cubic block drives the exclusion
        if (all_eps(nf, 4, n, 1)) {
            Polynomial p = mono(1, 3, 1) +
                           Rat(nf.eps_at(2)) * (Polynomial::variable(n, 1) *
                                                Polynomial::variable(n, 2) *
                                                Polynomial::variable(n, 2));
            set_exclusion(c, {1, 2}, p);
        }
        return c;
    }

    if (nf.table == Table::T2) {
        const int l = nf.l;
        ConeDescriptor c = sign_quad_cone(n, l, l + 1, q - 1, quad, QuadRel::LE0);
        if (nf.type == "(1,k)") {
            if (nf.k >= 3 && all_eps(nf, q + 1, n, 1))
                set_exclusion(c, {q}, mono(q, nf.k, nf.eps_at(q)));
            return c;
        }
        if (nf.type == "(2)") {
            if (all_eps(nf, q + 2, n, 1)) {
                Polynomial p = mono(q, 3, 1) +
                               Rat(nf.eps_at(q + 1)) * (Polynomial::variable(n, q) *
                                                        Polynomial::variable(n, q + 1) *
                                                        Polynomial::variable(n, q + 1));
                set_exclusion(c, {q, q + 1}, p);
            }
            return c;
        }
        if (nf.type == "(3,k)") {
            if (nf.k >= 3 && all_eps(nf, q, n, 1))
                set_exclusion(c, {q - 1}, mono(q - 1, nf.k, nf.eps_at(q - 1)));
            return c;
        }
        if (nf.type == "(4,k)") {
            int want = nf.k % 2 == 0 ? 1 : -1;  // makes eps_q d_q^k > 0 on d_q < 0
            if (all_eps(nf, q + 1, n, 1) && nf.eps_at(q) == want)
                set_exclusion(c, {q}, mono(q, 1, -1));
            return c;
        }
        if (nf.type == "(5)") {
            if (nf.eps_at(q - 1) == 1 && all_eps(nf, q + 1, n, 1))
                set_exclusion(c, {q}, mono(q, 3, 1));
            return c;
        }
        if (nf.type == "(7)") {
            if (nf.eps_at(q - 1) == -1 && nf.eps_at(q - 2) == 1 && all_eps(nf, q, n, 1))
                set_exclusion(c, {q - 1}, mono(q - 1, 1, -1));
            return c;
        }
        if (nf.type == "(8)") {
            if (nf.eps_at(q - 2) == -1 && nf.eps_at("p") == 1 && all_eps(nf, q, n, 1))
                set_exclusion(c, {q - 2}, mono(q - 2, 1, -1));
            return c;
        }
        if (nf.type == "(9)") {
            if (nf.eps_at("01") == -1 && nf.eps_at("02") == -1 && all_eps(nf, q + 1, n, 1))
                set_exclusion(c, {q}, mono(q, 1, 1));
            return c;
        }
        // (6) and (10): the full sign-quadratic cone, never an exclusion.
        return c;
    }

    // Mixed rows.
    ConeDescriptor c = sign_quad_cone(n, 0, 1, q, quad, QuadRel::EQ0);
    if (nf.type == "(1,k)") {
        if (nf.k == 2) return c;
        bool collapse = all_eps(nf, 2, n, nf.k % 2 == 0 ? 1 : -1);
        if (collapse) return zero_cone(n);
        return c;
    }
    if (nf.type == "(2)") {
        if (all_eps(nf, 3, n, 1)) set_exclusion(c, {2}, mono(2, 1, 1));
        return c;
    }
    if (nf.type == "(3,k)") {
        if (nf.k % 2 == 0 && all_eps(nf, 3, n, 1)) {
            set_exclusion(c, {2}, mono(2, 1, -nf.eps_at("1")));
        } else if (nf.k % 2 == 1 && nf.eps_at("1") == -1) {
            int tail_sign = 0;
            if (constant_tail(nf, 3, &tail_sign))
                set_exclusion(c, {2}, mono(2, 1, tail_sign));
        }
        return c;
    }
    if (nf.type == "(5)") {
        if (nf.eps_at("2") == -1 && all_eps(nf, 3, n, -1))
            set_exclusion(c, {1}, mono(1, 1, -1));
        return c;
    }
    if (nf.type == "(6)") {
        if (nf.eps_at("2") == -1 && all_eps(nf, 3, n, 1)) return zero_cone(n);
        return c;
    }
    if (nf.type == "(7)") {
        if (nf.eps_at("1") == -1 && nf.eps_at("2") == -1) {
            int tail_sign = 0;
            if (constant_tail(nf, 4, &tail_sign))
                set_exclusion(c, {3}, mono(3, 1, tail_sign));
        }
        return c;
    }
    // (1,k) k = 2, (4), (8): the full sign-quadratic cone.
    return c;
}

namespace {

// Exact PSD test via pivoted symmetric elimination.
bool psd(RatMatrix m) {
    const int n = static_cast<int>(m.size());
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (m[i][i] < 0) return false;
            if (m[i][i] > 0 && piv < 0) piv = i;
        }
        if (piv < 0) {
            // All remaining diagonal entries are 0: PSD forces zero rows.
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (int j = 0; j < n; ++j) {
                    if (done[j]) continue;
                    if (m[i][j] != 0) return false;
                }
            }
            return true;
        }
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == piv) continue;
            Rat f = m[i][piv] / m[piv][piv];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[piv][j];
        }
        for (int j = 0; j < n; ++j) {
            if (j != piv && !done[j]) m[piv][j] = 0;
        }
        done[piv] = true;
    }
    return true;
}

RatMatrix quad_matrix(const Polynomial& quad, int n) {
    RatMatrix m(n, RationalVector(n, Rat(0)));
    for (const auto& [e, c] : quad.terms()) {
        if (total_degree(e) != 2)
            throw std::invalid_argument("descriptor quad must be homogeneous quadratic");
        int i = -1, j = -1;
        for (int t = 0; t < n; ++t) {
            if (e[t] == 2) { i = j = t; break; }
            if (e[t] == 1) {
                if (i < 0) i = t;
                else j = t;
            }
        }
        if (j < 0) j = i;
        if (i == j) m[i][i] += c;
        else {
            m[i][j] += c / 2;
            m[j][i] += c / 2;
        }
    }
    // Doubled convention: quad(d) = 1/2 d^T (2M) d; signs are all that matter.
    for (auto& row : m)
        for (auto& x : row) x *= 2;
    return m;
}

}  // namespace

std::optional<PolyhedralCone> descriptor_as_polyhedral(const ConeDescriptor& cone) {
    const int n = cone.n;
    std::vector<RationalVector> le, eq;
    auto unit = [n](int i, int s) {
        RationalVector v(n, Rat(0));
        v[i - 1] = s;
        return v;
    };
    std::set<int> zero(cone.zero_indices.begin(), cone.zero_indices.end());

    // Quadratic condition with the zero-forced variables substituted away.
    Polynomial q = cone.quad;
    if (!q.is_zero() && !zero.empty()) {
        std::vector<Polynomial> sub;
        for (int i = 1; i <= n; ++i)
            sub.push_back(zero.count(i) ? Polynomial(n) : Polynomial::variable(n, i));
        q = q.substitute(sub);
    }
    if (!q.is_zero()) {
        RatMatrix m = quad_matrix(q, n);
        RatMatrix neg = m;
        for (auto& row : neg)
            for (auto& x : row) x = -x;
        if (psd(m)) {
            // A semidefinite form vanishes exactly on its kernel, so both
            // q = 0 and q <= 0 reduce to the linear system m d = 0.
            for (auto& row : m)
                if (!vec_is_zero(row)) eq.push_back(normalize_ray(row));
        } else if (psd(neg)) {
            if (cone.rel == QuadRel::EQ0)
                for (auto& row : neg)
                    if (!vec_is_zero(row)) eq.push_back(normalize_ray(row));
            // q <= 0 with a NSD form holds everywhere.
        } else {
            return std::nullopt;  // indefinite quadric
        }
    }
    for (int i : cone.zero_indices) eq.push_back(unit(i, 1));
    for (int i : cone.nonpos_indices) le.push_back(unit(i, 1));

    if (cone.excluded) {
        // Only the single-variable rule {d_t != 0 elsewhere-zero, c d_t^k > 0}
        // stays polyhedral, and only when the rest of the cone already pins
        // every other coordinate to 0.
        if (cone.excluded->support.size() != 1) return std::nullopt;
        int t = cone.excluded->support.front();
        PolyhedralCone base = PolyhedralCone::from_h(n, le, eq);
        for (int i = 1; i <= n; ++i) {
            if (i == t) continue;
            RationalVector probe = unit(i, 1);
            RationalVector nprobe = unit(i, -1);
            if (base.member(probe) || base.member(nprobe)) return std::nullopt;
        }
        const Polynomial& p = cone.excluded->sign_poly;
        if (p.is_zero()) return PolyhedralCone::from_h(n, std::move(le), std::move(eq));
        if (p.terms().size() != 1) return std::nullopt;
        const auto& [e, coef] = *p.terms().begin();
        if (e[t - 1] == 0) return std::nullopt;
        if (e[t - 1] % 2 == 1) {
            le.push_back(unit(t, sign(coef)));  // remove the open half-line
        } else {
            if (coef > 0) eq.push_back(unit(t, 1));
        }
    }
    return PolyhedralCone::from_h(n, std::move(le), std::move(eq));
}

namespace {

bool quad_var_is_cross_only(const Polynomial& q, int t) {
    bool appears = false;
    for (const auto& [e, c] : q.terms()) {
        (void)c;
        if (e[t - 1] >= 2) return false;
        if (e[t - 1] == 1) appears = true;
    }
    return appears;
}

std::optional<Rat> pure_square_coeff(const Polynomial& q, int t) {
    Rat diag = 0;
    bool has_square = false;
    for (const auto& [e, c] : q.terms()) {
        if (e[t - 1] == 0) continue;
        if (e[t - 1] == 2 && total_degree(e) == 2) {
            diag = c;
            has_square = true;
        } else {
            return std::nullopt;  // cross term or higher power
        }
    }
    if (!has_square) return std::nullopt;
    return diag;
}

}  // namespace

std::vector<RationalVector> sample_members(const ConeDescriptor& cone, int count,
                                           std::uint64_t seed) {
    const int n = cone.n;
    std::set<RationalVector> seen;
    std::vector<RationalVector> out;
    auto push = [&](const RationalVector& v) {
        if (static_cast<int>(out.size()) >= count) return;
        if (!member(cone, v)) return;
        if (seen.insert(v).second) out.push_back(v);
    };

    push(RationalVector(n, Rat(0)));
    for (int i = 1; i <= n; ++i) {
        for (int s : {-1, 1}) {
            RationalVector v(n, Rat(0));
            v[i - 1] = s;
            push(v);
        }
    }
    for (int i = 1; i <= n && static_cast<int>(out.size()) < count; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int si : {-1, 1}) {
                for (int sj : {-1, 1}) {
                    RationalVector v(n, Rat(0));
                    v[i - 1] = si;
                    v[j - 1] = sj;
                    push(v);
                }
            }
        }
    }

    std::set<int> zero(cone.zero_indices.begin(), cone.zero_indices.end());
    std::set<int> nonpos(cone.nonpos_indices.begin(), cone.nonpos_indices.end());
    // Variables usable for exact repair onto the quadric.
    std::vector<int> cross_only, square_pairs_pos, square_pairs_neg;
    for (int t = 1; t <= n; ++t) {
        if (zero.count(t)) continue;
        if (quad_var_is_cross_only(cone.quad, t)) cross_only.push_back(t);
        if (auto c = pure_square_coeff(cone.quad, t)) {
            if (!nonpos.count(t)) {
                if (*c > 0) square_pairs_pos.push_back(t);
                if (*c < 0) square_pairs_neg.push_back(t);
            }
        }
    }

    Rng rng(seed);
    int attempts = 0, stale = 0;
    std::size_t last_size = out.size();
    while (static_cast<int>(out.size()) < count && attempts < count * 60 &&
           stale < 1500) {
        ++attempts;
        if (out.size() == last_size) {
            ++stale;
        } else {
            stale = 0;
            last_size = out.size();
        }
        RationalVector v(n, Rat(0));
        int support = 1 + static_cast<int>(rng.below(std::min(n, 4)));
        for (int s = 0; s < support; ++s) {
            int i = 1 + static_cast<int>(rng.below(n));
            if (zero.count(i)) continue;
            long long num = rng.range(-3, 3);
            if (num == 0) num = 1;
            long long den = 1 + rng.below(2);
            v[i - 1] = Rat(num, den);
        }
        for (int i : nonpos)
            if (v[i - 1] > 0) v[i - 1] = -v[i - 1];

        if (cone.quad.is_zero()) {
            push(v);
            continue;
        }
        Rat val = cone.quad.eval(v);
        if (cone.rel == QuadRel::LE0) {
            if (val <= 0) {
                push(v);
                continue;
            }
            if (!square_pairs_neg.empty()) {
                int t = square_pairs_neg[rng.below(square_pairs_neg.size())];
                Rat c = *pure_square_coeff(cone.quad, t);
                // c t^2 absorbs the positive excess: pick t with t^2 >= val/|c|.
                Rat need = val / -c;
                Rat t_old = v[t - 1];
                Rat bump = 1;
                while (bump * bump < need + t_old * t_old) bump += 1;
                v[t - 1] = -(bump + (t_old < 0 ? -t_old : t_old));
                if (cone.quad.eval(v) <= 0) push(v);
            }
            continue;
        }
        // EQ0 repair.
        if (val == 0) {
            push(v);
            continue;
        }
        bool repaired = false;
        for (int t : cross_only) {
            Polynomial lin = cone.quad.partial(t);
            Rat lv = lin.eval(v);
            if (lv == 0) continue;
            RationalVector w = v;
            w[t - 1] = 0;
            Rat rest = cone.quad.eval(w);
            Rat s_val = -rest / lv;
            if (nonpos.count(t) && s_val > 0) continue;
            w[t - 1] = s_val;
            if (cone.quad.eval(w) == 0) {
                push(w);
                repaired = true;
                break;
            }
        }
        if (repaired) continue;
        if (!square_pairs_pos.empty() && !square_pairs_neg.empty()) {
            int tp = square_pairs_pos[rng.below(square_pairs_pos.size())];
            int tn = square_pairs_neg[rng.below(square_pairs_neg.size())];
            Rat cp = *pure_square_coeff(cone.quad, tp);
            Rat cn = *pure_square_coeff(cone.quad, tn);
            if (cp == -cn) {
                RationalVector w = v;
                w[tp - 1] = 0;
                w[tn - 1] = 0;
                Rat rest = cone.quad.eval(w);
                // cp (a^2 - b^2) = -rest with a-b=1: a+b = -rest/cp.
                Rat sum = -rest / cp;
                w[tp - 1] = (sum + 1) / 2;
                w[tn - 1] = (sum - 1) / 2;
                if (cone.quad.eval(w) == 0) push(w);
            }
        }
    }
    return out;
}

}  // namespace germcq
