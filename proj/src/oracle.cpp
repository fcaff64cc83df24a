#include "germcq/oracle.hpp"

#include "germcq/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

namespace germcq {

namespace {

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double angle_between(const std::vector<double>& a, const std::vector<double>& b) {
    double na = norm(a), nb = norm(b);
    if (na == 0 || nb == 0) return 0;
    double c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += a[i] * b[i];
    c /= na * nb;
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

std::vector<double> normalized(std::vector<double> v) {
    double n = norm(v);
    if (n > 0)
        for (double& x : v) x /= n;
    return v;
}

bool inequalities_hold(const ConstraintGerm& germ, const std::vector<double>& x,
                       double tol_g) {
    for (const auto& gj : germ.g)
        if (gj.eval_double(x) > tol_g) return false;
    return true;
}

double equality_residual(const ConstraintGerm& germ, const std::vector<double>& x) {
    double worst = 0;
    for (const auto& hj : germ.h) worst = std::max(worst, std::abs(hj.eval_double(x)));
    return worst;
}

// Damped Newton steps toward h = 0 (via the normal equations; r is tiny).
bool project_to_equalities(const ConstraintGerm& germ, std::vector<double>& x,
                           double tol) {
    const int r = germ.r();
    if (r == 0) return true;
    const int n = germ.n;
    for (int iter = 0; iter < 60; ++iter) {
        double res = equality_residual(germ, x);
        if (res <= tol) return true;
        std::vector<double> f(r);
        std::vector<std::vector<double>> jac(r);
        for (int i = 0; i < r; ++i) {
            f[i] = germ.h[i].eval_double(x);
            jac[i] = germ.h[i].gradient_double(x);
        }
        // Solve (J J^T) lambda = f, step = J^T lambda.
        std::vector<std::vector<double>> gram(r, std::vector<double>(r + 1, 0.0));
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                double s = 0;
                for (int t = 0; t < n; ++t) s += jac[i][t] * jac[j][t];
                gram[i][j] = s;
            }
            gram[i][r] = f[i];
        }
        for (int col = 0; col < r; ++col) {
            int piv = col;
            for (int i = col + 1; i < r; ++i)
                if (std::abs(gram[i][col]) > std::abs(gram[piv][col])) piv = i;
            if (std::abs(gram[piv][col]) < 1e-300) return false;
            std::swap(gram[col], gram[piv]);
            for (int i = 0; i < r; ++i) {
                if (i == col) continue;
                double fctr = gram[i][col] / gram[col][col];
                for (int j = col; j <= r; ++j) gram[i][j] -= fctr * gram[col][j];
            }
        }
        std::vector<double> lambda(r);
        for (int i = 0; i < r; ++i) lambda[i] = gram[i][r] / gram[i][i];
        std::vector<double> step(n, 0.0);
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < r; ++i) step[t] += jac[i][t] * lambda[i];
        double scale = 1.0;
        for (int damp = 0; damp < 25; ++damp) {
            std::vector<double> cand = x;
            for (int t = 0; t < n; ++t) cand[t] -= scale * step[t];
            if (equality_residual(germ, cand) < res) {
                x = cand;
                break;
            }
            scale *= 0.5;
            if (damp == 24) return false;
        }
    }
    return equality_residual(germ, x) <= tol;
}

struct Cluster {
    std::vector<double> sum;
    std::vector<double> rep;
    int count = 0;
};

std::vector<Cluster> greedy_cluster(std::vector<std::vector<double>> dirs,
                                    double angle_rad) {
    std::sort(dirs.begin(), dirs.end());
    std::vector<Cluster> clusters;
    auto assign = [&](const std::vector<double>& d, std::vector<Cluster>& into) {
        for (auto& c : into) {
            if (angle_between(c.rep, d) <= angle_rad) {
                for (std::size_t i = 0; i < d.size(); ++i) c.sum[i] += d[i];
                ++c.count;
                return;
            }
        }
        Cluster c;
        c.sum = d;
        c.rep = d;
        c.count = 1;
        into.push_back(std::move(c));
    };
    for (const auto& d : dirs) assign(d, clusters);
    // One refinement pass: recenter representatives, then reassign.
    for (auto& c : clusters) c.rep = normalized(c.sum);
    std::vector<Cluster> refined;
    for (const auto& c : clusters) {
        Cluster seed;
        seed.sum.assign(c.rep.size(), 0.0);
        seed.rep = c.rep;
        seed.count = 0;
        refined.push_back(std::move(seed));
    }
    for (const auto& d : dirs) {
        int best = -1;
        double best_angle = 0;
        for (std::size_t i = 0; i < refined.size(); ++i) {
            double a = angle_between(refined[i].rep, d);
            if (best < 0 || a < best_angle) {
                best = static_cast<int>(i);
                best_angle = a;
            }
        }
        for (std::size_t t = 0; t < d.size(); ++t) refined[best].sum[t] += d[t];
        ++refined[best].count;
    }
    std::vector<Cluster> out;
    for (auto& c : refined) {
        if (c.count == 0) continue;
        c.rep = normalized(c.sum);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

namespace {

std::vector<std::vector<double>> sample_radius_directions(const ConstraintGerm& germ,
                                                          const OracleConfig& cfg,
                                                          std::size_t radius_index) {
    const int n = germ.n;
    double radius = cfg.radii[radius_index];
    double tol_h = 1e-10 * radius * radius;
    Rng rng = Rng(cfg.seed).fork(radius_index);
    std::vector<std::vector<double>> dirs;
    for (int s = 0; s < cfg.samples_per_radius; ++s) {
        std::vector<double> x(n);
        double r2 = 0;
        for (int i = 0; i < n; ++i) {
            x[i] = rng.symmetric();
            r2 += x[i] * x[i];
        }
        if (r2 > 1.0 || r2 == 0.0) continue;
        for (int i = 0; i < n; ++i) x[i] *= radius;
        if (!project_to_equalities(germ, x, tol_h)) continue;
        double len = norm(x);
        if (len < 0.3 * radius || len > 1.7 * radius) continue;
        if (!inequalities_hold(germ, x, 0.0)) continue;
        std::vector<double> d(n);
        for (int i = 0; i < n; ++i) d[i] = x[i] / len;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

}  // namespace

DirectionEstimate estimate_tangent_directions(const ConstraintGerm& germ,
                                              const OracleConfig& cfg) {
    germ.check();
    DirectionEstimate est;
    est.seed = cfg.seed;

    // Each radius owns a forked seed, so the fan-out merges deterministically.
    std::vector<std::vector<std::vector<double>>> per_radius(cfg.radii.size());
    int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cfg.radii.size())));
    if (workers <= 1) {
        for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri)
            per_radius[ri] = sample_radius_directions(germ, cfg, ri);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                while (true) {
                    std::size_t ri = next.fetch_add(1);
                    if (ri >= cfg.radii.size()) return;
                    per_radius[ri] = sample_radius_directions(germ, cfg, ri);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    // A genuine tangent direction keeps producing feasible points at every
    // scale, so only the contiguous productive run from the largest radius
    // counts; samples appearing below a gap are tolerance artifacts.
    std::vector<std::vector<double>> kept;
    double used_radius = 0;
    bool gap = false;
    for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
        if (per_radius[ri].empty()) {
            std::ostringstream os;
            os << "no feasible samples at radius " << cfg.radii[ri];
            est.notes.push_back(os.str());
            gap = true;
            continue;
        }
        if (gap) {
            std::ostringstream os;
            os << "ignoring samples at radius " << cfg.radii[ri]
               << " below an unproductive scale";
            est.notes.push_back(os.str());
            continue;
        }
        kept = std::move(per_radius[ri]);  // smallest radius of the leading run
        used_radius = cfg.radii[ri];
    }
    est.radius_used = used_radius;
    if (kept.empty()) return est;
    double angle = cfg.cluster_angle_deg * std::numbers::pi / 180.0;
    for (auto& c : greedy_cluster(std::move(kept), angle)) {
        est.directions.push_back(c.rep);
        est.weights.push_back(c.count);
    }
    return est;
}

namespace {

std::vector<std::vector<double>> witness_perturbations(const ConstraintGerm& germ,
                                                       const std::vector<double>& d) {
    const int n = germ.n;
    std::vector<std::vector<double>> grid;
    grid.emplace_back(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (double s : {-1.0, 1.0}) {
            std::vector<double> v(n, 0.0);
            v[i] = s;
            grid.push_back(v);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (double si : {-1.0, 1.0}) {
                for (double sj : {-1.0, 1.0}) {
                    std::vector<double> v(n, 0.0);
                    v[i] = si;
                    v[j] = sj;
                    grid.push_back(v);
                }
            }
        }
    }
    // Gradient-informed candidates from the quadratic part of the singular
    // component (the last inequality when r = 0, the equality otherwise).
    const Polynomial* head = nullptr;
    if (germ.r() > 0) head = &germ.h.front();
    else if (germ.q() > 0) head = &germ.g.back();
    if (head) {
        Polynomial quad = head->homogeneous_part(2);
        if (!quad.is_zero()) {
            std::vector<double> grad = quad.gradient_double(d);
            if (norm(grad) > 1e-12) {
                grid.push_back(normalized(grad));
                std::vector<double> neg = grad;
                for (double& x : neg) x = -x;
                grid.push_back(normalized(neg));
            }
        }
    }
    // Respect the sign conditions: coordinates pinned by an active coordinate
    // inequality with d_j = 0 must not be pushed positive.
    std::vector<int> pinned;
    for (const auto& gj : germ.g) {
        for (int t = 1; t <= n; ++t) {
            if (gj == Polynomial::variable(n, t) && std::abs(d[t - 1]) < 1e-12)
                pinned.push_back(t - 1);
        }
    }
    for (auto& v : grid)
        for (int t : pinned) v[t] = std::min(v[t], 0.0);
    return grid;
}

// One scaled-sequence probe point x = d/m + theta v/m^(5/4); for germs with
// an equality, theta is found by a sign-change bisection along v.
bool probe_point(const ConstraintGerm& germ, const std::vector<double>& d, double m,
                 const std::vector<double>& v, std::vector<double>* out) {
    const int n = germ.n;
    double s = std::pow(m, -1.25);
    auto at = [&](double theta) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = d[i] / m + theta * s * v[i];
        return x;
    };
    if (germ.r() == 0) {
        std::vector<double> x = at(1.0);
        if (!inequalities_hold(germ, x, 0.0)) return false;
        *out = x;
        return true;
    }
    const Polynomial& h = germ.h.front();
    const double tol = 1e-10 / (m * m);
    double f0 = h.eval_double(at(0.0));
    double theta = 0.0;
    if (std::abs(f0) > tol) {
        double lo = 0.0, hi = -1.0;
        for (double cand : {0.25, 0.5, 1.0, 2.0}) {
            double f = h.eval_double(at(cand));
            if (std::abs(f) <= tol || (f < 0) != (f0 < 0)) {
                hi = cand;
                break;
            }
            lo = cand;
        }
        if (hi < 0) return false;
        double flo = h.eval_double(at(lo));
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = h.eval_double(at(mid));
            if (std::abs(fm) <= tol) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        theta = hi;
    }
    std::vector<double> x = at(theta);
    if (std::abs(h.eval_double(x)) > tol) return false;
    if (!inequalities_hold(germ, x, 0.0)) return false;
    *out = x;
    return true;
}

}  // namespace

WitnessResult witness_direction(const ConstraintGerm& germ, const std::vector<double>& d,
                                const OracleConfig& cfg) {
    germ.check();
    WitnessResult result;
    if (norm(d) < 1e-12) {  // the constant zero sequence
        result.found = true;
        result.perturbation.assign(germ.n, 0.0);
        return result;
    }
    if (germ.r() > 1)
        throw std::invalid_argument("witness search handles at most one equality");
    std::vector<double> dir = normalized(d);
    const std::vector<double> schedule = {1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
    for (const auto& v : witness_perturbations(germ, dir)) {
        if (result.probes >= cfg.witness_budget) break;
        int feasible_streak = 0;
        double angle_mid = -1, angle_last = -1;
        for (double m : schedule) {
            ++result.probes;
            std::vector<double> x;
            if (!probe_point(germ, dir, m, v, &x)) {
                feasible_streak = 0;
                continue;
            }
            ++feasible_streak;
            double a = angle_between(x, dir);
            if (m == schedule[schedule.size() - 3]) angle_mid = a;
            if (m == schedule.back()) angle_last = a;
        }
        if (feasible_streak >= 3 && angle_last >= 0 && angle_last <= 0.1 &&
            (angle_mid < 0 || angle_last <= angle_mid + 1e-9)) {
            result.found = true;
            result.perturbation = v;
            result.final_angle = angle_last;
            return result;
        }
    }
    return result;
}

AgreementReport cone_agreement(const NormalForm& nf, const OracleConfig& cfg) {
    require_valid(nf);
    AgreementReport report;
    ConeDescriptor desc = tangent_cone_descriptor(nf);
    ConstraintGerm germ = realize(nf);

    DirectionEstimate est = estimate_tangent_directions(germ, cfg);
    report.notes = est.notes;
    report.clusters = static_cast<int>(est.directions.size());
    for (const auto& dir : est.directions) {
        ++report.necessity_checked;
        if (member_within(desc, dir, cfg.dir_tol)) ++report.necessity_passed;
    }

    for (const auto& point : sample_members(desc, cfg.member_samples, cfg.seed ^ 0x5eedULL)) {
        if (is_zero_vector(point)) continue;
        std::vector<double> d(point.size());
        for (std::size_t i = 0; i < point.size(); ++i)
            d[i] = static_cast<double>(point[i]);
        d = normalized(d);
        ++report.sufficiency_sampled;
        if (witness_direction(germ, d, cfg).found) ++report.sufficiency_witnessed;
    }

    if (desc.excluded) {
        // Directions inside the excluded set should resist the witness search.
        for (int sgn : {1, -1}) {
            RationalVector probe(desc.n, Rat(0));
            for (int t : desc.excluded->support) probe[t - 1] = sgn;
            bool in_zone = true;
            for (int i = 1; i <= desc.n; ++i) {
                bool support = std::find(desc.excluded->support.begin(),
                                         desc.excluded->support.end(),
                                         i) != desc.excluded->support.end();
                if (!support && probe[i - 1] != 0) in_zone = false;
            }
            if (!in_zone || desc.excluded->sign_poly.eval(probe) <= 0) continue;
            std::vector<double> d(desc.n);
            for (int i = 0; i < desc.n; ++i) d[i] = static_cast<double>(probe[i]);
            ++report.excluded_probes;
            if (witness_direction(germ, normalized(d), cfg).found)
                ++report.excluded_witnessed;
        }
    }
    return report;
}

}  // namespace germcq
