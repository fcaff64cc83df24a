#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcq/cq_direct.hpp"
#include "germcq/cq_tables.hpp"
#include "germcq/rng.hpp"
#include "germcq/transform.hpp"

using namespace germcq;

namespace {

ConstraintGerm make_germ(int n, std::vector<std::string> g, std::vector<std::string> h) {
    ConstraintGerm germ;
    germ.n = n;
    for (const auto& s : g) germ.g.push_back(Polynomial::parse(s, n));
    for (const auto& s : h) germ.h.push_back(Polynomial::parse(s, n));
    return germ;
}

Polynomial random_small_poly(Rng& rng, int n, bool zero_at_origin) {
    Polynomial p(n);
    int terms = 1 + rng.below(3);
    for (int t = 0; t < terms; ++t) {
        Exponents e(n, 0);
        int deg = 1 + rng.below(2);
        for (int d = 0; d < deg; ++d) e[rng.below(n)] += 1;
        p.add_term(e, Rat(rng.range(-2, 2)));
    }
    if (!zero_at_origin && rng.below(2) == 0)
        p = p + Polynomial::constant(n, Rat(rng.range(-3, 3)));
    return p;
}

KgElement random_element(Rng& rng, int n, int q, int r) {
    KgElement e = KgElement::identity(n, q, r);
    // A handful of elementary operations keeps phi exactly invertible.
    for (int ops = 0; ops < 4; ++ops) {
        int i = rng.below(n), j = rng.below(n);
        if (i == j) {
            Rat c(1 + rng.below(3), 1 + rng.below(2));
            for (int t = 0; t < n; ++t) e.phi[i][t] *= c;
        } else {
            Rat c(rng.range(-2, 2));
            for (int t = 0; t < n; ++t) e.phi[i][t] += c * e.phi[j][t];
        }
    }
    // Random generalized permutation with positive scales.
    std::vector<int> perm(q);
    for (int i = 0; i < q; ++i) perm[i] = i;
    for (int i = q - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    e.scale_perm.assign(q, RationalVector(q, Rat(0)));
    for (int i = 0; i < q; ++i)
        e.scale_perm[i][perm[i]] = Rat(1 + rng.below(3), 1 + rng.below(2));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < r; ++j)
            e.mix[i][j] = random_small_poly(rng, n, false) * Rat(rng.range(0, 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat c = i == j ? Rat(1 + rng.below(2)) : Rat(rng.range(-1, 1));
            e.eq_mix[i][j] = Polynomial::constant(n, c) +
                             random_small_poly(rng, n, true) * Rat(rng.range(0, 1));
        }
    return e;
}

NormalForm random_catalog_form(Rng& rng) {
    struct Pick {
        Table table;
        const char* type;
        int k, n, q;
    };
    static const std::vector<Pick> picks = {
        {Table::T1, "(1,k)", 3, 3, 0}, {Table::T1, "(2)", 0, 3, 0},
        {Table::T2, "(1,k)", 2, 3, 2}, {Table::T2, "(3,k)", 2, 3, 2},
        {Table::T2, "(4,k)", 3, 4, 2}, {Table::T2, "(5)", 0, 4, 2},
        {Table::T3, "(1,k)", 2, 2, 1}, {Table::T3, "(3,k)", 3, 3, 1},
        {Table::T3, "(5)", 0, 3, 2},
    };
    const Pick& p = picks[rng.below(picks.size())];
    NormalForm nf;
    nf.table = p.table;
    nf.type = p.type;
    nf.k = p.k;
    nf.n = p.n;
    nf.q = p.q;
    nf.r = p.table == Table::T2 ? 0 : 1;
    if (p.table == Table::T2) {
        nf.l = p.q - row_info(p.table, p.type).l_offset;
        nf.l1 = static_cast<int>(rng.below((nf.l + 1) / 2 + 1));
    }
    for (const auto& key : required_eps_keys(nf))
        nf.eps[key] = rng.below(2) ? 1 : -1;
    for (const auto& key : required_delta_keys(nf))
        nf.delta[key] = rng.below(2) ? 1 : -1;
    for (const auto& key : required_alpha_keys(nf)) nf.alpha[key] = Rat(rng.range(-1, 1));
    require_valid(nf);
    return nf;
}

}  // namespace

TEST_CASE("identity element leaves germs unchanged") {
    ConstraintGerm germ = make_germ(2, {"x1"}, {"x1^3 + x2^2"});
    ConstraintGerm out = apply_kg(KgElement::identity(2, 1, 1), germ);
    CHECK(out.g == germ.g);
    CHECK(out.h == germ.h);
}

TEST_CASE("permutation swaps inequality rows") {
    ConstraintGerm germ = make_germ(2, {"x1", "x2"}, {});
    KgElement e = KgElement::identity(2, 2, 0);
    e.scale_perm = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    ConstraintGerm out = apply_kg(e, germ);
    CHECK(out.g[0] == Polynomial::parse("x2", 2));
    CHECK(out.g[1] == Polynomial::parse("x1", 2));
}

TEST_CASE("scaling one row keeps the direct verdict") {
    ConstraintGerm germ = make_germ(1, {"x1", "2*x1"}, {});
    KgElement e = KgElement::identity(1, 2, 0);
    e.scale_perm[0][0] = 2;
    ConstraintGerm out = apply_kg(e, germ);
    CHECK(out.g[0] == Polynomial::parse("2*x1", 1));
    CHECK(out.g[1] == Polynomial::parse("2*x1", 1));
    CHECK(mfcq(out).holds == mfcq(germ).holds);
    CHECK(licq(out) == licq(germ));
}

TEST_CASE("singular data is rejected") {
    ConstraintGerm germ = make_germ(2, {"x1"}, {"x2"});
    KgElement e = KgElement::identity(2, 1, 1);
    e.phi[1] = e.phi[0];
    CHECK_THROWS_AS(apply_kg(e, germ), std::invalid_argument);
    KgElement f = KgElement::identity(2, 1, 1);
    f.eq_mix[0][0] = Polynomial::variable(2, 1);  // vanishes at 0
    CHECK_THROWS_AS(apply_kg(f, germ), std::invalid_argument);
    KgElement g = KgElement::identity(2, 1, 1);
    g.scale_perm[0][0] = -1;
    CHECK_THROWS_AS(apply_kg(g, germ), std::invalid_argument);
}

TEST_CASE("group action preserves the direct verdicts") {
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        NormalForm nf = random_catalog_form(rng);
        ConstraintGerm germ = realize(nf);
        KgElement e = random_element(rng, germ.n, germ.q(), germ.r());
        ConstraintGerm moved = apply_kg(e, germ);
        CHECK(licq(moved) == licq(germ));
        CHECK(mfcq(moved).holds == mfcq(germ).holds);
    }
}

TEST_CASE("reduction drops inactive rows") {
    ConstraintGerm germ = make_germ(1, {"x1", "x1 - 1"}, {});
    ReductionPlan plan;
    plan.drop_inequalities = {2};
    ConstraintGerm out = reduce(germ, plan);
    REQUIRE(out.g.size() == 1);
    CHECK(out.g[0] == Polynomial::parse("x1", 1));

    ReductionPlan bad;
    bad.drop_inequalities = {1};  // active row
    CHECK_THROWS_AS(reduce(germ, bad), std::invalid_argument);
}

TEST_CASE("coordinate equalities eliminate exactly") {
    ConstraintGerm germ = make_germ(2, {"x2"}, {"x1"});
    ReductionPlan plan;
    plan.eliminate_equalities = {1};
    ConstraintGerm out = reduce(germ, plan);
    CHECK(out.n == 1);
    REQUIRE(out.g.size() == 1);
    CHECK(out.g[0] == Polynomial::parse("x1", 1));
    CHECK(out.h.empty());
}

TEST_CASE("eliminating one equality of a pair substitutes its zero set") {
    ConstraintGerm germ = make_germ(2, {"x1"}, {"x2", "x1^3 + x2^2"});
    ReductionPlan plan;
    plan.eliminate_equalities = {1};
    ConstraintGerm out = reduce(germ, plan);
    CHECK(out.n == 1);
    REQUIRE(out.h.size() == 1);
    CHECK(out.g[0] == Polynomial::parse("x1", 1));
    CHECK(out.h[0] == Polynomial::parse("x1^3", 1));
}

TEST_CASE("dependent differentials invalidate the plan") {
    ConstraintGerm germ = make_germ(2, {}, {"x1", "x1 + x1^2"});
    ReductionPlan plan;
    plan.eliminate_equalities = {1, 2};
    CHECK_THROWS_AS(reduce(germ, plan), std::invalid_argument);
    // A singular equality cannot be eliminated at all.
    ConstraintGerm sing = make_germ(2, {}, {"x1^2 - x2^2"});
    ReductionPlan p2;
    p2.eliminate_equalities = {1};
    CHECK_THROWS_AS(reduce(sing, p2), std::invalid_argument);
}

TEST_CASE("series elimination matches direct substitution") {
    // h = x3 + x3^2 - x1 has a unit linear part in x3; the solved series
    // composed back must vanish to the configured order.
    ConstraintGerm germ = make_germ(3, {"x1"}, {"x3 + x3^2 - x1", "x2^3 + x3"});
    ReductionPlan plan;
    plan.eliminate_equalities = {1};
    ConstraintGerm out = reduce(germ, plan);
    CHECK(out.n == 2);
    REQUIRE(out.h.size() == 1);
    // x3 = x1 - x1^2 + 2 x1^3 - ... ; the surviving equality is x2^3 + x3(x1).
    Polynomial expect = Polynomial::parse(
        "x2^3 + x1 - x1^2 + 2*x1^3 - 5*x1^4 + 14*x1^5 - 42*x1^6", 2);
    CHECK(out.h[0] == expect);
}

TEST_CASE("reductions preserve verdicts and feasibility") {
    Rng rng(987);
    for (int trial = 0; trial < 100; ++trial) {
        NormalForm nf = random_catalog_form(rng);
        ConstraintGerm germ = realize(nf);
        const int base_n = germ.n;
        // Pad with an inactive inequality and a solvable equality in a new
        // variable, then reduce both away again.
        ConstraintGerm padded;
        padded.n = base_n + 1;
        for (const auto& p : germ.g) padded.g.push_back(p.extend_to(base_n + 1));
        Polynomial junk =
            Polynomial::constant(base_n + 1, Rat(-1)) +
            random_small_poly(rng, base_n + 1, true);
        padded.g.push_back(junk);
        for (const auto& p : germ.h) padded.h.push_back(p.extend_to(base_n + 1));
        Polynomial extra = Polynomial::variable(base_n + 1, base_n + 1) +
                           random_small_poly(rng, base_n, true).extend_to(base_n + 1);
        padded.h.push_back(extra);

        ReductionPlan plan;
        plan.drop_inequalities = {padded.q()};
        plan.eliminate_equalities = {padded.r()};
        ConstraintGerm reduced = reduce(padded, plan);

        CHECK(active_set(reduced).feasible == active_set(padded).feasible);
        CHECK(licq(reduced) == licq(padded));
        CHECK(mfcq(reduced).holds == mfcq(padded).holds);
        // The catalog verdicts of the original instance transfer through the
        // round trip whenever the reduction reproduces the realization.
        if (reduced.g == germ.g && reduced.h == germ.h) {
            CqVerdict v = decide(nf);
            CHECK(licq(reduced) == v.licq);
            CHECK(mfcq(reduced).holds == v.mfcq);
        }
    }
}
