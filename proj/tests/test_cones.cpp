#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcq/cones.hpp"
#include "germcq/cq_tables.hpp"
#include "germcq/rng.hpp"

using namespace germcq;

namespace {

RationalVector rv(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

ConstraintGerm make_germ(int n, std::vector<std::string> g, std::vector<std::string> h) {
    ConstraintGerm germ;
    germ.n = n;
    for (const auto& s : g) germ.g.push_back(Polynomial::parse(s, n));
    for (const auto& s : h) germ.h.push_back(Polynomial::parse(s, n));
    return germ;
}

NormalForm t2_form(const std::string& type, int k, int n, int q) {
    NormalForm nf;
    nf.table = Table::T2;
    nf.type = type;
    nf.k = k;
    nf.n = n;
    nf.q = q;
    nf.r = 0;
    nf.l = q - row_info(Table::T2, type).l_offset;
    nf.l1 = 0;
    for (const auto& key : required_eps_keys(nf)) nf.eps[key] = 1;
    for (const auto& key : required_delta_keys(nf)) nf.delta[key] = 1;
    for (const auto& key : required_alpha_keys(nf)) nf.alpha[key] = 0;
    return nf;
}

NormalForm t1_form(const std::string& type, int k, int n) {
    NormalForm nf;
    nf.table = Table::T1;
    nf.type = type;
    nf.k = k;
    nf.n = n;
    nf.q = 0;
    nf.r = 1;
    for (const auto& key : required_eps_keys(nf)) nf.eps[key] = 1;
    return nf;
}

PolyhedralCone random_h_cone(Rng& rng, int n) {
    std::vector<RationalVector> le, eq;
    int rows = 1 + rng.below(2 * n);
    for (int i = 0; i < rows; ++i) {
        RationalVector a(n, Rat(0));
        for (int j = 0; j < n; ++j) a[j] = Rat(rng.range(-2, 2));
        if (is_zero_vector(a)) a[rng.below(n)] = 1;
        if (rng.below(4) == 0) eq.push_back(a);
        else le.push_back(a);
    }
    return PolyhedralCone::from_h(n, le, eq);
}

}  // namespace

TEST_CASE("linearized cones from germs") {
    PolyhedralCone quadrant = linearized_cone(make_germ(2, {"x1", "x2"}, {}));
    CHECK(quadrant.le.size() == 2);
    CHECK(quadrant.eq.empty());
    CHECK(quadrant.member(rv({-1, -1})));
    CHECK(!quadrant.member(rv({1, 0})));

    PolyhedralCone halfspace = linearized_cone(make_germ(2, {"x1"}, {"x1^3 + x2^2"}));
    CHECK(halfspace.le.size() == 1);   // only d1 <= 0; the equality gradient vanishes
    CHECK(halfspace.eq.empty());

    PolyhedralCone everything = linearized_cone(make_germ(2, {}, {"x1^3 + x2^2"}));
    CHECK(everything.le.empty());
    CHECK(everything.eq.empty());
}

TEST_CASE("polar of basic cones") {
    PolyhedralCone origin = PolyhedralCone::from_v(3, {}, {});
    PolyhedralCone all3 = polar(origin);
    CHECK(all3.member(rv({5, -7, 1})));  // polar of {0} is everything

    PolyhedralCone full = PolyhedralCone::from_h(3, {}, {});
    PolyhedralCone just_zero = polar(full);
    CHECK(just_zero.member(rv({0, 0, 0})));
    CHECK(!just_zero.member(rv({1, 0, 0})));

    PolyhedralCone ray = PolyhedralCone::from_v(2, {rv({-1, 0})}, {});
    PolyhedralCone half = polar(ray);
    CHECK(half.member(rv({3, 5})));
    CHECK(half.member(rv({3, -5})));
    CHECK(!half.member(rv({-1, 0})));
}

TEST_CASE("linearized polar of an inequality-only row") {
    // Type (3,k) with q = 3: polar is {w : w_{q-1} >= 0, w_q = ... = w_n = 0}.
    NormalForm nf = t2_form("(3,k)", 2, 5, 3);
    PolyhedralCone lp = linearized_cone(realize(nf));
    PolyhedralCone pol = polar(lp);
    pol.ensure_h();
    CHECK(pol.member(rv({0, 1, 0, 0, 0})));
    CHECK(pol.member(rv({1, 2, 0, 0, 0})));
    CHECK(pol.member(rv({-1, 0, 0, 0, 0})));  // w_1 is free
    CHECK(!pol.member(rv({0, -1, 0, 0, 0})));
    CHECK(!pol.member(rv({0, 1, 1, 0, 0})));
    CHECK(!pol.member(rv({0, 0, 0, 1, 0})));
}

TEST_CASE("polyhedral biduality on random cones") {
    Rng rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + rng.below(5);
        PolyhedralCone k = random_h_cone(rng, n);
        PolyhedralCone kk = polar(polar(k));
        CHECK(cone_equal_polyhedral(k, kk));
    }
}

TEST_CASE("polar reverses inclusions") {
    Rng rng(515);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(4);
        PolyhedralCone small = random_h_cone(rng, n);
        // Dropping rows can only grow the cone.
        PolyhedralCone big = small;
        if (!big.le.empty()) big.le.pop_back();
        else if (!big.eq.empty()) big.eq.pop_back();
        PolyhedralCone ps = polar(small), pb = polar(big);
        ps.ensure_h();
        pb.ensure_v();
        for (const auto& r : pb.rays) CHECK(ps.member(r));
        for (const auto& l : pb.lineality) {
            CHECK(ps.member(l));
            RationalVector neg = l;
            for (auto& x : neg) x = -x;
            CHECK(ps.member(neg));
        }
    }
}

TEST_CASE("cone equality by generators") {
    PolyhedralCone half = PolyhedralCone::from_h(2, {rv({1, 0})}, {});
    CHECK(cone_equal_polyhedral(half, polar(polar(half))));

    PolyhedralCone ray = PolyhedralCone::from_v(2, {rv({-1, 0})}, {});
    PolyhedralCone same = PolyhedralCone::from_h(2, {rv({1, 0})}, {rv({0, 1})});
    CHECK(cone_equal_polyhedral(ray, same));

    PolyhedralCone origin = PolyhedralCone::from_v(1, {}, {});
    PolyhedralCone line = PolyhedralCone::from_h(1, {}, {});
    CHECK(!cone_equal_polyhedral(origin, line));
}

TEST_CASE("tangent descriptors for the equality-only rows") {
    // k = 2 with definite quadratic part: only the origin is left.
    ConeDescriptor flat = tangent_cone_descriptor(t1_form("(1,k)", 2, 2));
    CHECK(member(flat, rv({0, 0})));
    CHECK(!member(flat, rv({1, 0})));
    CHECK(!member(flat, rv({0, 1})));

    // k = 3: the ray d1 <= 0 survives; the positive side is cut away.
    ConeDescriptor cusp = tangent_cone_descriptor(t1_form("(1,k)", 3, 2));
    CHECK(member(cusp, rv({-1, 0})));
    CHECK(!member(cusp, rv({1, 0})));
    CHECK(member(cusp, rv({0, 0})));
}

TEST_CASE("type (6) keeps the full sign-quadratic cone") {
    NormalForm nf = t2_form("(6)", 0, 4, 3);
    nf.delta["1"] = -1;
    nf.delta["2"] = -1;
    nf.alpha["12"] = 1;
    ConeDescriptor cone = tangent_cone_descriptor(nf);
    CHECK(!cone.excluded);
    CHECK(cone.rel == QuadRel::LE0);
    CHECK(cone.zero_indices == std::vector<int>{});  // q = 3 row: l = 0
    CHECK(member(cone, rv({-1, -1, 0, 0})));
}

TEST_CASE("descriptor membership handles the excluded zone") {
    NormalForm nf = t2_form("(1,k)", 3, 3, 2);
    // All tail signs +1: the ray eps_q d_q^k > 0 is excluded on support {q}.
    ConeDescriptor cone = tangent_cone_descriptor(nf);
    REQUIRE(cone.excluded);
    CHECK(!member(cone, rv({0, 1, 0})));
    CHECK(member(cone, rv({0, -1, 0})));
    CHECK(member(cone, rv({0, 0, 0})));
}

TEST_CASE("sampled descriptor members satisfy the linearized cone") {
    CatalogBounds bounds;
    bounds.n_max = 3;
    bounds.q_max = 2;
    long descriptors = 0, points = 0;
    enumerate_catalog(bounds, [&](const NormalForm& nf, const CqVerdict&) {
        if (nf.table == Table::T2 && nf.l1 > 0) return;
        ConeDescriptor cone = tangent_cone_descriptor(nf);
        PolyhedralCone lin = linearized_cone(realize(nf));
        auto pts = sample_members(cone, 1000, 99 + descriptors);
        for (const auto& p : pts) {
            CHECK(lin.member(p));
            ++points;
        }
        if (nf.table == Table::T2) {
            for (const auto& p : pts)
                for (int i = 1; i <= nf.l; ++i) CHECK(p[i - 1] == 0);
        }
        ++descriptors;
    });
    CHECK(descriptors > 100);
    CHECK(points > 2000);
}

TEST_CASE("double description rejects oversized dimensions") {
    PolyhedralCone big = PolyhedralCone::from_h(13, {}, {});
    CHECK_THROWS_AS(big.ensure_v(), std::invalid_argument);
}
