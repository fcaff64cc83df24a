#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcq/cq_direct.hpp"
#include "germcq/normal_form.hpp"
#include "germcq/rng.hpp"

using namespace germcq;

namespace {

ConstraintGerm make_germ(int n, std::vector<std::string> g, std::vector<std::string> h) {
    ConstraintGerm germ;
    germ.n = n;
    for (const auto& s : g) germ.g.push_back(Polynomial::parse(s, n));
    for (const auto& s : h) germ.h.push_back(Polynomial::parse(s, n));
    return germ;
}

const ConstraintGerm kTwoLines = make_germ(1, {"x1", "2*x1"}, {});
const ConstraintGerm kShiftedDiscs =
    make_germ(2, {"x1^2 - 2/3*x1 + x2^2", "x1^2 - 4/3*x1 + x2^2"}, {});

Rat grad_dot(const ConstraintGerm& germ, int j, const RationalVector& d) {
    RationalVector zero(germ.n, Rat(0));
    return dot(germ.g[j].gradient_at(zero), d);
}

}  // namespace

TEST_CASE("licq on simple germs") {
    CHECK(licq(make_germ(2, {"x1"}, {"x2"})));
    CHECK(!licq(kTwoLines));           // parallel gradients
    CHECK(!licq(kShiftedDiscs));       // gradients (-2/3,0) and (-4/3,0)
    CHECK_THROWS_AS(licq(make_germ(1, {"x1 + 1"}, {})), std::invalid_argument);
}

TEST_CASE("mfcq finds strict descent directions") {
    MfcqResult two = mfcq(kTwoLines);
    REQUIRE(two.holds);
    REQUIRE(two.witness);
    CHECK((*two.witness)[0] < 0);  // d = (-1) works and any witness must be negative

    MfcqResult discs = mfcq(kShiftedDiscs);
    REQUIRE(discs.holds);
    REQUIRE(discs.witness);
    CHECK((*discs.witness)[0] > 0);  // descent pushes into both discs

    CHECK(!mfcq(make_germ(1, {"x1", "0 - x1"}, {})).holds);
    // A singular equality block kills MFCQ outright.
    CHECK(!mfcq(make_germ(2, {"x1"}, {"x2^2"})).holds);
}

TEST_CASE("returned witnesses verify strictly") {
    for (const auto& germ : {kTwoLines, kShiftedDiscs}) {
        MfcqResult res = mfcq(germ);
        REQUIRE(res.holds);
        ActiveSet as = active_set(germ);
        for (int j : as.indices) CHECK(grad_dot(germ, j - 1, *res.witness) < 0);
        RationalVector zero(germ.n, Rat(0));
        for (const auto& hj : germ.h)
            CHECK(dot(hj.gradient_at(zero), *res.witness) == 0);
    }
}

TEST_CASE("licq implies mfcq on random germs") {
    Rng rng(55);
    int licq_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below(4);
        ConstraintGerm germ;
        germ.n = n;
        int q = rng.below(3);
        int r = rng.below(2);
        for (int i = 0; i < q; ++i) {
            Polynomial p(n);
            for (int v = 1; v <= n; ++v)
                p = p + Polynomial::monomial(n, v, 1, Rat(rng.range(-2, 2)));
            germ.g.push_back(p);
        }
        for (int i = 0; i < r; ++i) {
            Polynomial p(n);
            for (int v = 1; v <= n; ++v)
                p = p + Polynomial::monomial(n, v, 1, Rat(rng.range(-2, 2)));
            if (p.is_zero()) p = Polynomial::variable(n, 1);
            germ.h.push_back(p);
        }
        if (licq(germ)) {
            ++licq_seen;
            CHECK(mfcq(germ).holds);
        }
    }
    CHECK(licq_seen > 20);  // the generator does hit the interesting case
}

TEST_CASE("inactive inequalities never affect the verdicts") {
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        ConstraintGerm germ = kShiftedDiscs;
        // Append junk rows with strictly negative value at the origin.
        Polynomial junk(2);
        junk = junk + Polynomial::constant(2, Rat(-1 - (long long)rng.below(4)));
        for (int v = 1; v <= 2; ++v)
            junk = junk + Polynomial::monomial(2, v, 1 + rng.below(2), Rat(rng.range(-3, 3)));
        ConstraintGerm padded = germ;
        padded.g.push_back(junk);
        CHECK(licq(padded) == licq(germ));
        MfcqResult a = mfcq(padded), b = mfcq(germ);
        CHECK(a.holds == b.holds);
        REQUIRE(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(*a.witness == *b.witness);
    }
}

TEST_CASE("mixed rows with singular equality always fail mfcq") {
    NormalForm nf;
    nf.table = Table::T3;
    nf.type = "(1,k)";
    nf.k = 2;
    nf.n = 2;
    nf.q = 1;
    nf.r = 1;
    nf.eps["2"] = 1;
    CHECK(!mfcq(realize(nf)).holds);
}
