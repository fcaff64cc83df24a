#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcq/polynomial.hpp"
#include "germcq/rng.hpp"

using namespace germcq;

namespace {

Polynomial parse2(const std::string& s) { return Polynomial::parse(s, 2); }

RationalVector rv(std::initializer_list<Rat> xs) { return RationalVector(xs); }

Polynomial random_poly(Rng& rng, int nvars, int max_deg, int terms) {
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        int deg = static_cast<int>(rng.below(max_deg + 1));
        for (int d = 0; d < deg; ++d) e[rng.below(nvars)] += 1;
        Rat c(rng.range(-5, 5), 1 + rng.below(3));
        p.add_term(e, c);
    }
    return p;
}

// p(t*x) as a polynomial in the extra last variable t.
Polynomial scaled_in_t(const Polynomial& p, const RationalVector& x) {
    const int n = p.nvars();
    std::vector<Polynomial> sub;
    for (int i = 1; i <= n; ++i) {
        Polynomial s(1);
        s.add_term({1}, x[i - 1]);
        sub.push_back(s);
    }
    return p.substitute(sub);
}

int min_degree(const Polynomial& p) {
    if (p.is_zero()) return -1;
    return total_degree(p.terms().begin()->first);
}

}  // namespace

TEST_CASE("evaluation at rational points") {
    CHECK(parse2("x1^2 + x2").eval(rv({1, 1})) == Rat(2));
    // Both inequality rows of the shifted-disc germ are active at the origin.
    CHECK(parse2("x1^2 - 2/3*x1 + x2^2").eval(rv({0, 0})) == Rat(0));
    CHECK(parse2("x1^2 - x2^2").eval(rv({1, 1})) == Rat(0));
    CHECK_THROWS_AS(parse2("x1").eval(rv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("exact gradients") {
    CHECK(parse2("x1^3 + x2^2").gradient_at(rv({0, 0})) == rv({0, 0}));
    CHECK(parse2("x1^2 - 2/3*x1 + x2^2").gradient_at(rv({0, 0})) ==
          rv({Rat(-2, 3), 0}));
    Polynomial g1 = Polynomial::parse("x1", 1);
    Polynomial g2 = Polynomial::parse("2*x1", 1);
    CHECK(g1.gradient_at({Rat(0)}) == RationalVector{Rat(1)});
    CHECK(g2.gradient_at({Rat(0)}) == RationalVector{Rat(2)});
}

TEST_CASE("jet truncation") {
    CHECK(parse2("x1 + x1^2").truncate_jet(1) == parse2("x1"));
    CHECK(parse2("x1").truncate_jet(0).is_zero());
    CHECK(parse2("x1^3 + x1*x2^2").truncate_jet(2).is_zero());
}

TEST_CASE("homogeneous parts") {
    Polynomial p = Polynomial::parse("x1^3 - x1*x2^2 + x3^2", 3);
    CHECK(p.homogeneous_part(3) == Polynomial::parse("x1^3 - x1*x2^2", 3));
    CHECK(Polynomial::parse("x2^3 + x1^2", 2).homogeneous_part(2) == parse2("x1^2"));
    CHECK(parse2("x1^2").homogeneous_part(5).is_zero());
}

TEST_CASE("truncation error vanishes to order k in the scale") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + rng.below(2);
        Polynomial p = random_poly(rng, n, 5, 6);
        int k = static_cast<int>(rng.below(5));
        RationalVector x;
        for (int i = 0; i < n; ++i) x.push_back(Rat(rng.range(-3, 3), 2));
        Polynomial diff = scaled_in_t(p - p.truncate_jet(k), x);
        if (!diff.is_zero()) CHECK(min_degree(diff) >= k + 1);
        // Same check through evaluation at two scales.
        Polynomial full = scaled_in_t(p, x);
        Polynomial jet = scaled_in_t(p.truncate_jet(k), x);
        for (Rat t : {Rat(1, 2), Rat(1, 4)}) {
            Rat lhs = full.eval({t}), rhs = jet.eval({t});
            if (diff.is_zero()) CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("homogeneous decomposition reassembles exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, 3, 6, 8);
        Polynomial sum(3);
        for (int r = 0; r <= p.degree(); ++r) sum = sum + p.homogeneous_part(r);
        CHECK(sum == p);
    }
}

TEST_CASE("gradient is additive") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_poly(rng, 3, 4, 5);
        Polynomial q = random_poly(rng, 3, 4, 5);
        RationalVector x;
        for (int i = 0; i < 3; ++i) x.push_back(Rat(rng.range(-2, 2), 1 + rng.below(2)));
        RationalVector gp = p.gradient_at(x), gq = q.gradient_at(x);
        RationalVector gs = (p + q).gradient_at(x);
        for (int i = 0; i < 3; ++i) CHECK(gs[i] == gp[i] + gq[i]);
    }
}

TEST_CASE("text form round trip") {
    Rng rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(4);
        Polynomial p = random_poly(rng, n, 4, 5);
        CHECK(Polynomial::parse(p.to_string(), n) == p);
    }
    CHECK(Polynomial::parse("0", 2).is_zero());
    CHECK(parse2("-x1") == parse2("0 - x1"));
    CHECK(parse2("2/4*x1") == parse2("1/2 * x1"));
    CHECK_THROWS_AS(parse2("x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse2("x1 +"), std::invalid_argument);
}

TEST_CASE("substitution composes") {
    // p(x1,x2) = x1*x2 with x1 -> y1+y2, x2 -> y1-y2 gives y1^2-y2^2.
    Polynomial p = parse2("x1*x2");
    std::vector<Polynomial> sub = {parse2("x1 + x2"), parse2("x1 - x2")};
    CHECK(p.substitute(sub) == parse2("x1^2 - x2^2"));
}
