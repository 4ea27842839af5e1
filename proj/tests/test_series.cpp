#include "doctest.h"
#include "eiscalc/cone_series.hpp"

#include <random>

using namespace eiscalc;

namespace {
const BasedRootDatum& gl2() {
    static auto d = BasedRootDatum::gl(2);
    return d;
}
}  // namespace

TEST_CASE("monomial products telescope") {
    long q = 3, N = 20;
    Coweight alpha{1, -1};
    auto one = ConeSeries::unit(gl2(), q, N);
    auto t = ConeSeries::monomial(gl2(), q, alpha, Scalar::one(q), N);

    // (1 + t^a)(1 - t^a) = 1 - t^{2a}
    auto f = one + t;
    auto g = one - t;
    auto prod = f * g;
    auto expect = one - ConeSeries::monomial(gl2(), q, vscale(2, alpha), Scalar::one(q), N);
    CHECK(!ConeSeries::first_difference(prod, expect, N).has_value());

    // geometric series times (1 - t^a) is 1 up to the bound
    ConeSeries geo(gl2(), q, Coweight{0, 0}, N);
    for (long n = 0; 2 * n <= N; ++n) geo.set(vscale(n, alpha), Scalar::one(q));
    auto tele = geo * g;
    CHECK(!ConeSeries::first_difference(tele, one, N).has_value());
    CHECK(ConeSeries::first_difference(tele, one, N) == std::nullopt);
}

TEST_CASE("multiplication against identity and truncation") {
    long q = 2, N = 8;
    auto one = ConeSeries::unit(gl2(), q, N);
    ConeSeries f(gl2(), q, Coweight{-1, 1}, N);
    f.set({-1, 1}, Scalar(1, 2, q));
    f.set({0, 0}, Scalar::rational(Rat(7, 3), q));
    f.set({1, -1}, Scalar::root(q));
    auto g = f * one;
    CHECK(!ConeSeries::first_difference(f, g, N).has_value());
    CHECK(g.base() == Coweight{-1, 1});
}

TEST_CASE("support stays in the shifted cone") {
    long q = 2, N = 12;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-4, 4);
    Coweight alpha{1, -1};
    for (int trial = 0; trial < 20; ++trial) {
        ConeSeries f(gl2(), q, Coweight{val(rng), 0}, N);
        ConeSeries g(gl2(), q, Coweight{val(rng), 0}, N);
        for (long n = 0; 2 * n <= N; ++n) {
            if (rng() % 2) f.set(vadd(f.base(), vscale(n, alpha)), Scalar(val(rng), 1, q));
            if (rng() % 2) g.set(vadd(g.base(), vscale(n, alpha)), Scalar(1, val(rng), q));
        }
        auto p = f * g;
        Coweight b = vadd(f.base(), g.base());
        for (auto& [mu, c] : p.coeffs()) {
            CHECK(gl2().dominance_leq(b, mu));
            CHECK(!c.is_zero());
        }
    }
}

TEST_CASE("associativity and commutativity up to truncation") {
    long q = 3, N = 10;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-3, 3);
    Coweight alpha{1, -1};
    for (int trial = 0; trial < 12; ++trial) {
        auto mk = [&]() {
            ConeSeries s(gl2(), q, Coweight{val(rng), -val(rng)}, N);
            for (long n = 0; 2 * n <= N; ++n)
                s.set(vadd(s.base(), vscale(n, alpha)), Scalar(val(rng), val(rng), q));
            return s;
        };
        auto f = mk(), g = mk(), h = mk();
        CHECK(!ConeSeries::first_difference((f * g) * h, f * (g * h), N).has_value());
        CHECK(!ConeSeries::first_difference(f * g, g * f, N).has_value());
    }
}

TEST_CASE("first difference reports the lowest discrepancy") {
    long q = 2, N = 9;
    Coweight alpha{1, -1};
    auto one = ConeSeries::unit(gl2(), q, N);
    auto f = one + ConeSeries::monomial(gl2(), q, alpha, Scalar::one(q), N);
    // agree at height 0, differ first at alpha
    auto diff = ConeSeries::first_difference(f, one, N);
    REQUIRE(diff.has_value());
    CHECK(diff->mu == alpha);
    CHECK(diff->lhs == Scalar::one(q));
    CHECK(diff->rhs == Scalar::zero(q));
    // at height 0 they agree
    CHECK(!ConeSeries::first_difference(f, one, 0).has_value());
    CHECK_THROWS_AS(ConeSeries::first_difference(f, one, N + 1), series_error);
}

TEST_CASE("keys below the base are rejected") {
    ConeSeries s(gl2(), 2, Coweight{0, 0}, 6);
    CHECK_THROWS_AS(s.set({-1, 1}, Scalar::one(2)), series_error);
    CHECK_NOTHROW(s.set({1, -1}, Scalar::one(2)));
    // beyond the height bound entries are silently dropped
    s.set({9, -9}, Scalar::one(2));
    CHECK(s.at({9, -9}).is_zero());
}
