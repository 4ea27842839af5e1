#include "doctest.h"
#include "eiscalc/scalar.hpp"
#include "eiscalc/serialize.hpp"

#include <random>

using namespace eiscalc;

TEST_CASE("basic arithmetic in the quadratic extension") {
    long q = 2;
    Scalar one = Scalar::one(q);
    Scalar r = Scalar::root(q);
    // (1 + r)^2 = (1 + q) + 2r
    Scalar x = one + r;
    CHECK(x * x == Scalar(Rat(1 + q), 2, q));
    CHECK(x * one == x);
    // 1/r = (1/q) r
    CHECK(one / r == Scalar(0, Rat(1, q), q));
}

TEST_CASE("square q collapses to the rationals") {
    Scalar r = Scalar::root(4);
    CHECK(r == Scalar::rational(2, 4));
    CHECK(Scalar(1, 1, 4) == Scalar::rational(3, 4));
    CHECK(Scalar(Rat(1, 2), Rat(3, 2), 9).is_rational());
    CHECK(Scalar(Rat(1, 2), Rat(3, 2), 9) == Scalar::rational(5, 9));
}

TEST_CASE("root powers") {
    CHECK(Scalar::root_pow(3, 2) == Scalar::rational(3, 3));
    CHECK(Scalar::root_pow(3, 3) == Scalar(0, 3, 3));
    CHECK(Scalar::root_pow(3, -2) == Scalar::rational(Rat(1, 3), 3));
    CHECK(Scalar::root_pow(3, -1) == Scalar(0, Rat(1, 3), 3));
    CHECK(Scalar::root_pow(3, -1) * Scalar::root_pow(3, 1) == Scalar::one(3));
}

TEST_CASE("field axioms on random exact values") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto rnd = [&](long q) {
        return Scalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), q);
    };
    for (long q : {2L, 3L, 5L}) {
        for (int t = 0; t < 200; ++t) {
            Scalar a = rnd(q), b = rnd(q), c = rnd(q);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(q));
                CHECK(a / a == Scalar::one(q));
            }
        }
    }
}

TEST_CASE("division by zero rejected") {
    CHECK_THROWS_AS(Scalar::one(2) / Scalar::zero(2), arithmetic_error);
}

TEST_CASE("serialization round trip") {
    for (std::string lit : {"3/2+1/2*r", "-2*r", "0", "7", "-3/4", "1+r", "2-r"}) {
        Scalar s = parse_scalar(lit, 2);
        CHECK(parse_scalar(s.str(), 2) == s);
    }
    CHECK(parse_scalar("3/2+1/2*r", 2).str() == "3/2+1/2*r");
    CHECK(parse_scalar("r", 2) == Scalar::root(2));
    CHECK_THROWS(parse_scalar("", 2));
    CHECK_THROWS(parse_scalar("1++2", 2));
}

TEST_CASE("prime power detection") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(4));
    CHECK(is_prime_power(9));
    CHECK(is_prime_power(8));
    CHECK(!is_prime_power(6));
    CHECK(!is_prime_power(1));
    CHECK(!is_prime_power(12));
}
