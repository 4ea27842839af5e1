#include "doctest.h"
#include "eiscalc/rootdata.hpp"
#include "eiscalc/serialize.hpp"

#include <set>

using namespace eiscalc;

TEST_CASE("gl constructors") {
    auto d1 = BasedRootDatum::gl(1);
    CHECK(d1.num_simple() == 0);
    CHECK(d1.positive_coroots().empty());

    auto d2 = BasedRootDatum::gl(2);
    CHECK(d2.simple_coroots() == std::vector<Coweight>{{1, -1}});

    auto d3 = BasedRootDatum::gl(3);
    CHECK(d3.simple_coroots() == std::vector<Coweight>{{1, -1, 0}, {0, 1, -1}});
    std::set<Coweight> pos(d3.positive_coroots().begin(), d3.positive_coroots().end());
    CHECK(pos == std::set<Coweight>{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}});

    CHECK_THROWS_AS(BasedRootDatum::gl(0), rootdata_error);
}

TEST_CASE("rho and pairings") {
    auto d3 = BasedRootDatum::gl(3);
    CHECK(d3.rho_check() == RatVec{1, 0, -1});
    CHECK(d3.rho() == RatVec{1, 0, -1});
    auto d2 = BasedRootDatum::gl(2);
    CHECK(d2.rho_check() == RatVec{Rat(1, 2), Rat(-1, 2)});
    CHECK(d2.rho() == RatVec{Rat(1, 2), Rat(-1, 2)});
    // <alpha_i, rho_check> = 1 = <rho, alpha_check_i> for every simple index
    for (int n : {2, 3, 4, 5}) {
        auto d = BasedRootDatum::gl(n);
        for (int i = 0; i < d.num_simple(); ++i) {
            CHECK(d.height2(d.simple_coroots()[i]) == 2);
            Rat pairing = 0;
            for (int j = 0; j < n; ++j) pairing += d.rho()[j] * d.simple_roots()[i][j];
            CHECK(pairing == 1);
        }
    }
}

TEST_CASE("weyl group sizes and w0") {
    long fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        auto d = BasedRootDatum::gl(n);
        CHECK((long)d.weyl_group().size() == fact);
        // w0 sends every positive coroot to a negative one
        for (auto& a : d.positive_coroots()) {
            Coweight img = d.w0().apply(a);
            CHECK(d.positive_coefficients(vneg(img)).has_value());
        }
    }
    auto d2 = BasedRootDatum::gl(2);
    CHECK(d2.weyl_group().size() == 2);
    CHECK(d2.w0().apply({5, 7}) == Coweight{7, 5});
    CHECK(BasedRootDatum::gl(1).weyl_group().size() == 1);
}

TEST_CASE("weyl words compose in application order") {
    auto d3 = BasedRootDatum::gl(3);
    auto w = d3.word_element({0, 1});  // s_0 s_1, rightmost first
    Coweight v{3, 1, 0};
    Coweight expect = d3.reflect(0, d3.reflect(1, v));
    CHECK(w.apply(v) == expect);
    // matrices are the identity criterion
    CHECK(d3.word_element({0, 0}) == d3.identity_element());
}

TEST_CASE("dominance order") {
    auto d3 = BasedRootDatum::gl(3);
    CHECK(d3.dominance_leq({0, 0, 0}, {2, -1, -1}));
    CHECK(d3.dominance_leq({1, 0, -1}, {1, 0, -1}));
    auto d2 = BasedRootDatum::gl(2);
    CHECK(!d2.dominance_leq({0, 0}, {-1, 1}));

    // partial order on a sample: reflexive, antisymmetric, transitive
    std::vector<Coweight> sample{{0, 0, 0}, {1, 0, -1}, {2, 0, -2}, {1, 1, -2},
                                 {2, -1, -1}, {0, 1, -1}, {3, -1, -2}};
    for (auto& a : sample) {
        CHECK(d3.dominance_leq(a, a));
        for (auto& b : sample) {
            if (d3.dominance_leq(a, b) && d3.dominance_leq(b, a)) CHECK(a == b);
            for (auto& c : sample)
                if (d3.dominance_leq(a, b) && d3.dominance_leq(b, c))
                    CHECK(d3.dominance_leq(a, c));
        }
    }
}

TEST_CASE("levi subdata") {
    auto d3 = BasedRootDatum::gl(3);
    auto levi = d3.levi({0});
    CHECK(levi.rank() == 3);
    CHECK(levi.num_simple() == 1);
    CHECK(levi.positive_coroots() == std::vector<Coweight>{{1, -1, 0}});
    CHECK(d3.levi({}).num_simple() == 0);
    CHECK(d3.levi({0, 1}).positive_coroots().size() == 3);
    CHECK_THROWS_AS(d3.levi({7}), rootdata_error);
}

TEST_CASE("dominant representative") {
    auto d3 = BasedRootDatum::gl(3);
    CHECK(d3.dominant_representative({-1, 0, 1}) == Coweight{1, 0, -1});
    CHECK(d3.dominant_representative({2, 5, 1}) == Coweight{5, 2, 1});
}

TEST_CASE("named data and records") {
    auto d = BasedRootDatum::named("gl2");
    CHECK(d.rank() == 2);
    CHECK(datum_record(d).find("\"rank\":2") != std::string::npos);
    CHECK_THROWS(BasedRootDatum::named("e8"));
}

TEST_CASE("malformed data rejected") {
    // <alpha, alpha_check> must be 2
    CHECK_THROWS_AS(BasedRootDatum(1, {{1}}, {{1}}), rootdata_error);
    // affine-type input must fail the closure limit
    CHECK_THROWS_AS(BasedRootDatum(2, {{2, -2}, {-2, 2}}, {{1, -1}, {-1, 1}}),
                    rootdata_error);
}
