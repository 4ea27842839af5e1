#include "doctest.h"
#include "eiscalc/repcomb.hpp"

using namespace eiscalc;

TEST_CASE("kostant partition counts") {
    RepCalc gl3(BasedRootDatum::gl(3));
    CHECK(gl3.kostant_count({1, 0, -1}) == 2);
    CHECK(gl3.kostant_count({2, 0, -2}) == 3);
    CHECK(gl3.kostant_count({0, 0, 0}) == 1);
    CHECK(gl3.kostant_count({1, 0, 0}) == 0);   // not in the positive cone
    CHECK(gl3.kostant_count({-1, 1, 0}) == 0);
    RepCalc gl2(BasedRootDatum::gl(2));
    CHECK(gl2.kostant_count({3, -3}) == 1);
}

TEST_CASE("q-analog refines the plain count") {
    RepCalc gl3(BasedRootDatum::gl(3));
    auto v = gl3.q_kostant({1, 0, -1});
    // theta itself, and alpha_1 + alpha_2
    CHECK(v.coeffs == std::map<long, Int>{{1, 1}, {2, 1}});
    auto z = gl3.q_kostant({0, 0, 0});
    CHECK(z.coeffs == std::map<long, Int>{{0, 1}});
    RepCalc gl2(BasedRootDatum::gl(2));
    for (long k : {1L, 2L, 5L})
        CHECK(gl2.q_kostant({k, -k}).coeffs == std::map<long, Int>{{k, 1}});
    // total mass equals the unrefined count across a sweep
    for (long a = 0; a <= 4; ++a)
        for (long b = -4; b <= 0; ++b) {
            Coweight lam{a, -a - b, b};
            if (!BasedRootDatum::gl(3).positive_coefficients(lam)) continue;
            CHECK(gl3.q_kostant(lam).total() == gl3.kostant_count(lam));
        }
}

TEST_CASE("weight multiplicities, small gl cases") {
    RepCalc gl3(BasedRootDatum::gl(3));
    CHECK(gl3.weight_multiplicity({1, 0, -1}, {0, 0, 0}) == 2);
    CHECK(gl3.weight_multiplicity({1, 0, -1}, {1, 0, -1}) == 1);
    CHECK(gl3.weight_multiplicity({1, 0, -1}, {1, -1, 0}) == 1);
    CHECK(gl3.weight_multiplicity({1, 0, -1}, {2, -1, -1}) == 0);
    RepCalc gl2(BasedRootDatum::gl(2));
    CHECK(gl2.weight_multiplicity({3, 0}, {1, 2}) == 1);
    CHECK(gl2.weight_multiplicity({3, 0}, {2, 1}) == 1);
    CHECK(gl2.weight_multiplicity({3, 0}, {4, -1}) == 0);
    CHECK_THROWS_AS(gl2.weight_multiplicity({0, 3}, {1, 2}), rootdata_error);
}

TEST_CASE("characters carry Weyl-invariant masses") {
    RepCalc gl2(BasedRootDatum::gl(2));
    auto std2 = gl2.character({1, 0});
    CHECK(std2 == WeightMultiset{{{1, 0}, 1}, {{0, 1}, 1}});

    RepCalc gl3(BasedRootDatum::gl(3));
    auto adj = gl3.character({1, 0, -1});
    CHECK(adj.size() == 7);
    CHECK(adj.at({0, 0, 0}) == 2);
    Int mass = 0;
    for (auto& [mu, m] : adj) mass += m;
    CHECK(mass == 8);
    CHECK(gl3.weyl_dimension({1, 0, -1}) == 8);

    RepCalc gl1(BasedRootDatum::gl(1));
    CHECK(gl1.character({5}) == WeightMultiset{{{5}, 1}});

    // W-invariance of the multiset
    const auto& d3 = gl3.datum();
    for (auto& w : d3.weyl_group())
        for (auto& [mu, m] : adj) CHECK(adj.at(w.apply(mu)) == m);
}

TEST_CASE("kostant and freudenthal agree through the sweep") {
    for (int n : {2, 3}) {
        BasedRootDatum d = BasedRootDatum::gl(n);
        RepCalc rc(d);
        // dominant lam with <lam, 2 rho_check> <= 12, normalized to lam_n in {-2..2}
        std::vector<Coweight> doms;
        if (n == 2) {
            for (long a = 0; a <= 6; ++a) doms.push_back({a, 0});
        } else {
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; b <= a; ++b)
                    for (long c = -3; c <= 0 && c <= b; ++c) {
                        Coweight lam{a, b, c};
                        if (d.height2(lam) <= 12 && d.is_dominant(lam)) doms.push_back(lam);
                    }
        }
        for (auto& lam : doms) {
            for (auto& mu : dominant_weights_below(d, lam)) {
                CHECK(rc.weight_multiplicity(lam, mu) == rc.freudenthal_multiplicity(lam, mu));
            }
            // multiplicity is W-invariant and the lowest weight is a line
            CHECK(rc.weight_multiplicity(lam, d.w0().apply(lam)) == 1);
        }
    }
}

TEST_CASE("tensor products") {
    RepCalc gl2(BasedRootDatum::gl(2));
    CHECK(gl2.tensor_multiplicity({1, 1}, {1, 0}, {1, 0}) == 1);
    CHECK(gl2.tensor_multiplicity({2, 0}, {1, 0}, {1, 0}) == 1);
    CHECK(gl2.tensor_multiplicity({3, -1}, {1, 0}, {1, 0}) == 0);
    CHECK(gl2.tensor_multiplicity({2, 1}, {2, 1}, {0, 0}) == 1);

    RepCalc gl3(BasedRootDatum::gl(3));
    CHECK(gl3.tensor_multiplicity({0, 0, 0}, {1, 0, 0}, {0, 0, -1}) == 1);
    CHECK(gl3.tensor_multiplicity({1, 0, -1}, {1, 0, 0}, {0, 0, -1}) == 1);

    // symmetry in the two factors across a small grid
    std::vector<Coweight> grid{{1, 0, 0}, {1, 1, 0}, {1, 0, -1}, {2, 0, 0}};
    for (auto& l1 : grid)
        for (auto& l2 : grid) {
            auto d12 = gl3.tensor_decomposition(l1, l2);
            auto d21 = gl3.tensor_decomposition(l2, l1);
            CHECK(d12 == d21);
        }
}

TEST_CASE("branching to levi subgroups") {
    RepCalc gl3(BasedRootDatum::gl(3));
    auto b1 = gl3.branch_to_levi({0}, {1, 0, 0});
    CHECK(b1 == std::map<Coweight, Int>{{{1, 0, 0}, 1}, {{0, 0, 1}, 1}});
    auto b2 = gl3.branch_to_levi({0}, {1, 0, -1});
    CHECK(b2 == std::map<Coweight, Int>{
                    {{1, -1, 0}, 1}, {{1, 0, -1}, 1}, {{0, -1, 1}, 1}, {{0, 0, 0}, 1}});
    // identity case
    auto bfull = gl3.branch_to_levi({0, 1}, {1, 0, -1});
    CHECK(bfull == std::map<Coweight, Int>{{{1, 0, -1}, 1}});

    // branching consistency: sum_nu Hom * dim U^nu(mu) = dim V^lam(mu)
    BasedRootDatum d3 = BasedRootDatum::gl(3);
    BasedRootDatum levi = d3.levi({0});
    RepCalc lc(levi);
    for (Coweight lam : {Coweight{1, 0, -1}, Coweight{2, 0, 0}, Coweight{2, 1, -1}}) {
        auto branch = gl3.branch_to_levi({0}, lam);
        for (auto& mu : dominant_weights_below(d3, lam)) {
            Int direct = gl3.weight_multiplicity(lam, mu);
            Int viaLevi = 0;
            for (auto& [nu, hom] : branch) {
                if (!levi.is_dominant(nu)) continue;
                viaLevi += hom * lc.weight_multiplicity(nu, mu);
            }
            CHECK(direct == viaLevi);
        }
    }
}

TEST_CASE("height cap guards the enumeration") {
    RepCalc gl2(BasedRootDatum::gl(2));
    CHECK_THROWS_AS(gl2.kostant_count({40, -40}), rootdata_error);
}
