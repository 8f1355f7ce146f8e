#include "doctest.h"
#include "segrelab/families.hpp"

using namespace segrelab;

TEST_CASE("Ulrich numerics") {
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t h = 1; h <= 10; ++h) {
            const auto u = ulrich_numerics(a, h);
            CHECK(u.E.rank == 2 * a);
            CHECK(u.E.c1_sq == 9 * a * a * 2 * h);
            CHECK(u.E.c2 == 9 * a * a * h - 4 * a * (h - 1));
            CHECK(u.chi_F == 12 * a * h);
            CHECK(u.delta_F == 1 + a * a * h + 4 * a * a);
        }
    }
    // a = 1, h = 2k - 2: 24(k - 1) >= 4k
    for (int k = 2; k <= 8; ++k) {
        const auto rep = family_ulrich(1, 2 * k - 2, k);
        CHECK(rep.verdict.hypotheses_hold());
        CHECK(rep.verdict.flag("chi_ge_(r+2)k"));
        CHECK(rep.verdict.segre.positive());
    }
    const auto pass = family_ulrich(1, 5, 2);
    CHECK(pass.verdict.conclusion == Conclusion::big_nef_predicted);
    CHECK(pass.numeric("chi(F)") == 60);
    // m = 1 is the default polarization
    CHECK(ulrich_numerics(2, 3, 1).F == ulrich_numerics(2, 3).F);
    CHECK(ulrich_numerics(1, 2, 2).E.c1_sq == 36 * 4);
}

TEST_CASE("Lazarsfeld-Mukai numerics") {
    for (std::int64_t g = 2; g <= 16; ++g) {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (std::int64_t d = 1; d <= 2 * g; ++d) {
                const auto lm = lazarsfeld_mukai_numerics(g, d, r);
                CHECK(lm.E.c2 == d);
                CHECK(lm.chi_E == r + g - 1 - d + r);
                CHECK(lm.chi_F == g * (r + 3) - d + r - 3);
                CHECK(lm.delta_F == lm.rho);
                if (r == 2) {
                    CHECK(lm.delta_E == lm.rho);
                }
                for (int k = 2; k <= 6; ++k) {
                    const auto reps = family_lazarsfeld_mukai(g, d, r, k);
                    const auto& tw = reps.front();
                    if (tw.verdict.hypotheses_hold()) {
                        CHECK(tw.verdict.flag("chi_ge_(r+2)k"));
                        CHECK(tw.verdict.segre.positive());
                    }
                    if (r == 2) {
                        REQUIRE(reps.size() == 2);
                        if (reps[1].verdict.hypotheses_hold()) {
                            CHECK(reps[1].verdict.flag("chi(E)_ge_4k+rho"));
                            CHECK(reps[1].verdict.segre.positive());
                        }
                    }
                }
            }
        }
    }
    const auto reps = family_lazarsfeld_mukai(9, 10, 2, 2);
    CHECK(reps[0].verdict.hypotheses_hold());
    CHECK(reps[0].numeric("rho") == 9);
    CHECK(reps[0].numeric("chi(F)") == 34);
    // rho < 0 fails
    CHECK_FALSE(family_lazarsfeld_mukai(4, 2, 3, 2).front().verdict.flag("rho_ge_0"));
}

TEST_CASE("semihomogeneous bundles") {
    const auto ok = family_semihomogeneous(2, 5, 1);
    CHECK(ok.verdict.hypotheses_hold());
    CHECK(ok.numeric("chi") == 25);
    CHECK(ok.numeric("delta") == 0);
    CHECK(ok.verdict.segre.positive());
    CHECK_FALSE(family_semihomogeneous(2, 4, 1).verdict.flag("gcd(a,b)_eq_1"));
    CHECK_FALSE(family_semihomogeneous(1, 3, 3).verdict.flag("b_gt_a^2k"));
    for (std::int64_t a = 1; a <= 3; ++a) {
        for (std::int64_t b = 1; b <= 30; ++b) {
            for (int k = 1; k <= 4; ++k) {
                const auto rep = family_semihomogeneous(a, b, k);
                if (rep.verdict.hypotheses_hold()) {
                    CHECK(rep.verdict.flag("b^2_ge_(a^2+2)k"));
                    CHECK(rep.verdict.segre.positive());
                }
            }
        }
    }
}

TEST_CASE("line-bundle corollaries and unipotent twists") {
    for (int k = 1; k <= 5; ++k) {
        for (std::int64_t g = 3 * k - 1; g <= 3 * k + 3; ++g) {
            const auto rep = family_k3_line(2, g, k);
            CHECK(rep.verdict.hypotheses_hold());
            CHECK(rep.verdict.segre.positive());
        }
        const auto ab = family_abelian_line(1, 6 * k, k);
        CHECK(ab.verdict.hypotheses_hold());
        CHECK(ab.verdict.flag("no_obstruction_divisor"));
        CHECK(ab.verdict.segre.positive());
        const auto un = family_unipotent(3, 4 * k + 2, k);
        CHECK(un.verdict.hypotheses_hold());
        CHECK(un.verdict.segre.positive());
    }
    for (int k = 2; k <= 6; ++k) {
        for (std::int64_t H = 2; H <= 8; H += 2) {
            const auto rep = family_enriques_line(k + 1, H, k);
            CHECK(rep.verdict.hypotheses_hold());
            CHECK(rep.verdict.segre.positive());
        }
    }
    const auto bl = family_blowup_line(30, 3, 3);
    CHECK(bl.verdict.hypotheses_hold());
    CHECK(bl.numeric("L^2") == 51);
}
