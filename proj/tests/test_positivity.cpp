#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "segrelab/errors.hpp"
#include "segrelab/positivity.hpp"

using namespace segrelab;

namespace {
BigRational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_CASE("verdict bookkeeping") {
    const auto v = make_verdict({{"a", true}, {"b", false}}, SegreValue(q(3)), {{"c", true}});
    CHECK_FALSE(v.hypotheses_hold());
    CHECK(v.conclusion == Conclusion::not_covered);
    CHECK(v.flag("c"));
    CHECK_THROWS_AS((void)v.flag("zzz"), std::out_of_range);
    const auto w = make_verdict({{"a", true}}, SegreValue(q(-1)));
    CHECK(w.conclusion == Conclusion::big_nef_predicted);
    CHECK_FALSE(w.consistent());
}

TEST_CASE("K3 checker") {
    SUBCASE("corollary line bundles") {
        for (int k = 1; k <= 5; ++k) {
            for (std::int64_t g = 3 * k - 1; g <= 3 * k + 6; ++g) {
                for (std::int64_t n = 1; n <= 3; ++n) {
                    const auto b = SurfaceBundle::on(GeometryKind::K3, 1, n * n * (2 * g - 2), 0);
                    CHECK(chi_riemann_roch(b) == 2 + n * n * (g - 1));
                    const auto v = check_k3(b, k);
                    CHECK(v.hypotheses_hold());
                    CHECK(v.segre.positive());
                }
            }
        }
    }
    SUBCASE("k = 0") {
        const auto v = check_k3(SurfaceBundle::on(GeometryKind::K3, 1, 0, 0), 0);
        CHECK(v.hypotheses_hold());
        CHECK(v.segre.value == 1);
    }
    SUBCASE("desk grid") {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (int k = 1; k <= 8; ++k) {
                for (std::int64_t d = 0; d <= 6; ++d) {
                    for (std::int64_t j = 0; j <= 6; ++j) {
                        const auto b = bundle_from_chi_delta(GeometryKind::K3, r, (r + 2) * k + j, q(d));
                        const auto v = check_k3(b, k);
                        CHECK(v.hypotheses_hold());
                        CHECK(v.segre.positive());
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(check_k3(SurfaceBundle::on(GeometryKind::Abelian, 1, 2, 0), 1), UnsupportedGeometryError);
}

TEST_CASE("abelian and Enriques checkers") {
    for (int k = 1; k <= 5; ++k) {
        for (std::int64_t L = 6 * k; L <= 6 * k + 10; L += 2) {
            const auto v = check_abelian(SurfaceBundle::on(GeometryKind::Abelian, 1, L, 0), k);
            CHECK(v.flag("chi_ge_(r+2)k"));
            CHECK(v.segre.positive());
        }
    }
    for (int k = 1; k <= 6; ++k) {
        const auto b = bundle_from_chi_delta(GeometryKind::Enriques, 3, 2 * k * 4, 0);
        const auto v = check_enriques(b, k);
        CHECK(v.hypotheses_hold());
        CHECK(v.segre.positive());
    }
    const auto even = bundle_from_chi_delta(GeometryKind::Enriques, 2, 40, q(1, 2));
    CHECK_FALSE(check_enriques(even, 2).flag("rank_odd"));
    CHECK(check_enriques_conjecture(even, 2).hypotheses_hold());
    CHECK_THROWS_AS(check_enriques(SurfaceBundle::on(GeometryKind::K3, 1, 2, 0), 1), UnsupportedGeometryError);
    CHECK_THROWS_AS(check_abelian(SurfaceBundle::on(GeometryKind::K3, 1, 2, 0), 1), UnsupportedGeometryError);
}

TEST_CASE("bundle_from_chi_delta round trips") {
    for (GeometryKind kind : {GeometryKind::K3, GeometryKind::Abelian, GeometryKind::Enriques}) {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (std::int64_t chi = -3; chi <= 12; ++chi) {
                for (int dd = 0; dd <= 8; ++dd) {
                    const BigRational d = q(dd, 2);
                    const bool half = dd % 2 == 1;
                    const bool realizable = kind == GeometryKind::Enriques ? (half == (r % 2 == 0)) : !half;
                    if (!realizable) {
                        CHECK_THROWS_AS(bundle_from_chi_delta(kind, r, chi, d), InconsistentDataError);
                        continue;
                    }
                    const auto b = bundle_from_chi_delta(kind, r, chi, d);
                    CHECK(chi_riemann_roch(b) == chi);
                    CHECK(delta(kind, b) == d);
                }
            }
        }
    }
}

TEST_CASE("Enriques small cases are all positive") {
    const auto cases = enriques_small_cases();
    CHECK_FALSE(cases.empty());
    for (const auto& c : cases) {
        CHECK(c.k >= 2);
        CHECK(c.k <= 5);
        CHECK(c.chi < 4 * c.k);
        CHECK(2 * c.chi >= 2 + (c.k + 1) * (c.k + 1));
        CHECK(c.segre.value == oracle::enriques_segre(1, c.chi, 0, c.k));
        CHECK(c.segre.positive());
    }
}

TEST_CASE("positivity lemma") {
    SUBCASE("the two sharpness examples") {
        const auto a = verify_positivity_lemma(2, 19, 1, 12);
        CHECK(a.bound == 1);
        CHECK(a.coefficients[10] < 0);
        CHECK(a.coefficients[10] == oracle::lemma_series(2, 19, 1, 10)[10]);
        CHECK(a.coefficients[10] == -4632);
        const auto b = verify_positivity_lemma(4, 0, 0, 4);
        CHECK(b.coefficients[3] == 0);
        CHECK(b.coefficients == std::vector<BigRational>{16, 64, 0, 0, 16});
    }
    SUBCASE("bound on the hypothesis grid") {
        for (std::int64_t m = 0; m <= 12; ++m) {
            for (std::int64_t p = 0; p <= 12; ++p) {
                for (std::int64_t n = -12; n <= 12; ++n) {
                    if ((m + n + p) % 2 != 0) {
                        continue;
                    }
                    const std::int64_t bound = std::min((m + n + p) / 2 - 1, m - 1);
                    const int order = static_cast<int>(std::max<std::int64_t>(bound + 1, 1));
                    const auto rep = verify_positivity_lemma(m, n, p, order);
                    CHECK(rep.hypotheses);
                    CHECK(rep.bound == bound);
                    CHECK(rep.bound_respected);
                    CHECK(rep.complete);
                    const auto o = oracle::lemma_series(m, n, p, order);
                    for (std::int64_t i = 0; i <= bound; ++i) {
                        CHECK(o[static_cast<std::size_t>(i)] > 0);
                    }
                }
            }
        }
    }
    SUBCASE("hypothesis violations are reported, not asserted") {
        const auto r = verify_positivity_lemma(-1, 3, 0, 4);
        CHECK_FALSE(r.hypotheses);
        CHECK(verify_positivity_lemma(2, 1, 0, 3).hypotheses == false);
    }
}

TEST_CASE("lemma factor patterns") {
    for (std::int64_t m = 1; m <= 13; ++m) {
        if (m % 2 == 0) {
            const auto all_even = verify_lemma_factor(m, LemmaFactor::all_even);
            CHECK(all_even.holds);
            CHECK(all_even.zero_from == m / 2);
            for (std::int64_t i = m / 2; i <= m - 1; ++i) {
                CHECK(all_even.coefficients[static_cast<std::size_t>(i)] == 0);
            }
            CHECK(verify_lemma_factor(m, LemmaFactor::even_m).holds);
            CHECK_THROWS_AS(verify_lemma_factor(m, LemmaFactor::odd_m_2t), DomainError);
        } else {
            CHECK(verify_lemma_factor(m, LemmaFactor::odd_m_2t).holds);
            CHECK(verify_lemma_factor(m, LemmaFactor::odd_m_6t).holds);
            CHECK_THROWS_AS(verify_lemma_factor(m, LemmaFactor::all_even), DomainError);
        }
    }
}

TEST_CASE("rank-one very ampleness obstruction") {
    CHECK_FALSE(bs_obstruction_rank1(3, 2, 0, 10).witness);
    // the chain is impossible once H^2 = 2h > 4k, for every multiple n
    for (std::int64_t k = 1; k <= 8; ++k) {
        for (std::int64_t h = 2 * k + 1; h <= 2 * k + 6; ++h) {
            for (std::int64_t n = 1; n <= 6; ++n) {
                const auto o = bs_obstruction_rank1(n, h, k, 50);
                CHECK(o.l_sq_gt_4k);
                CHECK_FALSE(o.witness);
            }
        }
        for (std::int64_t h = k; h <= k + 5; ++h) {
            CHECK_FALSE(bs_obstruction_rank1(1, h, k, 50).witness);
        }
    }
    // L^2 > 4k alone is not enough
    const auto w = bs_obstruction_rank1(5, 1, 10, 50);
    CHECK(w.l_sq_gt_4k);
    REQUIRE(w.witness);
    CHECK(*w.witness == 1);
}

TEST_CASE("blowup obstruction search") {
    std::int64_t gated = 0;
    for (std::int64_t h = 1; h <= 60; ++h) {
        for (std::int64_t ell = 0; ell <= 8; ++ell) {
            for (int k = 1; k <= 8; ++k) {
                if (!check_blowup(h, ell, k).hypotheses_hold()) {
                    continue;
                }
                ++gated;
                const auto o = bs_obstruction_blowup(h, ell, k);
                CHECK(o.m_sq_gt_4k);
                if (ell + 1 < 2 * k) {
                    REQUIRE(o.candidates.size() == 1);
                    CHECK(o.candidates[0].a == 0);
                    CHECK(o.candidates[0].b == 1);
                    CHECK(o.requires_cohomology);
                } else {
                    CHECK(o.candidates.empty());
                    CHECK_FALSE(o.requires_cohomology);
                }
            }
        }
    }
    CHECK(gated > 100);
    // hypothesis gate: M^2 > 4k fails
    CHECK_FALSE(bs_obstruction_blowup(5, 2, 1).m_sq_gt_4k);
    // a = 0, b >= 2 would need b (ell + 1) < 2k
    for (const auto& c : bs_obstruction_blowup(40, 3, 3).candidates) {
        CHECK(c.b * 4 < 6);
    }
}

TEST_CASE("Seshadri lower bounds") {
    CHECK(seshadri_lower_bound(10) == q(5, 2));
    CHECK(seshadri_lower_bound(16) == 4);
    CHECK(seshadri_lower_bound(18) == q(18, 5));  // 18 = 4^2 + 4 - 2
    CHECK(seshadri_lower_bound(20) == 4);
    CHECK(seshadri_lower_bound(52) == q(104, 15));  // 52 = 7^2 + (7 - 1)/2
    CHECK(seshadri_lower_bound(2) == 1);
    CHECK_THROWS_AS(seshadri_lower_bound(7), DomainError);
    CHECK_THROWS_AS(seshadri_lower_bound(0), DomainError);
}

TEST_CASE("blowup checker") {
    const auto v = check_blowup(30, 3, 3);
    CHECK(v.hypotheses_hold());
    CHECK(v.segre.positive());
    CHECK(v.flag("seshadri_ge_ell+1"));
    CHECK_FALSE(check_blowup(30, 1, 3).flag("ell_ge_k-1"));
    for (std::int64_t h = 1; h <= 60; ++h) {
        for (std::int64_t ell = 0; ell <= 8; ++ell) {
            for (int k = 1; k <= 8; ++k) {
                const auto b = check_blowup(h, ell, k);
                if (b.hypotheses_hold()) {
                    CHECK(b.segre.positive());
                    CHECK(b.flag("seshadri_ge_ell+1"));
                }
                if (k <= ell + 1 && 2 * h > ell * (ell + 1) + 6 * k - 6) {
                    CHECK(b.segre.positive());
                }
            }
        }
    }
}

TEST_CASE("general-type checker") {
    // K^2 = chi(O) = 1, L.K = k + 3, chi(L) = 3k
    for (int k = 1; k <= 6; ++k) {
        const std::int64_t LK = k + 3;
        const std::int64_t L_sq = 2 * (3 * k - 1) + LK;
        const auto v = check_general_type(L_sq, LK, 1, 1, k);
        CHECK(v.hypotheses_hold());
        CHECK(v.flag("k_le_lemma_bound"));
        CHECK(v.segre.positive());
    }
    CHECK(check_general_type(4, 2, 1, 1, 0).segre.value == 1);
    // the two inequalities are exactly k <= min((m+n+p)/2 - 1, m - 1)
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> K(1, 9), chi(1, 6), LK(-5, 40), L(-20, 80), kk(0, 10);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t K_sq = K(rng), c = chi(rng), lk = LK(rng);
        std::int64_t l = L(rng);
        if ((l - lk) % 2 != 0) {
            ++l;
        }
        const int k = kk(rng);
        const auto v = check_general_type(l, lk, K_sq, c, k);
        CHECK((v.flag("chi(L)_ge_3k") && v.flag("LK_ge_2K^2+k+1")) == v.flag("k_le_lemma_bound"));
        if (v.hypotheses_hold()) {
            CHECK(v.segre.positive());
        }
    }
}

TEST_CASE("curve and Quot checkers") {
    for (std::int64_t g = 0; g <= 5; ++g) {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (std::int64_t d = -4; d <= 24; ++d) {
                for (int k = 0; k <= 8; ++k) {
                    const auto v = check_curve_criterion(CurveBundle{g, r, d}, k);
                    if (v.hypotheses_hold()) {
                        CHECK(v.segre.positive());
                    }
                    if (r <= 4 && d <= 20) {
                        const auto w = check_quot_criterion(g, r, d, k);
                        if (w.hypotheses_hold()) {
                            CHECK(w.segre.positive());
                        }
                    }
                }
            }
        }
    }
    CHECK(check_curve_criterion(CurveBundle{0, 1, 3}, 1).segre.value == 3);
}
