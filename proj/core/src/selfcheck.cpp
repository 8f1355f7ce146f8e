#include "segrelab/selfcheck.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "segrelab/families.hpp"
#include "segrelab/positivity.hpp"
#include "segrelab/scan.hpp"
#include "segrelab/series.hpp"

namespace segrelab {

namespace {

struct Context {
    std::uint64_t seed;
    unsigned workers;
};

// Accumulates failures; the first few are kept as the detail text.
class Tally {
  public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            if (failures_ < 3) {
                detail_ += (detail_.empty() ? "" : "; ") + what;
            }
            ++failures_;
        }
    }
    PropertyResult result(std::string name) const {
        PropertyResult r;
        r.name = std::move(name);
        r.passed = failures_ == 0;
        r.detail = failures_ == 0 ? std::to_string(checks_) + " checks"
                                  : std::to_string(failures_) + " of " + std::to_string(checks_) + " failed: " + detail_;
        return r;
    }

  private:
    std::int64_t checks_ = 0;
    std::int64_t failures_ = 0;
    std::string detail_;
};

BigRational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

std::string cell(std::initializer_list<std::int64_t> v) {
    std::string s = "(";
    bool first = true;
    for (auto x : v) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + ")";
}

PropertyResult sqrt_expansion(const Context&) {
    Tally t;
    const auto a = rational_pow(TruncatedSeries::linear(1, 2, 4), q(1, 2));
    const auto b = rational_pow(TruncatedSeries::linear(1, 6, 4), q(1, 2));
    t.check(a == series_from_coeffs({q(1), q(1), q(-1, 2), q(1, 2), q(-5, 8)}, 4), "sqrt(1+2t)");
    t.check(b == series_from_coeffs({q(1), q(3), q(-9, 2), q(27, 2), q(-405, 8)}, 4), "sqrt(1+6t)");
    return t.result("sqrt-expansion");
}

PropertyResult lemma_counterexamples(const Context&) {
    Tally t;
    const LemmaReport a = verify_positivity_lemma(2, 19, 1, 10);
    t.check(a.hypotheses && a.coefficients[10] < 0, "(2,19,1) index 10 not negative");
    t.check(a.first_nonpositive == 10, "(2,19,1) first nonpositive index");
    const LemmaReport b = verify_positivity_lemma(4, 0, 0, 3);
    t.check(b.hypotheses && b.coefficients[3] == 0, "(4,0,0) index 3 not zero");
    t.check(a.bound_respected && b.bound_respected, "bound at the counterexamples");
    return t.result("lemma-counterexamples");
}

PropertyResult two_path(const Context&) {
    Tally t;
    for (GeometryKind kind : {GeometryKind::K3, GeometryKind::Enriques}) {
        for (std::int64_t r = 1; r <= 3; ++r) {
            for (std::int64_t c1 = -2; c1 <= 8; c1 += 2) {
                for (std::int64_t c2 = -2; c2 <= 4; ++c2) {
                    const SurfaceBundle b = SurfaceBundle::on(kind, r, c1, c2);
                    const TruncatedSeries s = segre_series(kind, b, 8);
                    const std::int64_t chi = chi_riemann_roch(b);
                    const BigRational d = delta(kind, b);
                    for (int k = 0; k <= 8; ++k) {
                        t.check(s[k] == segre_closed(kind, r, chi, d, k).value,
                                std::string(to_string(kind)) + cell({r, c1, c2, k}));
                    }
                }
            }
        }
    }
    return t.result("two-path");
}

PropertyResult delta0(const Context&) {
    Tally t;
    for (std::int64_t r = 1; r <= 6; ++r) {
        for (std::int64_t chi = -10; chi <= 40; ++chi) {
            for (int k = 0; k <= 8; ++k) {
                t.check(segre_closed(GeometryKind::K3, r, chi, 0, k) == segre_delta0(r, chi, k), cell({r, chi, k}));
            }
        }
    }
    return t.result("delta0");
}

PropertyResult k1_identities(const Context&) {
    Tally t;
    for (std::int64_t L_sq = -8; L_sq <= 30; L_sq += 2) {
        for (GeometryKind kind : {GeometryKind::K3, GeometryKind::Abelian, GeometryKind::Enriques}) {
            const SurfaceBundle b = SurfaceBundle::on(kind, 1, L_sq, 0);
            t.check(delta(kind, b) == 0, "rank one delta");
            t.check(segre_closed(kind, 1, chi_riemann_roch(b), 0, 1).value == L_sq,
                    std::string(to_string(kind)) + cell({L_sq}));
        }
    }
    for (std::int64_t g = 0; g <= 5; ++g) {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (std::int64_t d = -5; d <= 20; ++d) {
                t.check(segre_curve_closed(CurveBundle{g, r, d}, 1).value == d, "curve" + cell({g, r, d}));
            }
        }
    }
    return t.result("k1-identities");
}

PropertyResult lemma_grid(const Context& ctx) {
    Tally t;
    const ScanReport rep = scan_lemma(grid::lemma_m, grid::lemma_n, grid::lemma_p, {ctx.workers, ctx.seed, {}});
    const ScanCriterion& c = rep.criterion("lemma bound");
    t.check(c.covered > 0, "empty lemma grid");
    t.check(c.violations == 0, std::to_string(c.violations) + " lemma violations");
    for (std::int64_t m = 1; m <= 13; ++m) {
        if (m % 2 == 0) {
            t.check(verify_lemma_factor(m, LemmaFactor::all_even).holds, "all_even m=" + std::to_string(m));
            t.check(verify_lemma_factor(m, LemmaFactor::even_m).holds, "even_m m=" + std::to_string(m));
        } else {
            t.check(verify_lemma_factor(m, LemmaFactor::odd_m_2t).holds, "odd_m_2t m=" + std::to_string(m));
            t.check(verify_lemma_factor(m, LemmaFactor::odd_m_6t).holds, "odd_m_6t m=" + std::to_string(m));
        }
    }
    return t.result("lemma-grid");
}

void expect_clean(Tally& t, const ScanReport& rep, std::string_view criterion) {
    const ScanCriterion& c = rep.criterion(criterion);
    t.check(c.covered > 0, rep.metadata.scan + " covers no rows");
    t.check(c.violations == 0, rep.metadata.scan + " " + std::string(criterion) + ": " +
                                   std::to_string(c.violations) + " counterexamples");
}

PropertyResult theorem_grids(const Context& ctx) {
    Tally t;
    const ScanOptions o{ctx.workers, ctx.seed, {}};
    for (GeometryKind kind : {GeometryKind::K3, GeometryKind::Abelian}) {
        expect_clean(t,
                     scan_k_trivial(kind, grid::k_trivial_r, grid::k_trivial_k, grid::k_trivial_margin,
                                    grid::k_trivial_delta, o),
                     "theorem");
    }
    expect_clean(t, scan_enriques({1, 7}, {1, 6}, {0, 60}, {0, 12}, o), "odd-rank theorem");
    const ScanReport blowup = scan_blowup(grid::blowup_h, grid::blowup_ell, grid::blowup_k, o);
    expect_clean(t, blowup, "theorem");
    expect_clean(t, blowup, "proof bound");
    expect_clean(t,
                 scan_general_type(grid::general_L_sq, grid::general_L_dot_K, grid::general_K_sq, grid::general_chi_O,
                                   grid::general_k, o),
                 "theorem");
    expect_clean(t, scan_curve(grid::curve_g, grid::curve_r, grid::curve_d, grid::curve_k, o), "theorem");
    expect_clean(t, scan_quot(grid::quot_g, grid::quot_N, grid::quot_d, grid::quot_k, o), "theorem");
    for (const auto& c : enriques_small_cases()) {
        t.check(c.segre.positive(), "enriques small case k=" + std::to_string(c.k) + " chi=" + std::to_string(c.chi));
    }
    return t.result("theorem-grids");
}

PropertyResult enriques_experiments(const Context& ctx) {
    Tally t;
    const ScanReport rep = scan_enriques(grid::enriques_r, grid::enriques_k, grid::enriques_margin,
                                         grid::enriques_delta_halves, {ctx.workers, ctx.seed, {}});
    t.check(rep.criterion("(r+2)k bound").violations >= 1, "no counterexample to the (r+2)k bound");
    t.check(rep.criterion("conjecture").violations == 0, "conjecture counterexample");
    t.check(rep.criterion("odd-rank theorem").violations == 0, "odd-rank theorem counterexample");
    return t.result("enriques-experiments");
}

PropertyResult cross_formula(const Context&) {
    Tally t;
    for (std::int64_t L_sq = -6; L_sq <= 24; L_sq += 2) {
        for (int k = 0; k <= 6; ++k) {
            const BigRational rank1 = segre_rank1_general(L_sq, 2, 0, 0, k).value;
            t.check(rank1 == segre_closed(GeometryKind::K3, 1, 2 + L_sq / 2, 0, k).value, "k3" + cell({L_sq, k}));
            t.check(rank1 == segre_rank1_general(L_sq, 2, 0, 0, k, Rank1Route::reversion).value,
                    "routes" + cell({L_sq, k}));
        }
    }
    for (std::int64_t h = 1; h <= 12; ++h) {
        for (std::int64_t ell = 0; ell <= 4; ++ell) {
            for (int k = 0; k <= 5; ++k) {
                t.check(segre_rank1_general(2 * h - ell * ell, 2, ell, -1, k).value ==
                            segre_blowup_k3(h, ell, k).value,
                        "blowup" + cell({h, ell, k}));
            }
        }
    }
    for (std::int64_t K_sq = 1; K_sq <= 3; ++K_sq) {
        for (std::int64_t chi_O = 1; chi_O <= 3; ++chi_O) {
            for (std::int64_t LK = 0; LK <= 10; ++LK) {
                for (std::int64_t L_sq = -6; L_sq <= 12; ++L_sq) {
                    if ((L_sq - LK) % 2 != 0) {
                        continue;
                    }
                    for (int k = 0; k <= 4; ++k) {
                        const MnpTriple m = mnp_from_bundle(L_sq, LK, K_sq, chi_O, k);
                        t.check(segre_general_type(m.m, m.n, m.p, k).value ==
                                    segre_rank1_general(L_sq, chi_O, LK, K_sq, k).value,
                                "general" + cell({K_sq, chi_O, LK, L_sq, k}));
                    }
                }
            }
        }
    }
    return t.result("cross-formula");
}

PropertyResult blowup_internals(const Context&) {
    Tally t;
    std::int64_t gated = 0;
    for (std::int64_t h = 1; h <= 60; ++h) {
        for (std::int64_t ell = 0; ell <= 8; ++ell) {
            for (int k = 1; k <= 8; ++k) {
                if (!check_blowup(h, ell, k).hypotheses_hold()) {
                    continue;
                }
                ++gated;
                const BlowupObstruction o = bs_obstruction_blowup(h, ell, k);
                t.check(o.m_sq_gt_4k, "M^2 > 4k" + cell({h, ell, k}));
                // E itself survives D.M < 2k only when ell + 1 < 2k
                const bool e_survives = ell + 1 < 2 * k;
                const bool only_E = o.candidates.size() == 1 && o.candidates[0].a == 0 && o.candidates[0].b == 1;
                t.check(e_survives ? only_E : o.candidates.empty(), "candidates" + cell({h, ell, k}));
                t.check(o.requires_cohomology == e_survives, "requires_cohomology" + cell({h, ell, k}));
            }
        }
    }
    t.check(gated > 0, "no gated blowup cells");
    t.check(seshadri_lower_bound(10) == q(5, 2), "seshadri 10");
    t.check(seshadri_lower_bound(52) == q(104, 15), "seshadri 52");
    t.check(seshadri_lower_bound(16) == 4, "seshadri 16");
    t.check(seshadri_lower_bound(18) == q(18, 5), "seshadri 18");
    t.check(seshadri_lower_bound(20) == 4, "seshadri 20");
    return t.result("blowup-internals");
}

PropertyResult families(const Context&) {
    Tally t;
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t h = 1; h <= 12; ++h) {
            const UlrichNumerics u = ulrich_numerics(a, h);
            t.check(u.chi_F == 12 * a * h, "ulrich chi" + cell({a, h}));
            t.check(u.delta_F == 1 + a * a * h + 4 * a * a, "ulrich delta" + cell({a, h}));
        }
    }
    for (std::int64_t g = 2; g <= 20; ++g) {
        for (std::int64_t r = 1; r <= 4; ++r) {
            for (std::int64_t d = 1; d <= 2 * g; ++d) {
                const auto lm = lazarsfeld_mukai_numerics(g, d, r);
                t.check(lm.chi_F == g * (r + 3) - d + r - 3, "LM chi" + cell({g, d, r}));
                t.check(lm.delta_F == lm.rho, "LM delta" + cell({g, d, r}));
                for (int k = 1; k <= 6; ++k) {
                    for (const auto& rep : family_lazarsfeld_mukai(g, d, r, k)) {
                        t.check(rep.verdict.consistent(), rep.family + cell({g, d, r, k}));
                        if (rep.verdict.hypotheses_hold()) {
                            const std::string chi_flag =
                                rep.family == "lazarsfeld-mukai (E x H)" ? "chi_ge_(r+2)k" : "chi(E)_ge_4k+rho";
                            t.check(rep.verdict.flag(chi_flag), rep.family + " chain" + cell({g, d, r, k}));
                        }
                    }
                }
            }
        }
    }
    t.check(!family_semihomogeneous(2, 4, 1).verdict.hypotheses_hold(), "semihomogeneous gcd");
    t.check(family_semihomogeneous(2, 5, 1).verdict.hypotheses_hold(), "semihomogeneous (2,5,1)");
    return t.result("families");
}

PropertyResult engine_laws(const Context& ctx) {
    Tally t;
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> ord(0, 7);
    auto rq = [&] { return make_rational(num(rng), den(rng)); };
    auto series = [&](int order, std::optional<BigRational> c0) {
        std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
        for (auto& x : c) {
            x = rq();
        }
        if (c0) {
            c[0] = *c0;
        }
        return TruncatedSeries(std::move(c), order);
    };
    constexpr int cases = 10000;
    for (int i = 0; i < cases; ++i) {
        const int order = ord(rng);
        const std::string tag = "case " + std::to_string(i);
        switch (i % 5) {
        case 0: {
            const auto a = series(order, {}), b = series(order, {}), c = series(order, {});
            t.check((a * b) * c == a * (b * c), tag + " associativity");
            t.check(a * (b + c) == a * b + a * c, tag + " distributivity");
            t.check(a * b == b * a, tag + " commutativity");
            break;
        }
        case 1: {
            const auto a = series(order, BigRational(1));
            const BigRational x = rq(), y = rq();
            t.check(rational_pow(a, x) * rational_pow(a, y) == rational_pow(a, BigRational(x + y)),
                    tag + " exponent additivity");
            break;
        }
        case 2: {
            const auto a = series(order, BigRational(1));
            const auto s = rational_pow(a, q(1, 2));
            t.check(s * s == a, tag + " sqrt square");
            t.check(reciprocal(a) * a == TruncatedSeries::constant(1, order), tag + " reciprocal");
            break;
        }
        case 3: {
            auto f = series(order, BigRational(0));
            if (order >= 1 && f[1] == 0) {
                f = f + TruncatedSeries::variable(order);
            }
            if (order == 0) {
                break;
            }
            const auto g = reverse(f);
            t.check(compose(f, g) == TruncatedSeries::variable(order), tag + " f(g(t)) = t");
            t.check(compose(g, f) == TruncatedSeries::variable(order), tag + " g(f(t)) = t");
            t.check(reverse(g) == f, tag + " reverse twice");
            break;
        }
        default: {
            const auto a = series(order, BigRational(1));
            const unsigned n = static_cast<unsigned>(i % 7);
            t.check(pow(a, n) == rational_pow(a, make_rational(n)), tag + " integer pow");
            break;
        }
        }
    }
    return t.result("engine-laws");
}

using Runner = std::function<PropertyResult(const Context&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r{
        {"sqrt-expansion", sqrt_expansion},
        {"lemma-counterexamples", lemma_counterexamples},
        {"two-path", two_path},
        {"delta0", delta0},
        {"k1-identities", k1_identities},
        {"lemma-grid", lemma_grid},
        {"theorem-grids", theorem_grids},
        {"enriques-experiments", enriques_experiments},
        {"cross-formula", cross_formula},
        {"blowup-internals", blowup_internals},
        {"families", families},
        {"engine-laws", engine_laws},
    };
    return r;
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) {
        names.push_back(name);
    }
    return names;
}

PropertyResult run_property(std::string_view name, std::uint64_t seed, unsigned workers) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            const auto start = std::chrono::steady_clock::now();
            PropertyResult r;
            try {
                r = fn(Context{seed, workers});
            } catch (const std::exception& e) {
                r.name = n;
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }
    }
    throw std::invalid_argument("unknown property: " + std::string(name));
}

std::vector<PropertyResult> run_properties(const std::optional<std::string>& only, std::uint64_t seed,
                                           unsigned workers) {
    if (only) {
        return {run_property(*only, seed, workers)};
    }
    std::vector<PropertyResult> out;
    for (const auto& name : property_names()) {
        out.push_back(run_property(name, seed, workers));
    }
    return out;
}

}  // namespace segrelab
