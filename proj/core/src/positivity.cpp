#include "segrelab/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "segrelab/errors.hpp"

namespace segrelab {

namespace {

constexpr const char* kVeryAmple = "F is (k-1)-very ample";

void require_invariants(const SurfaceBundle& b, GeometryKind kind) {
    auto [chi_O, K_sq] = surface_invariants(kind);
    if (b.chi_O != chi_O || b.K_sq != K_sq || b.c1_dot_K != 0) {
        throw UnsupportedGeometryError("bundle invariants (chi(O)=" + std::to_string(b.chi_O) +
                                       ", K^2=" + std::to_string(b.K_sq) + ") do not describe a " +
                                       std::string(to_string(kind)) + " surface");
    }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t isqrt(std::int64_t v) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

// Positive integer root a of a*a*qa + a*qb + qc = 0, if any.
std::optional<std::int64_t> positive_root(std::int64_t qa, std::int64_t qb, std::int64_t qc) {
    const std::int64_t disc = qb * qb - 4 * qa * qc;
    if (disc < 0) {
        return std::nullopt;
    }
    const std::int64_t s = isqrt(disc);
    if (s * s != disc || (s - qb) % (2 * qa) != 0) {
        return std::nullopt;
    }
    const std::int64_t a = (s - qb) / (2 * qa);
    return a > 0 ? std::optional<std::int64_t>(a) : std::nullopt;
}

CriterionVerdict k_trivial_bounds(const SurfaceBundle& b, GeometryKind kind, int k) {
    const std::int64_t chi = chi_riemann_roch(b);
    const BigRational d = delta(kind, b);
    std::vector<Flag> flags{
        {"chi_ge_(r+2)k", chi >= (b.rank + 2) * k},
        {"delta_ge_0", d >= 0},
    };
    return make_verdict(std::move(flags), segre_closed(kind, b.rank, chi, d, k), {}, {kVeryAmple});
}

}  // namespace

std::string_view to_string(Conclusion c) {
    return c == Conclusion::big_nef_predicted ? "big_nef_predicted" : "not_covered";
}

bool CriterionVerdict::hypotheses_hold() const {
    return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.holds; });
}

bool CriterionVerdict::flag(std::string_view name) const {
    for (const auto* list : {&flags, &derived}) {
        for (const auto& f : *list) {
            if (f.name == name) {
                return f.holds;
            }
        }
    }
    throw std::out_of_range("no flag named " + std::string(name));
}

bool CriterionVerdict::consistent() const { return !hypotheses_hold() || segre.positive(); }

CriterionVerdict make_verdict(std::vector<Flag> flags, SegreValue segre, std::vector<Flag> derived,
                              std::vector<std::string> assumptions) {
    CriterionVerdict v;
    v.flags = std::move(flags);
    v.derived = std::move(derived);
    v.assumptions = std::move(assumptions);
    v.segre = std::move(segre);
    v.conclusion = v.hypotheses_hold() ? Conclusion::big_nef_predicted : Conclusion::not_covered;
    return v;
}

CriterionVerdict check_k3(const SurfaceBundle& b, int k) {
    require_invariants(b, GeometryKind::K3);
    return k_trivial_bounds(b, GeometryKind::K3, k);
}

CriterionVerdict check_abelian(const SurfaceBundle& b, int k) {
    require_invariants(b, GeometryKind::Abelian);
    return k_trivial_bounds(b, GeometryKind::Abelian, k);
}

CriterionVerdict check_enriques(const SurfaceBundle& b, int k) {
    require_invariants(b, GeometryKind::Enriques);
    const std::int64_t chi = chi_riemann_roch(b);
    const BigRational d = delta(GeometryKind::Enriques, b);
    std::vector<Flag> flags{
        {"rank_odd", b.rank % 2 == 1},
        {"chi_ge_2k(r+1)", chi >= 2 * static_cast<std::int64_t>(k) * (b.rank + 1)},
        {"delta_ge_0", d >= 0},
    };
    return make_verdict(std::move(flags), segre_closed(GeometryKind::Enriques, b.rank, chi, d, k), {}, {kVeryAmple});
}

CriterionVerdict check_enriques_conjecture(const SurfaceBundle& b, int k) {
    require_invariants(b, GeometryKind::Enriques);
    const std::int64_t chi = chi_riemann_roch(b);
    const BigRational d = delta(GeometryKind::Enriques, b);
    std::vector<Flag> flags{
        // chi >= (5r/4 + 2) k  <=>  4 chi >= (5r + 8) k
        {"chi_ge_(5r/4+2)k", 4 * chi >= (5 * b.rank + 8) * k},
        {"delta_ge_0", d >= 0},
    };
    return make_verdict(std::move(flags), segre_closed(GeometryKind::Enriques, b.rank, chi, d, k), {}, {kVeryAmple});
}

SurfaceBundle bundle_from_chi_delta(GeometryKind kind, std::int64_t rank, std::int64_t chi, const BigRational& delta_v) {
    if (rank < 1) {
        throw InconsistentDataError("rank must be >= 1");
    }
    const BigRational r = make_rational(rank);
    const BigRational q_chi = make_rational(chi);
    BigRational half_c1_sq;
    switch (kind) {
    case GeometryKind::K3:
        half_c1_sq = delta_v - 1 - r * r + r * q_chi;
        break;
    case GeometryKind::Abelian:
    case GeometryKind::Bielliptic:
        half_c1_sq = delta_v + r * q_chi;
        break;
    case GeometryKind::Enriques:
        half_c1_sq = delta_v + r * q_chi - (r * r + 1) / 2;
        break;
    default:
        throw UnsupportedGeometryError("bundle_from_chi_delta covers K-trivial surfaces only");
    }
    if (!is_integer(half_c1_sq)) {
        throw InconsistentDataError("no integral bundle with rank " + std::to_string(rank) + " and delta " +
                                    to_string(delta_v) + " on a " + std::string(to_string(kind)) + " surface");
    }
    const std::int64_t x = half_c1_sq.get_num().get_si();
    const auto [chi_O, K_sq] = surface_invariants(kind);
    (void)K_sq;
    const std::int64_t c2 = rank * chi_O + x - chi;
    SurfaceBundle b = SurfaceBundle::on(kind, rank, 2 * x, c2);
    if (chi_riemann_roch(b) != chi || delta(kind, b) != delta_v) {
        throw InconsistentDataError("bundle_from_chi_delta round trip failed");
    }
    return b;
}

std::vector<EnriquesSmallCase> enriques_small_cases() {
    std::vector<EnriquesSmallCase> out;
    for (int k = 2; k <= 5; ++k) {
        for (std::int64_t chi = 1; chi < 4 * k; ++chi) {
            const std::int64_t L_sq = 2 * (chi - 1);  // chi(L) = 1 + L^2/2 on an Enriques surface
            if (L_sq < (k + 1) * (k + 1)) {
                continue;
            }
            out.push_back({k, chi, L_sq, segre_closed(GeometryKind::Enriques, 1, chi, 0, k)});
        }
    }
    return out;
}

LemmaReport verify_positivity_lemma(std::int64_t m, std::int64_t n, std::int64_t p, int order) {
    if (order < 0) {
        throw DomainError("order must be >= 0");
    }
    LemmaReport rep;
    rep.m = m;
    rep.n = n;
    rep.p = p;
    rep.order = order;
    const TruncatedSeries f = sqrt_sum_series(m, n, p, order);
    rep.coefficients.assign(f.coefficients().begin(), f.coefficients().end());
    for (int i = 0; i <= order; ++i) {
        if (sgn(f[i]) <= 0) {
            rep.first_nonpositive = i;
            break;
        }
    }
    rep.hypotheses = m >= 0 && p >= 0 && (m + n + p) % 2 == 0;
    rep.bound = std::min(floor_div(m + n + p, 2) - 1, m - 1);
    rep.complete = order >= rep.bound;
    const std::int64_t checked = std::min<std::int64_t>(rep.bound, order);
    rep.bound_respected = !rep.first_nonpositive || *rep.first_nonpositive > checked;
    return rep;
}

FactorClaim verify_lemma_factor(std::int64_t m, LemmaFactor factor) {
    if (m < 1) {
        throw DomainError("factor claim needs m >= 1");
    }
    const bool even = m % 2 == 0;
    // n and p as in sqrt_sum_series: the factor exponents are (n-1)/2 and (p-1)/2.
    std::int64_t n = 0, p = 0;
    FactorClaim claim;
    switch (factor) {
    case LemmaFactor::all_even:
        if (!even) throw DomainError("all_even factor needs m even");
        n = 0, p = 0;
        claim.positive_through = m / 2 - 1;
        claim.zero_from = m / 2;
        break;
    case LemmaFactor::even_m:
        if (!even) throw DomainError("even_m factor needs m even");
        n = 1, p = 1;
        claim.positive_through = m / 2;
        claim.zero_from = m / 2 + 1;
        break;
    case LemmaFactor::odd_m_2t:
        if (even) throw DomainError("odd_m_2t factor needs m odd");
        n = 0, p = 1;
        claim.positive_through = (m - 1) / 2;
        claim.zero_from = (m + 1) / 2;
        break;
    case LemmaFactor::odd_m_6t:
        if (even) throw DomainError("odd_m_6t factor needs m odd");
        n = 1, p = 0;
        claim.positive_through = (m - 1) / 2;
        claim.zero_from = (m + 1) / 2;
        break;
    }
    const int order = static_cast<int>(m - 1);
    const TruncatedSeries F = sqrt_sum_series(m, n, p, order);
    claim.coefficients.assign(F.coefficients().begin(), F.coefficients().end());
    claim.holds = true;
    for (int i = 0; i <= order; ++i) {
        const int s = sgn(F[i]);
        if (i <= claim.positive_through ? s <= 0 : (i >= claim.zero_from && s != 0)) {
            claim.holds = false;
        }
    }
    return claim;
}

Rank1Obstruction bs_obstruction_rank1(std::int64_t n, std::int64_t h, std::int64_t k, std::int64_t search_bound) {
    Rank1Obstruction out;
    out.l_sq_gt_4k = 2 * n * n * h > 4 * k;
    // L.D/2 = n a h < k forces a < k, so the search never needs to pass k.
    const std::int64_t limit = std::min(search_bound, std::max<std::int64_t>(k, 0));
    for (std::int64_t a = 1; a <= limit; ++a) {
        const std::int64_t D_sq = 2 * a * a * h;
        const std::int64_t LD = 2 * n * a * h;
        // LD - k <= D^2 < LD/2 < k, compared after doubling
        if (LD - k <= D_sq && 2 * D_sq < LD && LD < 2 * k && n - 2 * a >= 0) {
            out.witness = a;
            break;
        }
    }
    return out;
}

BlowupObstruction bs_obstruction_blowup(std::int64_t h, std::int64_t ell, std::int64_t k, std::int64_t bound) {
    BlowupObstruction out;
    const std::int64_t M_sq = 2 * h - (ell + 1) * (ell + 1);
    out.m_sq_gt_4k = M_sq > 4 * k;
    if (bound < 0) {
        bound = 2 * k + 2;
    }
    for (std::int64_t a = 0; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
            if (a == 0 && b <= 0) {
                continue;  // D = 0 or D = -|b| E, not effective
            }
            if (1 - 2 * a < 0) {
                continue;  // M - 2D has negative H-coefficient
            }
            // H^2 = 2h, E^2 = -1, H.E = 0
            const std::int64_t DM = 2 * h * a + b * (ell + 1);
            const std::int64_t D_sq = 2 * h * a * a - b * b;
            if (!(DM < 2 * k)) {
                continue;
            }
            const bool chain = DM - k <= D_sq && 2 * D_sq < DM;
            out.candidates.push_back({a, b, chain});
        }
    }
    out.requires_cohomology =
        out.candidates.size() == 1 && out.candidates.front().a == 0 && out.candidates.front().b == 1;
    return out;
}

BigRational seshadri_lower_bound(std::int64_t H_sq) {
    if (H_sq < 2 || H_sq % 2 != 0) {
        throw DomainError("K3 polarization needs H^2 >= 2 even, got " + std::to_string(H_sq));
    }
    std::optional<BigRational> bound;
    auto take = [&](const BigRational& b) {
        if (!bound || b < *bound) {
            bound = b;
        }
    };
    // a^2 + a - 2 = H^2
    if (auto a = positive_root(1, 1, -2 - H_sq)) {
        take(BigRational(make_rational(*a) - make_rational(2, *a + 1)));
    }
    // a^2 + (a - 1)/2 = H^2  <=>  2a^2 + a - 1 - 2H^2 = 0, a odd
    if (auto a = positive_root(2, 1, -1 - 2 * H_sq); a && *a % 2 == 1) {
        take(BigRational(make_rational(*a) - make_rational(1, 2 * *a + 1)));
    }
    if (bound) {
        return *bound;
    }
    return make_rational(isqrt(H_sq));
}

CriterionVerdict check_blowup(std::int64_t h, std::int64_t ell, int k) {
    const std::int64_t two_h = 2 * h;
    std::vector<Flag> flags{
        {"ell_ge_k-1", ell >= k - 1},
        {"2h_gt_(ell+2)^2-6", two_h > (ell + 2) * (ell + 2) - 6},
        {"2h_gt_(ell+1)^2+4k", two_h > (ell + 1) * (ell + 1) + 4 * static_cast<std::int64_t>(k)},
        {"2h_gt_ell(ell+1)+6k-6", two_h > ell * (ell + 1) + 6 * static_cast<std::int64_t>(k) - 6},
    };
    const BlowupObstruction obstruction = bs_obstruction_blowup(h, ell, k);
    const bool only_E = obstruction.requires_cohomology;
    std::vector<Flag> derived{
        {"seshadri_ge_ell+1", h >= 1 && seshadri_lower_bound(two_h) >= ell + 1},
        {"M_sq_gt_4k", obstruction.m_sq_gt_4k},
        {"obstruction_only_E", only_E},
    };
    return make_verdict(std::move(flags), segre_blowup_k3(h, ell, k), std::move(derived),
                        {"S has Picard rank 1", "H^1(L(-E)) = 0"});
}

CriterionVerdict check_general_type(std::int64_t L_sq, std::int64_t L_dot_K, std::int64_t K_sq, std::int64_t chi_O,
                                    int k) {
    const SurfaceBundle line{1, L_sq, L_dot_K, 0, chi_O, K_sq};
    const std::int64_t chi_L = chi_riemann_roch(line);
    const MnpTriple t = mnp_from_bundle(L_sq, L_dot_K, K_sq, chi_O, k);
    std::vector<Flag> flags{
        {"chi(L)_ge_3k", chi_L >= 3 * static_cast<std::int64_t>(k)},
        {"LK_ge_2K^2+k+1", L_dot_K >= 2 * K_sq + k + 1},
        {"p_ge_0", t.p >= 0},
    };
    const std::int64_t lemma_bound = std::min((t.m + t.n + t.p) / 2 - 1, t.m - 1);
    std::vector<Flag> derived{
        {"k_le_lemma_bound", k <= lemma_bound},
        {"m_ge_0", t.m >= 0},
    };
    return make_verdict(std::move(flags), segre_general_type(t.m, t.n, t.p, k), std::move(derived),
                        {"X minimal of general type", "L is (k-1)-very ample"});
}

CriterionVerdict check_curve_criterion(const CurveBundle& b, int k) {
    const std::int64_t chi = b.chi();
    std::vector<Flag> flags{{"chi_ge_(r+1)k", chi >= (b.rank + 1) * k}};
    std::vector<Flag> derived{
        {"d_gt_r(2g-2+k)", b.degree > b.rank * (2 * b.genus - 2 + k)},
    };
    return make_verdict(std::move(flags), segre_curve_closed(b, k), std::move(derived), {"V is (k-1)-very ample"});
}

CriterionVerdict check_quot_criterion(std::int64_t g, std::int64_t N, std::int64_t d_L, int k) {
    const std::int64_t chi_L = CurveBundle{g, 1, d_L}.chi();
    std::vector<Flag> flags{
        {"chi_ge_k+g", chi_L >= k + g},
        // chi >= k (1 + 1/N)  <=>  N chi >= (N + 1) k
        {"chi_ge_k(1+1/N)", N * chi_L >= (N + 1) * k},
    };
    return make_verdict(std::move(flags), segre_quot(g, N, d_L, k).signed_value);
}

}  // namespace segrelab
