#include "segrelab/families.hpp"

#include <numeric>
#include <stdexcept>

#include "segrelab/errors.hpp"

namespace segrelab {

namespace {

// Bundle on a Picard-rank-one surface with c1 = e H.
struct RankOnePicard {
    std::int64_t rank;
    std::int64_t e;
    BigRational ch2;
};

SurfaceBundle to_bundle(GeometryKind kind, const RankOnePicard& x, std::int64_t H_sq) {
    const std::int64_t c1_sq = x.e * x.e * H_sq;
    const BigRational c2 = make_rational(c1_sq, 2) - x.ch2;
    if (!is_integer(c2)) {
        throw InconsistentDataError("non-integral c2");
    }
    return SurfaceBundle::on(kind, x.rank, c1_sq, c2.get_num().get_si());
}

// x (x) H^t: ch2 picks up t e H^2 + r t^2 H^2 / 2.
RankOnePicard twist(const RankOnePicard& x, std::int64_t H_sq, std::int64_t t) {
    return {x.rank, x.e + x.rank * t,
            BigRational(x.ch2 + make_rational(t * x.e * H_sq) + make_rational(x.rank * t * t * H_sq, 2))};
}

BigRational q(std::int64_t v) { return make_rational(v); }

CriterionVerdict k_trivial_verdict(GeometryKind kind, const SurfaceBundle& b, int k, std::vector<Flag> flags,
                                   std::vector<Flag> extra_derived, std::vector<std::string> assumptions) {
    const std::int64_t chi = chi_riemann_roch(b);
    const BigRational d = delta(kind, b);
    std::vector<Flag> derived{
        {"chi_ge_(r+2)k", chi >= (b.rank + 2) * k},
        {"delta_ge_0", d >= 0},
    };
    derived.insert(derived.end(), extra_derived.begin(), extra_derived.end());
    return make_verdict(std::move(flags), segre_closed(kind, b.rank, chi, d, k), std::move(derived),
                        std::move(assumptions));
}

}  // namespace

const BigRational& FamilyReport::numeric(std::string_view name) const {
    for (const auto& [key, value] : numerics) {
        if (key == name) {
            return value;
        }
    }
    throw std::out_of_range("no numeric named " + std::string(name));
}

LazarsfeldMukaiNumerics lazarsfeld_mukai_numerics(std::int64_t g, std::int64_t d, std::int64_t r) {
    if (g < 2 || r < 1) {
        throw DomainError("Lazarsfeld-Mukai numerics need g >= 2 and r >= 1");
    }
    const std::int64_t H_sq = 2 * g - 2;
    const RankOnePicard E{r, 1, BigRational(make_rational(H_sq, 2) - d)};
    LazarsfeldMukaiNumerics out;
    out.E = to_bundle(GeometryKind::K3, E, H_sq);
    out.F = to_bundle(GeometryKind::K3, twist(E, H_sq, 1), H_sq);
    out.rho = g - r * (r - 1 + g - d);
    out.chi_E = chi_riemann_roch(out.E);
    out.chi_F = chi_riemann_roch(out.F);
    out.delta_E = delta(GeometryKind::K3, out.E);
    out.delta_F = delta(GeometryKind::K3, out.F);
    return out;
}

std::vector<FamilyReport> family_lazarsfeld_mukai(std::int64_t g, std::int64_t d, std::int64_t r, int k) {
    const LazarsfeldMukaiNumerics lm = lazarsfeld_mukai_numerics(g, d, r);
    const std::int64_t chi_F_closed = g * (r + 3) - d + r - 3;
    std::vector<FamilyReport> out;

    FamilyReport twisted;
    twisted.family = "lazarsfeld-mukai (E x H)";
    twisted.numerics = {{"g", q(g)},           {"d", q(d)},           {"r", q(r)},
                        {"k", q(k)},           {"rho", q(lm.rho)},    {"chi(E)", q(lm.chi_E)},
                        {"chi(F)", q(lm.chi_F)}, {"chi(F) closed form", q(chi_F_closed)},
                        {"delta(F)", lm.delta_F}};
    twisted.verdict = k_trivial_verdict(
        GeometryKind::K3, lm.F, k,
        {{"r_ge_2", r >= 2},
         {"rho_ge_0", lm.rho >= 0},
         {"g_gt_2k-2_gt_0", g > 2 * k - 2 && 2 * k - 2 > 0},
         {"5g_gt_2(d+1)", 5 * g > 2 * (d + 1)}},
        {{"chi(F)_matches_closed_form", lm.chi_F == chi_F_closed}, {"delta(F)_eq_rho", lm.delta_F == lm.rho}},
        {"K3 of Picard rank 1", "F is (k-1)-very ample"});
    out.push_back(std::move(twisted));

    if (r == 2) {
        FamilyReport plain;
        plain.family = "lazarsfeld-mukai (E, rank 2)";
        plain.numerics = {{"g", q(g)},         {"d", q(d)},                {"k", q(k)},
                          {"rho", q(lm.rho)}, {"chi(E)", q(lm.chi_E)},    {"delta(E)", lm.delta_E}};
        plain.verdict = k_trivial_verdict(
            GeometryKind::K3, lm.E, k,
            {{"2d-2_ge_g", 2 * d - 2 >= g}, {"2g_gt_4k-6+3d", 2 * g > 4 * static_cast<std::int64_t>(k) - 6 + 3 * d}},
            {{"chi(E)_ge_4k+rho", lm.chi_E >= 4 * k + lm.rho}, {"rho_ge_0", lm.rho >= 0}},
            {"K3 of Picard rank 1", "E is mu_H-stable", "E is (k-1)-very ample"});
        out.push_back(std::move(plain));
    }
    return out;
}

UlrichNumerics ulrich_numerics(std::int64_t a, std::int64_t h, std::int64_t m) {
    if (a < 1 || h < 1 || m < 1) {
        throw DomainError("Ulrich numerics need a, h, m >= 1");
    }
    const std::int64_t H_sq = 2 * h;
    const std::int64_t r = 2 * a;
    // v(E) = (r, (3rm/2) H, 2hm^2 r - r) and v = (r, c1, ch2 + r)
    const RankOnePicard E{r, 3 * a * m, make_rational(2 * h * m * m * r - 2 * r)};
    UlrichNumerics out;
    out.E = to_bundle(GeometryKind::K3, E, H_sq);
    out.F = to_bundle(GeometryKind::K3, twist(E, H_sq, 1), H_sq);
    out.chi_F = chi_riemann_roch(out.F);
    out.delta_F = delta(GeometryKind::K3, out.F);
    return out;
}

FamilyReport family_ulrich(std::int64_t a, std::int64_t h, int k, std::int64_t m) {
    const UlrichNumerics u = ulrich_numerics(a, h, m);
    FamilyReport rep;
    rep.family = "ulrich (E x H)";
    rep.numerics = {{"a", q(a)},           {"h", q(h)},         {"m", q(m)},
                    {"k", q(k)},           {"rank", q(u.F.rank)}, {"c2(E)", q(u.E.c2)},
                    {"chi(F)", q(u.chi_F)}, {"delta(F)", u.delta_F}};
    std::vector<Flag> extra;
    if (m == 1) {
        rep.numerics.push_back({"chi(F) closed form", q(12 * a * h)});
        rep.numerics.push_back({"delta(F) closed form", q(1 + a * a * h + 4 * a * a)});
        extra.push_back({"chi(F)_eq_12ah", u.chi_F == 12 * a * h});
        extra.push_back({"c2(E)_eq_9a^2h-4a(h-1)", u.E.c2 == 9 * a * a * h - 4 * a * (h - 1)});
    }
    rep.verdict = k_trivial_verdict(GeometryKind::K3, u.F, k, {{"h_gt_2k-3_gt_0", h > 2 * k - 3 && 2 * k - 3 > 0}},
                                    std::move(extra), {"K3 of Picard rank 1", "E is Ulrich for mH"});
    return rep;
}

FamilyReport family_semihomogeneous(std::int64_t a, std::int64_t b, int k) {
    if (a < 1 || b < 1) {
        throw DomainError("semihomogeneous numerics need a, b >= 1");
    }
    // principal polarization: H^2 = 2, c1 = ab H, chi = c1^2/2 - c2 = b^2
    const std::int64_t c1_sq = 2 * a * a * b * b;
    const SurfaceBundle W = SurfaceBundle::on(GeometryKind::Abelian, a * a, c1_sq, a * a * b * b - b * b);
    FamilyReport rep;
    rep.family = "semihomogeneous";
    rep.numerics = {{"a", q(a)},          {"b", q(b)},         {"k", q(k)},
                    {"rank", q(W.rank)},  {"c1^2", q(W.c1_sq)}, {"c2", q(W.c2)},
                    {"chi", q(chi_riemann_roch(W))}, {"delta", delta(GeometryKind::Abelian, W)}};
    rep.verdict = k_trivial_verdict(GeometryKind::Abelian, W, k,
                                    {{"gcd(a,b)_eq_1", std::gcd(a, b) == 1}, {"b_gt_a^2k", b > a * a * k}},
                                    {{"b^2_ge_(a^2+2)k", b * b >= (a * a + 2) * k}},
                                    {"X abelian, Picard rank 1, principally polarized"});
    return rep;
}

FamilyReport family_unipotent(std::int64_t r, std::int64_t H_sq, int k) {
    if (r < 1 || H_sq < 2 || H_sq % 2 != 0) {
        throw DomainError("unipotent numerics need r >= 1 and H^2 >= 2 even");
    }
    const RankOnePicard E{r, 0, 0};
    const SurfaceBundle F = to_bundle(GeometryKind::Abelian, twist(E, H_sq, 1), H_sq);
    const std::int64_t chi = chi_riemann_roch(F);
    FamilyReport rep;
    rep.family = "unipotent (E x H)";
    rep.numerics = {{"r", q(r)}, {"H^2", q(H_sq)}, {"k", q(k)}, {"chi(F)", q(chi)},
                    {"delta(F)", delta(GeometryKind::Abelian, F)}};
    rep.verdict = k_trivial_verdict(GeometryKind::Abelian, F, k, {{"r_ge_2", r >= 2}, {"H^2_gt_4k", H_sq > 4 * k}},
                                    {{"chi(F)_eq_r chi(H)", chi == r * (H_sq / 2)}, {"chi(F)_gt_2rk", chi > 2 * r * k}},
                                    {"X abelian of Picard rank 1"});
    return rep;
}

FamilyReport family_k3_line(std::int64_t n, std::int64_t g, int k) {
    if (g < 2) {
        throw DomainError("K3 polarization needs g >= 2");
    }
    const std::int64_t H_sq = 2 * g - 2;
    const SurfaceBundle L = SurfaceBundle::on(GeometryKind::K3, 1, n * n * H_sq, 0);
    const std::int64_t chi = chi_riemann_roch(L);
    FamilyReport rep;
    rep.family = "k3 line bundle H^n";
    rep.numerics = {{"n", q(n)}, {"g", q(g)}, {"k", q(k)}, {"chi", q(chi)}, {"chi closed form", q(2 + n * n * (g - 1))}};
    rep.verdict = k_trivial_verdict(GeometryKind::K3, L, k, {{"n_ge_1", n >= 1}, {"g_ge_3k-1", g >= 3 * k - 1}},
                                    {{"chi_ge_3k", chi >= 3 * k}}, {"K3 of Picard rank 1"});
    return rep;
}

FamilyReport family_abelian_line(std::int64_t n, std::int64_t H_sq, int k) {
    if (H_sq < 2 || H_sq % 2 != 0) {
        throw DomainError("abelian polarization needs H^2 >= 2 even");
    }
    const SurfaceBundle L = SurfaceBundle::on(GeometryKind::Abelian, 1, n * n * H_sq, 0);
    const Rank1Obstruction obstruction = bs_obstruction_rank1(n, H_sq / 2, k, k);
    FamilyReport rep;
    rep.family = "abelian line bundle H^n";
    rep.numerics = {{"n", q(n)}, {"H^2", q(H_sq)}, {"k", q(k)}, {"chi", q(chi_riemann_roch(L))}};
    rep.verdict = k_trivial_verdict(GeometryKind::Abelian, L, k, {{"n_ge_1", n >= 1}, {"H^2_ge_6k", H_sq >= 6 * k}},
                                    {{"H^2_gt_4k", H_sq > 4 * k}, {"no_obstruction_divisor", !obstruction.witness}},
                                    {"X abelian of Picard rank 1"});
    return rep;
}

FamilyReport family_enriques_line(std::int64_t n, std::int64_t H_sq, int k) {
    if (H_sq < 2 || H_sq % 2 != 0) {
        throw DomainError("Enriques polarization needs H^2 >= 2 even");
    }
    const SurfaceBundle L = SurfaceBundle::on(GeometryKind::Enriques, 1, n * n * H_sq, 0);
    FamilyReport rep;
    rep.family = "enriques line bundle H^n";
    rep.numerics = {{"n", q(n)}, {"H^2", q(H_sq)}, {"k", q(k)}, {"chi", q(chi_riemann_roch(L))}};
    const std::int64_t chi = chi_riemann_roch(L);
    rep.verdict = make_verdict({{"k_ge_2", k >= 2}, {"n_ge_k+1", n >= k + 1}},
                               segre_closed(GeometryKind::Enriques, 1, chi, 0, k),
                               {{"L^2_ge_(k+1)^2", L.c1_sq >= (k + 1) * (k + 1)}, {"chi_ge_4k", chi >= 4 * k}},
                               {"H ample"});
    return rep;
}

FamilyReport family_blowup_line(std::int64_t h, std::int64_t ell, int k) {
    FamilyReport rep;
    rep.family = "blowup line bundle H - ell E";
    rep.numerics = {{"h", q(h)},
                    {"ell", q(ell)},
                    {"k", q(k)},
                    {"L^2", q(2 * h - ell * ell)},
                    {"seshadri lower bound", seshadri_lower_bound(2 * h)}};
    rep.verdict = check_blowup(h, ell, k);
    return rep;
}

}  // namespace segrelab
