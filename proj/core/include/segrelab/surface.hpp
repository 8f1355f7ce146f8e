#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "segrelab/rational.hpp"
#include "segrelab/series.hpp"

namespace segrelab {

enum class GeometryKind { K3, Abelian, Bielliptic, Enriques, BlowupK3, GeneralRank1 };

std::string_view to_string(GeometryKind kind);
/// Accepts the lower-case names used on the command line ("k3", "abelian",
/// "bielliptic", "enriques", "blowup-k3", "general").
std::optional<GeometryKind> parse_geometry(std::string_view name);

/// K3, abelian, bielliptic or Enriques.
bool is_k_trivial(GeometryKind kind);

/// (chi(O_X), K_X^2) for the families with fixed values. GeneralRank1 has
/// none and throws UnsupportedGeometryError.
std::pair<std::int64_t, std::int64_t> surface_invariants(GeometryKind kind);

/// Discrete invariants of a vector bundle F on a surface X together with the
/// two invariants of X the Segre formulas depend on.
struct SurfaceBundle {
    std::int64_t rank = 1;
    std::int64_t c1_sq = 0;     // c1(F)^2
    std::int64_t c1_dot_K = 0;  // c1(F).K_X
    std::int64_t c2 = 0;
    std::int64_t chi_O = 0;     // chi(O_X)
    std::int64_t K_sq = 0;      // K_X^2

    /// Bundle on a surface of the given family; fills chi_O and K_sq.
    /// K-trivial kinds force c1_dot_K = 0. Throws InconsistentDataError on
    /// rank < 1 or nonzero c1_dot_K for a K-trivial kind.
    static SurfaceBundle on(GeometryKind kind, std::int64_t rank, std::int64_t c1_sq, std::int64_t c2,
                            std::int64_t c1_dot_K = 0);

    bool operator==(const SurfaceBundle&) const = default;
};

/// Exact Segre integral together with its sign.
struct SegreValue {
    BigRational value;
    Sign sign = Sign::zero;

    SegreValue() = default;
    explicit SegreValue(BigRational v) : value(std::move(v)), sign(sign_of(value)) {}

    bool positive() const { return sign == Sign::positive; }
    bool operator==(const SegreValue& other) const { return value == other.value; }
};

/// chi(F) = r chi(O) + (c1^2 - c1.K)/2 - c2. Throws InconsistentDataError
/// when c1^2 - c1.K is odd.
std::int64_t chi_riemann_roch(const SurfaceBundle& b);

/// The dimension-type invariant built from the Mukai pairing:
///   K3:                1 + r c2 + (1 - r) c1^2 / 2 - r^2
///   abelian/bielliptic: r c2 + (1 - r) c1^2 / 2
///   Enriques:           r c2 - (r - 1) c1^2 / 2 - (r^2 - 1) / 2
/// Half-integral for Enriques bundles of even rank.
BigRational delta(GeometryKind kind, const SurfaceBundle& b);

/// Top Segre integral over X^[k] for a K-trivial surface, as the t^k
/// coefficient of the closed form in (r, chi, delta).
SegreValue segre_closed(GeometryKind kind, std::int64_t r, std::int64_t chi, const BigRational& delta, int k);

/// (r + 1)^k binom(chi - (r + 1) k, k): the K3 value when delta = 0.
SegreValue segre_delta0(std::int64_t r, std::int64_t chi, int k);

/// Sum_k z^k int_{X^[k]} s(F^[k]) through z^k_max, for K3 or Enriques,
/// built from the universal series A0^c2 A1^(c1^2) A2^e (e = 1 or 1/2) in t
/// and substituting t(z), the inverse of z = t (1 + (1 + r) t)^(1 + r).
TruncatedSeries segre_series(GeometryKind kind, const SurfaceBundle& b, int k_max);

/// Evaluation route for the rank-one formula on an arbitrary surface.
enum class Rank1Route {
    residue,    // [t^k] of the integrand times dz/dt over (z/t)^(k+1)
    reversion,  // expand in t, substitute t(z), read off z^k
};

/// Rank-one Segre integral on an arbitrary surface from (L^2, chi(O), L.K,
/// K^2). The universal functions involve sqrt(1 + 2t) and sqrt(1 + 6t) with
/// z = t (1 + 2t)^2.
SegreValue segre_rank1_general(std::int64_t L_sq, std::int64_t chi_O, std::int64_t L_dot_K, std::int64_t K_sq, int k,
                               Rank1Route route = Rank1Route::residue);

/// The series (sqrt(1 + 2t) + sqrt(1 + 6t))^m (1 + 2t)^((n-1)/2) (1 + 6t)^((p-1)/2)
/// through t^order, for any integers m, n, p.
TruncatedSeries sqrt_sum_series(std::int64_t m, std::int64_t n, std::int64_t p, int order);

/// Rank-one Segre integral on the blowup of a K3 at a point, L = H - ell E,
/// H^2 = 2h: 2^(-ell-2) [t^k] (1+2t)^(h - ell^2/2 - 2k - ell + 3/2)
///                          (1+6t)^(-1/2) (sqrt(1+2t) + sqrt(1+6t))^(ell+2).
SegreValue segre_blowup_k3(std::int64_t h, std::int64_t ell, int k);

/// 2^(-m) [t^k] sqrt_sum_series(m, n, p). Throws DomainError unless
/// m + n + p is even.
SegreValue segre_general_type(std::int64_t m, std::int64_t n, std::int64_t p, int k);

struct MnpTriple {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t p = 0;
    bool operator==(const MnpTriple&) const = default;
};

/// m = L.K - 2K^2, n = (L - K)^2 + 3 chi(O) - 4k - 1, p = K^2 - chi(O) + 3.
/// Checks m + n + p = 2 chi(L) - 4k + 2.
MnpTriple mnp_from_bundle(std::int64_t L_sq, std::int64_t L_dot_K, std::int64_t K_sq, std::int64_t chi_O, int k);

}  // namespace segrelab
