#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segrelab/curve.hpp"
#include "segrelab/surface.hpp"

namespace segrelab {

struct Flag {
    std::string name;
    bool holds = false;
};

enum class Conclusion { big_nef_predicted, not_covered };

std::string_view to_string(Conclusion c);

/// Outcome of checking one theorem's numeric hypotheses against a bundle.
///
/// `flags` are the theorem's numeric hypotheses; the conclusion is
/// big_nef_predicted exactly when all of them hold. `derived` records facts
/// the argument relies on that follow from the hypotheses (reported, never
/// used for the conclusion). `assumptions` are the cohomological side
/// conditions (very ampleness, stability, ...) that are taken on faith.
struct CriterionVerdict {
    std::vector<Flag> flags;
    std::vector<Flag> derived;
    std::vector<std::string> assumptions;
    SegreValue segre;
    Conclusion conclusion = Conclusion::not_covered;

    bool hypotheses_hold() const;
    /// Looks a flag up in `flags` then `derived`. Throws std::out_of_range.
    bool flag(std::string_view name) const;
    /// False iff every hypothesis holds but the Segre integral is not
    /// positive, i.e. the checked data contradicts the theorem.
    bool consistent() const;
};

CriterionVerdict make_verdict(std::vector<Flag> flags, SegreValue segre, std::vector<Flag> derived = {},
                              std::vector<std::string> assumptions = {});

// -- K-trivial surfaces ------------------------------------------------------

/// chi >= (r + 2) k and delta >= 0. Throws UnsupportedGeometryError unless
/// the bundle carries K3 invariants (chi(O), K^2) = (2, 0).
CriterionVerdict check_k3(const SurfaceBundle& b, int k);

/// Same bounds for abelian or bielliptic surfaces ((chi(O), K^2) = (0, 0)).
CriterionVerdict check_abelian(const SurfaceBundle& b, int k);

/// Odd rank, chi >= 2k (r + 1), delta >= 0 on an Enriques surface.
CriterionVerdict check_enriques(const SurfaceBundle& b, int k);

/// chi >= (5r/4 + 2) k and delta >= 0, any rank, Enriques surface.
CriterionVerdict check_enriques_conjecture(const SurfaceBundle& b, int k);

/// The bundle on `kind` with invariants (rank, chi, delta). Solves Riemann-Roch
/// and the delta formula for (c1^2, c2). Throws InconsistentDataError when no
/// integral solution exists (e.g. wrong delta parity for the rank).
SurfaceBundle bundle_from_chi_delta(GeometryKind kind, std::int64_t rank, std::int64_t chi, const BigRational& delta);

struct EnriquesSmallCase {
    int k = 0;
    std::int64_t chi = 0;
    std::int64_t L_sq = 0;
    SegreValue segre;
};

/// Line bundles on an Enriques surface outside the reach of the odd-rank
/// bound: 2 <= k <= 5 and 4k > chi >= 1 + (k + 1)^2 / 2 with L^2 even.
std::vector<EnriquesSmallCase> enriques_small_cases();

// -- Positivity lemma for (sqrt(1+2t) + sqrt(1+6t))^m ... ---------------------

struct LemmaReport {
    std::int64_t m = 0, n = 0, p = 0;
    int order = 0;
    std::vector<BigRational> coefficients;   // t^0 .. t^order of f
    std::optional<int> first_nonpositive;     // within [0, order]
    bool hypotheses = false;                  // m >= 0, p >= 0, m + n + p even
    std::int64_t bound = 0;                   // min((m+n+p)/2 - 1, m - 1), floor division
    /// Every index 0..min(bound, order) carries a positive coefficient.
    /// Meaningful as a check only when `hypotheses` is true.
    bool bound_respected = false;
    bool complete = false;                    // order >= bound
};

/// Expands f(t) = (sqrt(1+2t)+sqrt(1+6t))^m (1+2t)^((n-1)/2) (1+6t)^((p-1)/2)
/// through t^order and locates its first nonpositive coefficient.
/// Accepts inputs that violate the lemma's hypotheses for exploration.
LemmaReport verify_positivity_lemma(std::int64_t m, std::int64_t n, std::int64_t p, int order);

/// The four factorizations used in the lemma's proof. With
/// S = sqrt(1+2t) + sqrt(1+6t):
///   all_even:  S^m (1+2t)^(-1/2) (1+6t)^(-1/2)  m even
///   even_m:    S^m                              m even, n and p odd
///   odd_m_2t:  S^m (1+2t)^(-1/2)                m odd, n even, p odd
///   odd_m_6t:  S^m (1+6t)^(-1/2)                m odd, n odd, p even
enum class LemmaFactor { all_even, even_m, odd_m_2t, odd_m_6t };

struct FactorClaim {
    std::int64_t positive_through = 0;  // coefficients 0..positive_through are > 0
    std::int64_t zero_from = 0;         // coefficients zero_from..m-1 vanish
    bool holds = false;
    std::vector<BigRational> coefficients;  // t^0 .. t^(m-1)
};

/// Checks the positive-then-vanishing coefficient pattern of the factor
/// series F. Throws DomainError when m has the wrong parity for `factor`.
FactorClaim verify_lemma_factor(std::int64_t m, LemmaFactor factor);

// -- Very ampleness obstructions ---------------------------------------------

struct Rank1Obstruction {
    bool l_sq_gt_4k = false;              // L^2 = 2 n^2 h > 4k
    std::optional<std::int64_t> witness;  // D = aH satisfying the chain
};

/// Searches D = aH, 1 <= a <= search_bound, on a Picard-rank-one surface with
/// H^2 = 2h and L = nH for
///   L.D - k <= D^2 < L.D / 2 < k  and  L - 2D effective (n - 2a >= 0).
/// No witness together with L^2 > 4k predicts L is (k-1)-very ample.
Rank1Obstruction bs_obstruction_rank1(std::int64_t n, std::int64_t h, std::int64_t k, std::int64_t search_bound);

struct BlowupCandidate {
    std::int64_t a = 0, b = 0;  // D = aH + bE
    bool full_chain = false;     // D.M - k <= D^2 < D.M/2 < k
    bool operator==(const BlowupCandidate&) const = default;
};

struct BlowupObstruction {
    bool m_sq_gt_4k = false;  // M = H - (ell+1)E, M^2 = 2h - (ell+1)^2
    /// Divisors surviving the elimination steps: D != 0 effective (a >= 0,
    /// and b > 0 when a = 0), M - 2D Q-effective (1 - 2a >= 0), D.M/2 < k.
    std::vector<BlowupCandidate> candidates;
    /// True when the only survivor is D = E, which can only be excluded by a
    /// cohomology vanishing outside numeric reach.
    bool requires_cohomology = false;
};

/// Lattice search over a in [0, bound], b in [-bound, bound]. bound < 0
/// picks 2k + 2, which covers every b with b (ell + 1) < 2k.
BlowupObstruction bs_obstruction_blowup(std::int64_t h, std::int64_t ell, std::int64_t k, std::int64_t bound = -1);

/// Lower bound for the Seshadri constant of a Picard-rank-one K3 with
/// H^2 = H_sq: floor(sqrt(H^2)), except H^2 = a^2 + a - 2 (bound
/// a - 2/(a+1)) and H^2 = a^2 + (a-1)/2 with a odd (bound a - 1/(2a+1)).
/// When both exceptional shapes match, the smaller bound is returned.
/// Throws DomainError unless H_sq >= 2 is even.
BigRational seshadri_lower_bound(std::int64_t H_sq);

// -- Other geometries ---------------------------------------------------------

/// Blowup of a Picard-rank-one K3 at a point, L = H - ell E, H^2 = 2h.
CriterionVerdict check_blowup(std::int64_t h, std::int64_t ell, int k);

/// Minimal surface of general type, rank one: chi(L) >= 3k and
/// L.K >= 2K^2 + k + 1, plus p = K^2 - chi(O) + 3 >= 0 checked from data.
CriterionVerdict check_general_type(std::int64_t L_sq, std::int64_t L_dot_K, std::int64_t K_sq, std::int64_t chi_O,
                                    int k);

/// chi(V) >= (r + 1) k; segre is the signed value (-1)^k int s_k.
CriterionVerdict check_curve_criterion(const CurveBundle& b, int k);

/// chi(L) >= k + g and chi(L) >= k (1 + 1/N) on Quot_C(C^N, k); segre is
/// (-1)^(Nk) int_Quot s(L^[k]).
CriterionVerdict check_quot_criterion(std::int64_t g, std::int64_t N, std::int64_t d_L, int k);

}  // namespace segrelab
