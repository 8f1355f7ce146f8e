#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segrelab/surface.hpp"

namespace segrelab {

/// Inclusive integer range lo..hi; empty when lo > hi.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;

    bool empty() const { return lo > hi; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
    std::string str() const;
    bool operator==(const IntRange&) const = default;
};

/// Default desk-scale grids shared by the CLI and the property suite.
namespace grid {
inline constexpr IntRange enriques_r{1, 8};
inline constexpr IntRange enriques_k{1, 10};
inline constexpr IntRange enriques_margin{0, 88};  // reaches 2k(r+1) + 8 at r = 8, k = 10
inline constexpr IntRange enriques_delta_halves{0, 12};
inline constexpr IntRange k_trivial_r{1, 4};
inline constexpr IntRange k_trivial_k{1, 8};
inline constexpr IntRange k_trivial_margin{0, 6};
inline constexpr IntRange k_trivial_delta{0, 6};
inline constexpr IntRange blowup_h{1, 60};
inline constexpr IntRange blowup_ell{0, 8};
inline constexpr IntRange blowup_k{0, 8};
inline constexpr IntRange general_L_sq{-24, 24};
inline constexpr IntRange general_L_dot_K{0, 24};
inline constexpr IntRange general_K_sq{1, 3};
inline constexpr IntRange general_chi_O{1, 3};
inline constexpr IntRange general_k{0, 6};
inline constexpr IntRange curve_g{0, 5};
inline constexpr IntRange curve_r{1, 4};
inline constexpr IntRange curve_d{-4, 24};
inline constexpr IntRange curve_k{0, 8};
inline constexpr IntRange quot_g{0, 5};
inline constexpr IntRange quot_N{1, 4};
inline constexpr IntRange quot_d{-4, 20};
inline constexpr IntRange quot_k{0, 8};
inline constexpr IntRange lemma_m{0, 12};
inline constexpr IntRange lemma_n{-12, 12};
inline constexpr IntRange lemma_p{0, 12};
}  // namespace grid

struct ScanRow {
    std::vector<BigRational> inputs;
    SegreValue value;
    std::vector<bool> flags;
    std::vector<std::string> extras;
};

/// A hypothesis set over the report's flag columns. A row is covered when
/// all listed flags hold; a covered row whose value is not positive is a
/// violation.
struct ScanCriterion {
    std::string name;
    std::vector<std::size_t> flag_indices;
    std::int64_t covered = 0;
    std::int64_t violations = 0;
    std::optional<std::size_t> first_violation;  // row index
};

/// Free-form table attached to a report (e.g. empirical thresholds).
struct SideTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct ScanMetadata {
    std::string scan;
    std::vector<std::pair<std::string, std::string>> grid;  // axis -> declared range
    std::vector<std::string> filters;                        // cells dropped from the product
    std::uint64_t seed = 0;
    std::optional<std::string> timestamp;
};

struct ScanReport {
    ScanMetadata metadata;
    std::vector<std::string> input_columns;
    std::string value_column = "segre";
    std::vector<std::string> flag_columns;
    std::vector<std::string> extra_columns;
    std::vector<ScanRow> rows;  // canonical order: lexicographic in the inputs
    std::vector<ScanCriterion> criteria;
    std::vector<SideTable> tables;

    const ScanCriterion& criterion(std::string_view name) const;
};

struct ScanOptions {
    unsigned workers = 0;  // 0 picks the hardware concurrency
    std::uint64_t seed = 0;
    std::optional<std::string> timestamp;
};

/// Enriques surfaces, Segre value via the closed form. Cells run over
/// r, k, delta = d/2 for d in delta_halves, chi = (r + 2) k + j for j in
/// chi_margin. Only delta with the parity the rank forces (2 delta = r + 1
/// mod 2) are kept. Criteria: "(r+2)k bound", "odd-rank theorem",
/// "conjecture". Side table "thresholds": per (r, k, delta) the least
/// scanned chi from which every scanned value is positive.
ScanReport scan_enriques(IntRange r, IntRange k, IntRange chi_margin, IntRange delta_halves,
                         const ScanOptions& opts = {});

/// K3, abelian or bielliptic: r, k, integer delta, chi = (r + 2) k + j.
/// Criterion "theorem" (chi >= (r+2)k, delta >= 0).
ScanReport scan_k_trivial(GeometryKind kind, IntRange r, IntRange k, IntRange chi_margin, IntRange delta,
                          const ScanOptions& opts = {});

/// Blowup of a Picard-rank-one K3 at a point, L = H - ell E, H^2 = 2h.
/// Criteria "theorem" and "proof bound" (k <= ell + 1, 2h > ell(ell+1) + 6k - 6).
ScanReport scan_blowup(IntRange h, IntRange ell, IntRange k, const ScanOptions& opts = {});

/// Rank one on minimal surfaces of general type. Cells with L^2 - L.K odd
/// are dropped. Criterion "theorem".
ScanReport scan_general_type(IntRange L_sq, IntRange L_dot_K, IntRange K_sq, IntRange chi_O, IntRange k,
                             const ScanOptions& opts = {});

/// Curves: value is the signed Segre number. Criterion "theorem".
ScanReport scan_curve(IntRange g, IntRange r, IntRange d, IntRange k, const ScanOptions& opts = {});

/// Quot schemes of trivial bundles on curves. Criterion "theorem".
ScanReport scan_quot(IntRange g, IntRange N, IntRange d_L, IntRange k, const ScanOptions& opts = {});

/// Positivity lemma: value is the least coefficient of f over indices
/// 0..bound (1 when bound < 0). Cells with m + n + p odd are dropped.
/// Criterion "lemma bound".
ScanReport scan_lemma(IntRange m, IntRange n, IntRange p, const ScanOptions& opts = {});

}  // namespace segrelab
