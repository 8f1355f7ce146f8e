#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "segrelab/positivity.hpp"

namespace segrelab {

/// Numerics and verdict for one member of a named geometric family.
struct FamilyReport {
    std::string family;
    std::vector<std::pair<std::string, BigRational>> numerics;
    CriterionVerdict verdict;

    /// Looks a numeric entry up by name. Throws std::out_of_range.
    const BigRational& numeric(std::string_view name) const;
};

struct LazarsfeldMukaiNumerics {
    SurfaceBundle E;  // rank r, c1 = H, c2 = d on a K3 with H^2 = 2g - 2
    SurfaceBundle F;  // E (x) H
    std::int64_t rho = 0;  // g - r (r - 1 + g - d)
    std::int64_t chi_E = 0, chi_F = 0;
    BigRational delta_E, delta_F;
};

LazarsfeldMukaiNumerics lazarsfeld_mukai_numerics(std::int64_t g, std::int64_t d, std::int64_t r);

/// The twisted bundle E (x) H (hypotheses rho >= 0, g > 2k - 2 > 0,
/// g > 2(d + 1)/5), followed for r = 2 by the untwisted E (hypothesis
/// 2d - 2 >= g > 2k - 3 + 3d/2).
std::vector<FamilyReport> family_lazarsfeld_mukai(std::int64_t g, std::int64_t d, std::int64_t r, int k);

struct UlrichNumerics {
    SurfaceBundle E;  // rank 2a, c1 = 3am H on (X, H), H^2 = 2h
    SurfaceBundle F;  // E (x) H
    std::int64_t chi_F = 0;
    BigRational delta_F;
};

/// Ulrich bundle for the polarization mH; m = 1 is the (X, H) case.
UlrichNumerics ulrich_numerics(std::int64_t a, std::int64_t h, std::int64_t m = 1);

/// Hypothesis h > 2k - 3 > 0 for (E (x) H)^[k].
FamilyReport family_ulrich(std::int64_t a, std::int64_t h, int k, std::int64_t m = 1);

/// Simple semihomogeneous W on a principally polarized abelian surface:
/// rank a^2, slope bH/a, chi = b^2. Hypotheses gcd(a, b) = 1, b > a^2 k.
FamilyReport family_semihomogeneous(std::int64_t a, std::int64_t b, int k);

/// E (x) H for a unipotent E of rank r on an abelian surface; H^2 > 4k.
FamilyReport family_unipotent(std::int64_t r, std::int64_t H_sq, int k);

/// H^n on a Picard-rank-one K3 with H^2 = 2g - 2; hypothesis g >= 3k - 1.
FamilyReport family_k3_line(std::int64_t n, std::int64_t g, int k);

/// H^n on a Picard-rank-one abelian surface; hypothesis H^2 >= 6k.
FamilyReport family_abelian_line(std::int64_t n, std::int64_t H_sq, int k);

/// H^n for ample H on an Enriques surface; hypotheses k >= 2, n >= k + 1.
FamilyReport family_enriques_line(std::int64_t n, std::int64_t H_sq, int k);

/// L = H - ell E on the blowup of a Picard-rank-one K3, H^2 = 2h.
FamilyReport family_blowup_line(std::int64_t h, std::int64_t ell, int k);

}  // namespace segrelab
