#pragma once

#include <cstdint>

#include "segrelab/surface.hpp"

namespace segrelab {

/// Vector bundle V on a smooth projective curve C of genus g.
struct CurveBundle {
    std::int64_t genus = 0;
    std::int64_t rank = 1;
    std::int64_t degree = 0;

    /// chi(V) = d + r (1 - g)
    std::int64_t chi() const { return degree + rank * (1 - genus); }
};

/// (-1)^k int_{C^[k]} s_k(V^[k]) as [u^k] (1 + r u)^g (1 - u)^(-chi + k(r+1) - 1).
SegreValue segre_curve_closed(const CurveBundle& b, int k);

/// Sum_k z^k int_{C^[k]} s_k(V^[k]) through z^k_max: A1^d A2^(1-g) with
/// A1 = 1 + t, A2 = (1 + t)^(r+1) / (1 + (1+r) t) and t(z) inverting
/// z = -t (1 + t)^r.
TruncatedSeries segre_curve_series(const CurveBundle& b, int k_max);

/// Top Segre integral of L^[k] over the punctual Quot scheme Quot_C(C^N, k),
/// which has dimension N k.
struct QuotSegre {
    SegreValue raw;     // int_Quot s(L^[k])
    SegreValue signed_value;  // (-1)^(N k) int_Quot s(L^[k])
};

/// Through the relation (-1)^(Nk) int_Quot s(L^[k]) = (-1)^k int_{C^[k]} s((L^N)^[k]).
QuotSegre segre_quot(std::int64_t g, std::int64_t N, std::int64_t d_L, int k);

}  // namespace segrelab
