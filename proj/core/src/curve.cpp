#include "segrelab/curve.hpp"

#include <string>

#include "segrelab/errors.hpp"

namespace segrelab {

namespace {

void validate(const CurveBundle& b) {
    if (b.genus < 0) {
        throw DomainError("genus must be >= 0");
    }
    if (b.rank < 1) {
        throw DomainError("rank must be >= 1");
    }
}

}  // namespace

SegreValue segre_curve_closed(const CurveBundle& b, int k) {
    validate(b);
    if (k < 0) {
        throw DomainError("k must be >= 0");
    }
    const std::int64_t exponent = -b.chi() + static_cast<std::int64_t>(k) * (b.rank + 1) - 1;
    const TruncatedSeries f =
        rational_pow(TruncatedSeries::linear(1, make_rational(b.rank), k), make_rational(b.genus)) *
        rational_pow(TruncatedSeries::linear(1, -1, k), make_rational(exponent));
    return SegreValue(coefficient(f, k));
}

TruncatedSeries segre_curve_series(const CurveBundle& b, int k_max) {
    validate(b);
    if (k_max < 0) {
        throw DomainError("k_max must be >= 0");
    }
    const int n = k_max;
    const TruncatedSeries one_t = TruncatedSeries::linear(1, 1, n);
    const TruncatedSeries A1 = one_t;
    const TruncatedSeries A2 = pow(one_t, static_cast<unsigned>(b.rank + 1)) *
                               reciprocal(TruncatedSeries::linear(1, make_rational(b.rank + 1), n));
    const TruncatedSeries in_t =
        rational_pow(A1, make_rational(b.degree)) * rational_pow(A2, make_rational(1 - b.genus));
    if (n == 0) {
        return in_t;
    }
    // z = -t (1 + t)^r
    const TruncatedSeries phi = pow(one_t, static_cast<unsigned>(b.rank));
    std::vector<BigRational> c{0};
    for (int i = 0; i < n; ++i) {
        c.push_back(-phi[i]);
    }
    return compose(in_t, reverse(TruncatedSeries(std::move(c), n)));
}

QuotSegre segre_quot(std::int64_t g, std::int64_t N, std::int64_t d_L, int k) {
    if (N < 1) {
        throw DomainError("N must be >= 1");
    }
    const SegreValue curve_signed = segre_curve_closed(CurveBundle{g, N, N * d_L}, k);
    QuotSegre out;
    out.signed_value = curve_signed;
    const bool flip = (N * k) % 2 != 0;
    out.raw = SegreValue(flip ? BigRational(-curve_signed.value) : curve_signed.value);
    return out;
}

}  // namespace segrelab
