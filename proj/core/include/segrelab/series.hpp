#pragma once

#include <span>
#include <vector>

#include "segrelab/rational.hpp"

namespace segrelab {

/// Power series in one variable, truncated after t^order, with exact
/// rational coefficients. Values are immutable; every operation returns a
/// new series and states the order of its result explicitly.
///
/// Binary operations require both operands to share an order. Mixing orders
/// throws OrderError; call truncated() first when that is intended.
class TruncatedSeries {
  public:
    /// Pads missing high coefficients with zero. Throws LengthError when
    /// coeffs has more than order + 1 entries and DomainError when order < 0.
    TruncatedSeries(std::vector<BigRational> coeffs, int order);

    static TruncatedSeries constant(const BigRational& c, int order);
    /// The formal variable t.
    static TruncatedSeries variable(int order);
    /// c0 + c1 t.
    static TruncatedSeries linear(const BigRational& c0, const BigRational& c1, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const BigRational> coefficients() const { return coeffs_; }

    /// Unchecked access; use coefficient() for the contract-checked version.
    const BigRational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    /// Drops every coefficient above new_order (new_order <= order()).
    TruncatedSeries truncated(int new_order) const;

    bool operator==(const TruncatedSeries& other) const = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const BigRational& c) { return c * a; }

  private:
    explicit TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {}

    std::vector<BigRational> coeffs_;

    friend TruncatedSeries mul_unchecked(const TruncatedSeries&, const TruncatedSeries&, int);
};

TruncatedSeries series_from_coeffs(std::vector<BigRational> coeffs, int order);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^n for n >= 0 by repeated squaring; any constant term.
TruncatedSeries pow(const TruncatedSeries& a, unsigned n);

/// a^e for a unit series (constant term exactly 1) and any rational e.
/// Computed with the first-order recurrence a * y' = e * a' * y, which only
/// touches the nonzero coefficients of a. Throws DomainError otherwise.
TruncatedSeries rational_pow(const TruncatedSeries& a, const BigRational& exponent);

/// 1/a. Throws DomainError when the constant term is zero.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// outer(inner(t)). inner must have zero constant term; orders must match.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse g with f(g(t)) = t = g(f(t)) through t^order.
/// Newton iteration, roughly doubling the number of correct terms per step.
TruncatedSeries reverse(const TruncatedSeries& f);

/// Exact coefficient of t^k. Throws TruncationError for k outside [0, order].
BigRational coefficient(const TruncatedSeries& f, int k);

/// Termwise derivative; the result has order - 1. Throws DomainError on an
/// order-0 input.
TruncatedSeries derivative(const TruncatedSeries& f);

/// f / t for f with zero constant term; the result has order - 1.
TruncatedSeries divide_by_t(const TruncatedSeries& f);

/// Coefficient of z^k in F(t(z)), where t(z) inverts z = t * phi(t) and
/// phi(0) != 0. Evaluated as a residue in t:
///   [t^k] F(t) * (t phi)'(t) / phi(t)^(k+1).
/// F and phi must both have order >= k.
BigRational lagrange_coefficient(const TruncatedSeries& F, const TruncatedSeries& phi, int k);

}  // namespace segrelab
