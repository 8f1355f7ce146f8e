#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "segrelab/errors.hpp"
#include "segrelab/series.hpp"

using namespace segrelab;

namespace {

BigRational q(long a, long b = 1) { return make_rational(a, b); }

oracle::Coeffs coeffs(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

struct Pool {
    std::mt19937_64 rng{20240611};
    BigRational rational() {
        std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
        return make_rational(num(rng), den(rng));
    }
    TruncatedSeries series(int order, std::optional<BigRational> c0 = std::nullopt) {
        std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
        for (auto& x : c) {
            x = rational();
        }
        if (c0) {
            c[0] = *c0;
        }
        return {std::move(c), order};
    }
    int order(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

}  // namespace

TEST_CASE("construction pads and validates") {
    const TruncatedSeries s({q(1), q(2)}, 4);
    CHECK(s.order() == 4);
    CHECK(s[4] == 0);
    CHECK_THROWS_AS(TruncatedSeries({q(1), q(2), q(3)}, 1), LengthError);
    CHECK_THROWS_AS(TruncatedSeries({}, -1), DomainError);
    CHECK(TruncatedSeries::variable(3) == series_from_coeffs({0, 1}, 3));
    CHECK(TruncatedSeries::linear(1, 6, 2) == series_from_coeffs({1, 6, 0}, 2));
}

TEST_CASE("mixing orders throws") {
    const auto a = TruncatedSeries::constant(1, 3);
    const auto b = TruncatedSeries::constant(1, 4);
    CHECK_THROWS_AS(a + b, OrderError);
    CHECK_THROWS_AS(a * b, OrderError);
    CHECK_THROWS_AS(compose(a, TruncatedSeries::variable(4)), OrderError);
    CHECK_THROWS_AS(a.truncated(5), OrderError);
    CHECK(b.truncated(3) == a);
}

TEST_CASE("coefficient access is contract checked") {
    const auto s = TruncatedSeries::linear(1, 2, 2);
    CHECK(coefficient(s, 1) == 2);
    CHECK_THROWS_AS(coefficient(s, 3), TruncationError);
    CHECK_THROWS_AS(coefficient(s, -1), TruncationError);
}

TEST_CASE("products agree with a direct convolution") {
    Pool pool;
    for (int i = 0; i < 200; ++i) {
        const int order = pool.order(0, 9);
        const auto a = pool.series(order), b = pool.series(order);
        CHECK(coeffs(a * b) == oracle::convolve(coeffs(a), coeffs(b), order));
        CHECK(mul(a, b) == a * b);
        CHECK(add(a, b) == a + b);
        CHECK((a - a) == TruncatedSeries::constant(0, order));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("integer powers by squaring") {
    Pool pool;
    for (int i = 0; i < 50; ++i) {
        const int order = pool.order(0, 8);
        const auto a = pool.series(order);
        auto expected = TruncatedSeries::constant(1, order);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(pow(a, n) == expected);
            expected = expected * a;
        }
    }
}

TEST_CASE("rational_pow agrees with the binomial series") {
    Pool pool;
    for (int i = 0; i < 200; ++i) {
        const int order = pool.order(0, 8);
        const auto a = pool.series(order, BigRational(1));
        const BigRational e = pool.rational();
        CHECK(coeffs(rational_pow(a, e)) == oracle::binomial_series_pow(coeffs(a), e, order));
    }
    CHECK_THROWS_AS(rational_pow(TruncatedSeries::linear(2, 1, 3), q(1, 2)), DomainError);
}

TEST_CASE("square roots of 1+2t and 1+6t") {
    const auto a = rational_pow(TruncatedSeries::linear(1, 2, 4), q(1, 2));
    const auto b = rational_pow(TruncatedSeries::linear(1, 6, 4), q(1, 2));
    CHECK(coeffs(a) == oracle::Coeffs{1, 1, oracle::frac(-1, 2), oracle::frac(1, 2), oracle::frac(-5, 8)});
    CHECK(coeffs(b) == oracle::Coeffs{1, 3, oracle::frac(-9, 2), oracle::frac(27, 2), oracle::frac(-405, 8)});
}

TEST_CASE("reciprocal") {
    Pool pool;
    for (int i = 0; i < 100; ++i) {
        const int order = pool.order(0, 8);
        auto a = pool.series(order);
        if (a[0] == 0) {
            a = a + TruncatedSeries::constant(1, order);
        }
        CHECK(reciprocal(a) * a == TruncatedSeries::constant(1, order));
    }
    CHECK_THROWS_AS(reciprocal(TruncatedSeries::variable(2)), DomainError);
    // 1/(1-u) is the geometric series; its cube matches binom(j+2, 2)
    const auto g = reciprocal(TruncatedSeries::linear(1, -1, 6));
    const auto g3 = g * g * g;
    for (int j = 0; j <= 6; ++j) {
        CHECK(g3[j] == (j + 1) * (j + 2) / 2);
    }
}

TEST_CASE("compose follows Horner on the outer series") {
    // (1 + t)^2 at t = 2u + u^2 is 1 + 4u + 6u^2 + 4u^3 + u^4
    const auto outer = series_from_coeffs({1, 2, 1}, 4);
    const auto inner = series_from_coeffs({0, 2, 1}, 4);
    CHECK(compose(outer, inner) == series_from_coeffs({1, 4, 6, 4, 1}, 4));
    CHECK_THROWS_AS(compose(outer, TruncatedSeries::constant(1, 4)), DomainError);
}

TEST_CASE("reverse agrees with Lagrange inversion") {
    Pool pool;
    for (int i = 0; i < 150; ++i) {
        const int order = pool.order(1, 9);
        auto f = pool.series(order, BigRational(0));
        if (f[1] == 0) {
            f = f + TruncatedSeries::variable(order);
        }
        const auto g = reverse(f);
        CHECK(coeffs(g) == oracle::lagrange_reverse(coeffs(f), order));
        CHECK(compose(f, g) == TruncatedSeries::variable(order));
    }
    CHECK_THROWS_AS(reverse(TruncatedSeries::linear(1, 1, 3)), ReversionError);
    CHECK_THROWS_AS(reverse(series_from_coeffs({0, 0, 1}, 3)), ReversionError);
    CHECK(reverse(TruncatedSeries::constant(0, 0)) == TruncatedSeries::constant(0, 0));
}

TEST_CASE("derivative and division by t") {
    const auto f = series_from_coeffs({3, 1, 4, 1}, 3);
    CHECK(derivative(f) == series_from_coeffs({1, 8, 3}, 2));
    CHECK_THROWS_AS(derivative(TruncatedSeries::constant(1, 0)), DomainError);
    CHECK(divide_by_t(series_from_coeffs({0, 5, 7}, 2)) == series_from_coeffs({5, 7}, 1));
    CHECK_THROWS_AS(divide_by_t(f), DomainError);
}

TEST_CASE("lagrange_coefficient matches substitution of the reversed series") {
    Pool pool;
    for (int i = 0; i < 60; ++i) {
        const int order = pool.order(1, 7);
        const auto phi = pool.series(order, pool.rational() == 0 ? BigRational(1) : BigRational(2));
        const auto F = pool.series(order);
        const auto z = TruncatedSeries::variable(order) * phi;
        const auto t_of_z = reverse(z);
        const auto composed = compose(F, t_of_z);
        for (int k = 0; k <= order; ++k) {
            CHECK(lagrange_coefficient(F, phi, k) == composed[k]);
        }
    }
    CHECK_THROWS_AS(lagrange_coefficient(TruncatedSeries::constant(1, 1), TruncatedSeries::constant(1, 1), 2),
                    TruncationError);
}
