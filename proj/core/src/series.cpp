#include "segrelab/series.hpp"

#include <algorithm>
#include <string>

#include "segrelab/errors.hpp"

namespace segrelab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw OrderError(std::string(op) + ": orders differ (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
    }
}

// Copy of f re-expressed at a larger order, zero-filled. Internal only: the
// padded coefficients are not known to be correct.
TruncatedSeries padded(const TruncatedSeries& f, int order) {
    std::vector<BigRational> c(f.coefficients().begin(), f.coefficients().end());
    c.resize(static_cast<std::size_t>(order) + 1);
    return TruncatedSeries(std::move(c), order);
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coeffs, int order) {
    if (order < 0) {
        throw DomainError("negative truncation order");
    }
    if (coeffs.size() > static_cast<std::size_t>(order) + 1) {
        throw LengthError(std::to_string(coeffs.size()) + " coefficients do not fit order " +
                          std::to_string(order));
    }
    coeffs.resize(static_cast<std::size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, int order) {
    return TruncatedSeries({c}, order);
}

TruncatedSeries TruncatedSeries::variable(int order) {
    if (order == 0) {
        return TruncatedSeries({}, 0);
    }
    return TruncatedSeries({0, 1}, order);
}

TruncatedSeries TruncatedSeries::linear(const BigRational& c0, const BigRational& c1, int order) {
    if (order == 0) {
        return TruncatedSeries({c0}, 0);
    }
    return TruncatedSeries({c0, c1}, order);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) {
        throw OrderError("cannot truncate order " + std::to_string(order()) + " series to order " +
                         std::to_string(new_order));
    }
    return TruncatedSeries(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "add");
    std::vector<BigRational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b.coeffs_[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<BigRational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= b.coeffs_[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<BigRational> c(a.coeffs_);
    for (auto& x : c) {
        x = -x;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul_unchecked(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
    BigRational term;
    for (int i = 0; i <= order; ++i) {
        if (sgn(a.coeffs_[static_cast<std::size_t>(i)]) == 0) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            if (sgn(b.coeffs_[static_cast<std::size_t>(j)]) == 0) {
                continue;
            }
            term = a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i + j)] += term;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul");
    return mul_unchecked(a, b, a.order());
}

TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a) {
    std::vector<BigRational> out(a.coeffs_);
    for (auto& x : out) {
        x *= c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_from_coeffs(std::vector<BigRational> coeffs, int order) {
    return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries pow(const TruncatedSeries& a, unsigned n) {
    TruncatedSeries result = TruncatedSeries::constant(1, a.order());
    TruncatedSeries base = a;
    while (n > 0) {
        if (n & 1u) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries rational_pow(const TruncatedSeries& a, const BigRational& exponent) {
    if (a[0] != 1) {
        throw DomainError("rational_pow needs a unit series with constant term 1, got " + to_string(a[0]));
    }
    const int n = a.order();
    std::vector<int> support;
    for (int k = 1; k <= n; ++k) {
        if (sgn(a[k]) != 0) {
            support.push_back(k);
        }
    }
    const BigRational e1 = exponent + 1;
    std::vector<BigRational> y(static_cast<std::size_t>(n) + 1);
    y[0] = 1;
    BigRational acc, weight;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k : support) {
            if (k > m) {
                break;
            }
            // ((e + 1) k - m) a_k y_{m-k}
            weight = e1 * k - m;
            acc += weight * a[k] * y[static_cast<std::size_t>(m - k)];
        }
        y[static_cast<std::size_t>(m)] = acc / m;
    }
    return TruncatedSeries(std::move(y), n);
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (sgn(a[0]) == 0) {
        throw DomainError("reciprocal of a series with zero constant term");
    }
    const int n = a.order();
    const BigRational inv0 = 1 / a[0];
    std::vector<BigRational> b(static_cast<std::size_t>(n) + 1);
    b[0] = inv0;
    BigRational acc;
    for (int m = 1; m <= n; ++m) {
        acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (sgn(a[k]) != 0) {
                acc += a[k] * b[static_cast<std::size_t>(m - k)];
            }
        }
        b[static_cast<std::size_t>(m)] = -acc * inv0;
    }
    return TruncatedSeries(std::move(b), n);
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner, "compose");
    if (sgn(inner[0]) != 0) {
        throw DomainError("compose: inner series must have zero constant term");
    }
    const int n = outer.order();
    // Horner: (((o_n) x + o_{n-1}) x + ...) x + o_0
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * inner;
        std::vector<BigRational> c(acc.coefficients().begin(), acc.coefficients().end());
        c[0] += outer[i];
        acc = TruncatedSeries(std::move(c), n);
    }
    return acc;
}

TruncatedSeries reverse(const TruncatedSeries& f) {
    const int n = f.order();
    if (sgn(f[0]) != 0) {
        throw ReversionError("reverse: constant term must be zero");
    }
    if (n == 0) {
        return f;
    }
    if (sgn(f[1]) == 0) {
        throw ReversionError("reverse: linear coefficient must be nonzero");
    }
    const TruncatedSeries df = derivative(f);

    // g is correct through t^prec.
    int prec = 1;
    TruncatedSeries g = TruncatedSeries::linear(0, BigRational(1 / f[1]), 1);
    while (prec < n) {
        const int next = std::min(2 * prec + 1, n);
        const TruncatedSeries gp = padded(g, next);
        const TruncatedSeries residual = compose(f.truncated(next), gp) - TruncatedSeries::variable(next);
        const TruncatedSeries slope = compose(df.order() >= next ? df.truncated(next) : padded(df, next), gp);
        g = gp - residual * reciprocal(slope);
        prec = next;
    }
    return g;
}

BigRational coefficient(const TruncatedSeries& f, int k) {
    if (k < 0 || k > f.order()) {
        throw TruncationError("coefficient t^" + std::to_string(k) + " requested from a series truncated at order " +
                              std::to_string(f.order()));
    }
    return f[k];
}

TruncatedSeries derivative(const TruncatedSeries& f) {
    const int n = f.order();
    if (n == 0) {
        throw DomainError("derivative of an order-0 series is empty");
    }
    std::vector<BigRational> c(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        c[static_cast<std::size_t>(i - 1)] = f[i] * i;
    }
    return TruncatedSeries(std::move(c), n - 1);
}

TruncatedSeries divide_by_t(const TruncatedSeries& f) {
    if (sgn(f[0]) != 0) {
        throw DomainError("divide_by_t: constant term must be zero");
    }
    if (f.order() == 0) {
        throw DomainError("divide_by_t: order-0 series has no quotient");
    }
    return TruncatedSeries(std::vector<BigRational>(f.coefficients().begin() + 1, f.coefficients().end()),
                           f.order() - 1);
}

BigRational lagrange_coefficient(const TruncatedSeries& F, const TruncatedSeries& phi, int k) {
    if (k < 0) {
        throw DomainError("lagrange_coefficient: k < 0");
    }
    if (F.order() < k || phi.order() < k) {
        throw TruncationError("lagrange_coefficient: inputs must have order >= " + std::to_string(k));
    }
    if (sgn(phi[0]) == 0) {
        throw ReversionError("lagrange_coefficient: phi(0) must be nonzero");
    }
    const TruncatedSeries Fk = F.truncated(k);
    const TruncatedSeries pk = phi.truncated(k);

    // (t phi)' = phi + t phi'
    std::vector<BigRational> dz(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        dz[static_cast<std::size_t>(i)] = pk[i] * (i + 1);
    }
    const TruncatedSeries zprime(std::move(dz), k);

    const BigRational c0 = pk[0];
    const TruncatedSeries unit = BigRational(1 / c0) * pk;
    const TruncatedSeries inv = power(c0, -(k + 1)) * rational_pow(unit, -(k + 1));
    return coefficient(Fk * zprime * inv, k);
}

}  // namespace segrelab
