#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace segrelab {

/// Arbitrary-precision rational. GMP keeps every value canonical: lowest
/// terms, positive denominator, zero stored as 0/1.
using BigRational = mpq_class;
using BigInteger = mpz_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
BigRational make_rational(const BigInteger& num, const BigInteger& den);
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "n" or "n/d" (optional leading sign). Throws DomainError.
BigRational parse_rational(std::string_view text);

/// Decimal integer when the denominator is 1, otherwise "num/den".
std::string to_string(const BigRational& q);

Sign sign_of(const BigRational& q);
std::string_view to_string(Sign s);

bool is_integer(const BigRational& q);

/// Generalized binomial coefficient x(x-1)...(x-j+1)/j!, for any rational x.
BigRational binomial(const BigRational& x, std::int64_t j);

/// q^e for an integer exponent e (e < 0 requires q != 0).
BigRational power(const BigRational& q, std::int64_t e);

}  // namespace segrelab
