#include "segrelab/rational.hpp"

#include "segrelab/errors.hpp"

namespace segrelab {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigInteger(static_cast<long>(num)), BigInteger(static_cast<long>(den)));
}

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw DomainError("empty rational literal");
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num.front() == '+') {
        num.erase(0, 1);
    }
    BigInteger n, d;
    // mpz set_str tolerates whitespace; reject it explicitly so "1 2" is not 12.
    for (const std::string* part : {&num, &den}) {
        if (part->empty() || part->find_first_of(" \t\n") != std::string::npos) {
            throw DomainError("malformed rational literal: '" + s + "'");
        }
    }
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || den.front() == '-') {
        throw DomainError("malformed rational literal: '" + s + "'");
    }
    return make_rational(n, d);
}

std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Sign sign_of(const BigRational& q) {
    int s = sgn(q);
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}

std::string_view to_string(Sign s) {
    switch (s) {
    case Sign::positive:
        return "positive";
    case Sign::negative:
        return "negative";
    case Sign::zero:
        break;
    }
    return "zero";
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigRational binomial(const BigRational& x, std::int64_t j) {
    if (j < 0) {
        return 0;
    }
    BigRational result = 1;
    for (std::int64_t i = 0; i < j; ++i) {
        result *= x - static_cast<long>(i);
        result /= static_cast<long>(i + 1);
    }
    return result;
}

BigRational power(const BigRational& q, std::int64_t e) {
    if (e < 0) {
        if (q == 0) {
            throw DomainError("negative power of zero");
        }
        return 1 / BigRational(power(q, -e));
    }
    BigInteger num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(num, den);
}

}  // namespace segrelab
