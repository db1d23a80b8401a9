#include "biperiodic/big_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace biperiodic {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(static_cast<long>(value)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den)
    : BigRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text, text), mpz_class(1));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return BigRational(value_.get_den(), value_.get_num());
}

BigRational BigRational::pow(std::int64_t exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    mpq_class out;
    out.get_num() = std::move(num);
    out.get_den() = std::move(den);
    return BigRational(std::move(out));
}

std::string BigRational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

}  // namespace biperiodic
