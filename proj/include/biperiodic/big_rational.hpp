#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace biperiodic {

/// Exact fraction of arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator, so zero is 0/1
/// and structural equality is numeric equality.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t value);  // NOLINT: implicit by design of the numeric tower
    BigRational(std::int64_t num, std::int64_t den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class value);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static BigRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws std::domain_error on zero.
    BigRational reciprocal() const;
    BigRational pow(std::int64_t exponent) const;
    BigRational abs() const { return BigRational(::abs(value_)); }
    double to_double() const { return value_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& lhs, const BigRational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

}  // namespace biperiodic
