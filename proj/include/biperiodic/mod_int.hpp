#pragma once

#include <cstdint>
#include <string>

#include "biperiodic/big_rational.hpp"

namespace biperiodic {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Residue modulo a runtime prime. The modulus travels with the value, so
/// ring identities are built from an existing element (see RingTraits).
class ModInt {
public:
    ModInt() = default;
    ModInt(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

    /// Reduces p/q modulo the prime; throws std::domain_error when q vanishes mod p.
    static ModInt from_rational(const BigRational& r, std::uint64_t modulus);
    static ModInt from_int(std::int64_t value, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    ModInt pow(std::uint64_t exponent) const;
    /// Fermat inverse; the modulus must be prime.
    ModInt inverse() const;

    ModInt& operator+=(const ModInt& rhs) {
        value_ += rhs.value_;
        if (value_ >= modulus_) value_ -= modulus_;
        return *this;
    }
    ModInt& operator-=(const ModInt& rhs) {
        value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
        return *this;
    }
    ModInt& operator*=(const ModInt& rhs) {
        value_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * rhs.value_ % modulus_);
        return *this;
    }

    friend ModInt operator+(ModInt lhs, const ModInt& rhs) { return lhs += rhs; }
    friend ModInt operator-(ModInt lhs, const ModInt& rhs) { return lhs -= rhs; }
    friend ModInt operator*(ModInt lhs, const ModInt& rhs) { return lhs *= rhs; }
    ModInt operator-() const { return ModInt(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

    friend bool operator==(const ModInt&, const ModInt&) = default;

    std::string str() const { return std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
};

}  // namespace biperiodic
