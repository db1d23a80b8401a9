#include "biperiodic/mod_int.hpp"

#include <array>
#include <stdexcept>

namespace biperiodic {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t modulus) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), modulus);
    return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for every n < 2^64.
    constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (std::uint64_t w : witnesses) {
        std::uint64_t x = pow_mod(w % n, d, n);
        if (w % n == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ModInt ModInt::from_int(std::int64_t value, std::uint64_t modulus) {
    if (value >= 0) return ModInt(static_cast<std::uint64_t>(value), modulus);
    return -ModInt(static_cast<std::uint64_t>(-(value + 1)) + 1, modulus);
}

ModInt ModInt::from_rational(const BigRational& r, std::uint64_t modulus) {
    const ModInt num(reduce(r.numerator(), modulus), modulus);
    const ModInt den(reduce(r.denominator(), modulus), modulus);
    if (den.is_zero()) {
        throw std::domain_error("denominator of " + r.str() + " vanishes modulo " + std::to_string(modulus));
    }
    return num * den.inverse();
}

ModInt ModInt::pow(std::uint64_t exponent) const {
    return ModInt(pow_mod(value_, exponent, modulus_), modulus_);
}

ModInt ModInt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero residue");
    return pow(modulus_ - 2);
}

}  // namespace biperiodic
