#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "biperiodic/big_rational.hpp"

namespace biperiodic {

/// The four symbols of the base ring, in storage order.
enum class Var : std::size_t { a = 0, b = 1, x = 2, t = 3 };

/// Integer exponents (either sign) of a, b, x, t.
struct Exponents {
    std::array<std::int32_t, 4> e{0, 0, 0, 0};

    std::int32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
    std::int32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

    Exponents operator+(const Exponents& rhs) const {
        Exponents out;
        for (std::size_t i = 0; i < 4; ++i) out.e[i] = e[i] + rhs.e[i];
        return out;
    }
    Exponents operator-() const { return Exponents{{-e[0], -e[1], -e[2], -e[3]}}; }

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Canonical term order: descending lexicographic on (e_t, e_a, e_b, e_x).
/// Returns true when `lhs` is printed before `rhs`.
bool canonical_before(const Exponents& lhs, const Exponents& rhs);

struct Term {
    Exponents exponents;
    BigRational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Evaluation point for the four symbols.
struct EvalPoint {
    BigRational a{0};
    BigRational b{0};
    BigRational x{0};
    BigRational t{0};
};

/// Multivariate Laurent polynomial in a, b, x, t over the rationals.
///
/// Terms are kept sorted in canonical order with distinct exponent tuples and
/// nonzero coefficients, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t constant);  // NOLINT
    LaurentPoly(const BigRational& constant);  // NOLINT

    static LaurentPoly monomial(const BigRational& coeff, std::int32_t ea, std::int32_t eb, std::int32_t ex,
                                std::int32_t et = 0);
    static LaurentPoly monomial(const BigRational& coeff, const Exponents& exponents);
    static LaurentPoly var(Var v, std::int32_t power = 1);

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Coefficient of the exponent-zero term.
    BigRational constant_term() const;

    /// Inverse of a single term: exponents negated, coefficient reciprocated.
    /// Throws std::invalid_argument for zero or multi-term input.
    LaurentPoly monomial_inverse() const;

    LaurentPoly pow(std::uint32_t exponent) const;

    /// Exact substitution. Throws std::domain_error when a zero value meets a
    /// negative exponent.
    BigRational eval(const EvalPoint& point) const;

    /// Terms whose t-exponent satisfies `keep`.
    LaurentPoly filter_t(const std::function<bool(std::int32_t)>& keep) const;
    /// Coefficient of t^degree, returned as a t-free polynomial.
    LaurentPoly t_coefficient(std::int32_t degree) const;
    LaurentPoly shift_t(std::int32_t delta) const;
    /// Range of t-exponents present; {0, 0} for the zero polynomial.
    std::pair<std::int32_t, std::int32_t> t_range() const;

    /// Canonical text rendering, e.g. "a^2*b^2*x^4 + 3*a*b*x^2 + 1".
    std::string str() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator-(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::vector<Term> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_monomial_inverse(const LaurentPoly& p);
BigRational lp_eval(const LaurentPoly& p, const BigRational& a0, const BigRational& b0, const BigRational& x0,
                    const BigRational& t0);

namespace sym {
inline LaurentPoly a() { return LaurentPoly::var(Var::a); }
inline LaurentPoly b() { return LaurentPoly::var(Var::b); }
inline LaurentPoly x() { return LaurentPoly::var(Var::x); }
inline LaurentPoly t() { return LaurentPoly::var(Var::t); }
}  // namespace sym

}  // namespace biperiodic
