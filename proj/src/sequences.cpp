#include "biperiodic/sequences.hpp"

#include <stdexcept>

namespace biperiodic {

namespace {

LaurentPoly mono(std::int64_t coeff, std::int32_t ea, std::int32_t eb, std::int32_t ex) {
    return LaurentPoly::monomial(BigRational(coeff), ea, eb, ex);
}

// ax for even n, bx for odd n.
LaurentPoly step_multiplier(std::uint64_t n) { return parity(n) == 0 ? mono(1, 1, 0, 1) : mono(1, 0, 1, 1); }

}  // namespace

QPolySeq::QPolySeq() {
    cache_.emplace_back();
    cache_.emplace_back(1);
}

const LaurentPoly& QPolySeq::at(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (cache_.size() <= n) {
        const std::size_t i = cache_.size();
        cache_.push_back(step_multiplier(i) * cache_[i - 1] + cache_[i - 2]);
    }
    return cache_[n];
}

FMatrixSeq::FMatrixSeq() {
    cache_.push_back(Mat2<LaurentPoly>::identity());
    cache_.push_back({mono(1, 0, 1, 1), mono(1, -1, 1, 0), LaurentPoly(1), LaurentPoly()});
}

const Mat2<LaurentPoly>& FMatrixSeq::at(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (cache_.size() <= n) {
        const std::size_t i = cache_.size();
        cache_.push_back(step_multiplier(i) * cache_[i - 1] + cache_[i - 2]);
    }
    return cache_[n];
}

const Mat2<TowerElem>& AMatrixSeq::at(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (cache_.size() <= n) {
        const std::size_t i = cache_.size();
        const TowerElem factor = parity(i) == 1 ? TowerElem::u() : TowerElem::v();
        cache_.push_back(factor * embed<TowerElem>(f_.at(i)));
    }
    return cache_[n];
}

QPolySeq& q_sequence() {
    static QPolySeq seq;
    return seq;
}

FMatrixSeq& f_sequence() {
    static FMatrixSeq seq;
    return seq;
}

AMatrixSeq& a_sequence() {
    static AMatrixSeq seq(f_sequence());
    return seq;
}

const LaurentPoly& q_poly(std::uint64_t n) { return q_sequence().at(n); }

LaurentPoly q_poly_signed(std::int64_t n) {
    if (n == -1) return LaurentPoly(1);
    if (n < -1) throw std::invalid_argument("q_n is defined for n >= -1 only");
    return q_poly(static_cast<std::uint64_t>(n));
}

const Mat2<LaurentPoly>& f_matrix(std::uint64_t n) { return f_sequence().at(n); }

Mat2<LaurentPoly> f_matrix_explicit(std::uint64_t n) {
    const auto idx = SeqIndex::of(n);
    const LaurentPoly b_over_a = mono(1, -1, 1, 0);
    const LaurentPoly scale = idx.odd() ? b_over_a : LaurentPoly(1);
    const auto signed_n = static_cast<std::int64_t>(n);
    return {scale * q_poly_signed(signed_n + 1), b_over_a * q_poly(n), q_poly(n),
            scale * q_poly_signed(signed_n - 1)};
}

LaurentPoly det_residual(std::uint64_t n) {
    const LaurentPoly expected = SeqIndex::of(n).odd() ? mono(-1, -1, 1, 0) : LaurentPoly(1);
    return mat2_det(f_matrix(n)) - expected;
}

LaurentPoly cassini_residual(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cassini identity needs n >= 1 (q_{-1} is not defined by the recurrence)");
    const bool odd = SeqIndex::of(n).odd();
    // a^{1-eps} b^eps and a^eps b^{1-eps}
    const LaurentPoly outer = odd ? mono(1, 0, 1, 0) : mono(1, 1, 0, 0);
    const LaurentPoly inner = odd ? mono(1, 1, 0, 0) : mono(1, 0, 1, 0);
    const LaurentPoly rhs = odd ? mono(-1, 1, 0, 0) : mono(1, 1, 0, 0);
    const LaurentPoly& qn = q_poly(n);
    return outer * q_poly(n + 1) * q_poly(n - 1) - inner * qn * qn - rhs;
}

const Mat2<TowerElem>& a_matrix(std::uint64_t n) { return a_sequence().at(n); }

Mat2<LaurentPoly> sum_f_residual(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("partial sum identity needs n >= 1");
    const bool odd = SeqIndex::of(n).odd();
    auto lhs = Mat2<LaurentPoly>::zero();
    for (std::uint64_t k = 0; k < n; ++k) lhs += f_matrix(k);

    const LaurentPoly a = mono(1, 1, 0, 0);
    const LaurentPoly b = mono(1, 0, 1, 0);
    const LaurentPoly abx = mono(1, 1, 1, 1);
    const auto& f0 = f_matrix(0);
    const auto& f1 = f_matrix(1);
    const Mat2<LaurentPoly> numerator = (odd ? a : b) * f_matrix(n) + (odd ? b : a) * f_matrix(n - 1) - a * f1 +
                                        abx * f0 - b * f0;
    return lhs - abx.monomial_inverse() * numerator;
}

BigRational q_fast(std::uint64_t n, const BigRational& a0, const BigRational& b0, const BigRational& x0) {
    return q_fast_generic(n, NumericParams<BigRational>{a0, b0, x0});
}

ModInt q_fast_mod(std::uint64_t n, const BigRational& a0, const BigRational& b0, const BigRational& x0,
                  std::uint64_t prime) {
    if (!is_prime_u64(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
    return q_fast_generic(n, NumericParams<ModInt>{ModInt::from_rational(a0, prime), ModInt::from_rational(b0, prime),
                                                   ModInt::from_rational(x0, prime)});
}

}  // namespace biperiodic
