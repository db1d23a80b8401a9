#pragma once

#include <cstdint>
#include <deque>
#include <mutex>

#include "biperiodic/laurent_poly.hpp"
#include "biperiodic/lucas.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/mod_int.hpp"
#include "biperiodic/tower.hpp"

namespace biperiodic {

/// Parity indicator: 1 for odd n, 0 for even n.
constexpr int parity(std::uint64_t n) { return static_cast<int>(n - 2 * (n / 2)); }

struct SeqIndex {
    std::uint64_t n = 0;
    int eps = 0;

    static constexpr SeqIndex of(std::uint64_t n) { return {n, parity(n)}; }
    bool odd() const { return eps == 1; }
};

/// Memoized q_0, q_1, ... with q_n = (ax or bx) q_{n-1} + q_{n-2}, the
/// multiplier being ax for even n and bx for odd n.
///
/// Append-only; `at` may be called from several threads.
class QPolySeq {
public:
    QPolySeq();
    const LaurentPoly& at(std::uint64_t n);

private:
    std::mutex mutex_;
    std::deque<LaurentPoly> cache_;
};

/// Memoized matrices F_n with F_0 = I and F_1 = [[bx, b/a], [1, 0]], stepping
/// by ax (even n) or bx (odd n).
class FMatrixSeq {
public:
    FMatrixSeq();
    const Mat2<LaurentPoly>& at(std::uint64_t n);

private:
    std::mutex mutex_;
    std::deque<Mat2<LaurentPoly>> cache_;
};

/// Memoized A_n: v*F_n for even n, u*F_n for odd n.
class AMatrixSeq {
public:
    explicit AMatrixSeq(FMatrixSeq& f) : f_(f) {}
    const Mat2<TowerElem>& at(std::uint64_t n);

private:
    FMatrixSeq& f_;
    std::mutex mutex_;
    std::deque<Mat2<TowerElem>> cache_;
};

/// Process-wide caches behind the free functions below.
QPolySeq& q_sequence();
FMatrixSeq& f_sequence();
AMatrixSeq& a_sequence();

/// The n-th bi-periodic Fibonacci polynomial.
const LaurentPoly& q_poly(std::uint64_t n);
/// q_{-1} := 1, the value that makes the closed form of F_0 the identity.
LaurentPoly q_poly_signed(std::int64_t n);

const Mat2<LaurentPoly>& f_matrix(std::uint64_t n);

/// [[(b/a)^eps q_{n+1}, (b/a) q_n], [q_n, (b/a)^eps q_{n-1}]].
Mat2<LaurentPoly> f_matrix_explicit(std::uint64_t n);

/// det(F_n) - (-b/a)^eps.
LaurentPoly det_residual(std::uint64_t n);

/// a^{1-eps} b^eps q_{n+1} q_{n-1} - a^eps b^{1-eps} q_n^2 - a(-1)^n.
/// Throws std::invalid_argument for n = 0.
LaurentPoly cassini_residual(std::uint64_t n);

const Mat2<TowerElem>& a_matrix(std::uint64_t n);

/// sum_{k<n} F_k - [a^eps b^{1-eps} F_n + a^{1-eps} b^eps F_{n-1} - a F_1 + abx F_0 - b F_0] / (abx).
/// Throws std::invalid_argument for n = 0.
Mat2<LaurentPoly> sum_f_residual(std::uint64_t n);

/// Values of a, b, x for numeric evaluation.
template <class F>
struct NumericParams {
    F a;
    F b;
    F x;
};

/// O(n) evaluation of q_n by the defining recurrence.
template <CommutativeRing F>
F q_iterative(std::uint64_t n, const NumericParams<F>& p) {
    using T = RingTraits<F>;
    if (n == 0) return T::zero(p.a);
    const F ax = p.a * p.x;
    const F bx = p.b * p.x;
    F prev = T::zero(p.a);
    F cur = T::one(p.a);
    for (std::uint64_t i = 2; i <= n; ++i) {
        F next = (i % 2 == 0 ? ax : bx) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// O(log n) evaluation of q_n. Both parity subsequences satisfy
/// y_{m+1} = (abx^2 + 2) y_m - y_{m-1}, which gives
///   q_{2m} = ax * U_m(P, 1),  q_{2m+1} = U_{m+1}(P, 1) - U_m(P, 1),  P = abx^2 + 2.
template <CommutativeRing F>
F q_fast_generic(std::uint64_t n, const NumericParams<F>& p) {
    using T = RingTraits<F>;
    const F big_p = p.a * p.b * p.x * p.x + T::from_int(p.a, 2);
    const auto s = lucas_state_fast(n / 2, LucasParams<F>{big_p, T::one(p.a)});
    if (n % 2 == 0) return p.a * p.x * s.u;
    return s.u_next - s.u;
}

BigRational q_fast(std::uint64_t n, const BigRational& a0, const BigRational& b0, const BigRational& x0);
ModInt q_fast_mod(std::uint64_t n, const BigRational& a0, const BigRational& b0, const BigRational& x0,
                  std::uint64_t prime);

}  // namespace biperiodic
