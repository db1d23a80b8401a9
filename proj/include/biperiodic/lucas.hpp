#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "biperiodic/laurent_poly.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/ring.hpp"

namespace biperiodic {

/// Characteristic pair of y_{n+1} = P*y_n - Q*y_{n-1}; the roots of
/// r^2 - P*r + Q stand behind U_n = (alpha^n - beta^n)/(alpha - beta) and
/// V_n = alpha^n + beta^n without ever being represented.
template <CommutativeRing R>
struct LucasParams {
    R p;
    R q;
};

template <CommutativeRing R>
struct LucasPair {
    R u;
    R v;
};

/// (U_n, V_n, U_{n+1}, V_{n+1}).
template <CommutativeRing R>
struct LucasState {
    R u;
    R v;
    R u_next;
    R v_next;
};

/// Reference evaluation by stepping the recurrence n times.
template <CommutativeRing R>
LucasPair<R> lucas_uv_iter(std::uint64_t n, const LucasParams<R>& params) {
    using T = RingTraits<R>;
    R u_prev = T::zero(params.p);
    R u = T::one(params.p);
    R v_prev = T::from_int(params.p, 2);
    R v = params.p;
    if (n == 0) return {u_prev, v_prev};
    for (std::uint64_t i = 1; i < n; ++i) {
        R u_new = params.p * u - params.q * u_prev;
        R v_new = params.p * v - params.q * v_prev;
        u_prev = std::move(u);
        v_prev = std::move(v);
        u = std::move(u_new);
        v = std::move(v_new);
    }
    return {u, v};
}

/// Fast doubling over the bits of n:
///   U_{2m} = U_m V_m,          V_{2m} = V_m^2 - 2 Q^m,
///   U_{2m+1} = U_{m+1} V_m - Q^m,  V_{2m+1} = V_{m+1} V_m - P Q^m.
/// Q^m rides along the chain; no step divides by 2.
template <CommutativeRing R>
LucasState<R> lucas_state_fast(std::uint64_t n, const LucasParams<R>& params) {
    using T = RingTraits<R>;
    const R two = T::from_int(params.p, 2);
    // State for m = 0.
    LucasState<R> s{T::zero(params.p), two, T::one(params.p), params.p};
    R q_pow = T::one(params.p);  // Q^m
    if (n == 0) return s;

    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        // m -> 2m
        R u2 = s.u * s.v;
        R v2 = s.v * s.v - two * q_pow;
        R u2p1 = s.u_next * s.v - q_pow;
        R v2p1 = s.v_next * s.v - params.p * q_pow;
        if ((n >> bit) & 1U) {
            // 2m -> 2m+1; U_{2m+2} = U_{m+1} V_{m+1}, V_{2m+2} = V_{m+1}^2 - 2 Q^{m+1}.
            R q_m1 = q_pow * params.q;
            R u2p2 = s.u_next * s.v_next;
            R v2p2 = s.v_next * s.v_next - two * q_m1;
            s = {std::move(u2p1), std::move(v2p1), std::move(u2p2), std::move(v2p2)};
            q_pow = q_pow * q_m1;
        } else {
            q_pow = q_pow * q_pow;
            s = {std::move(u2), std::move(v2), std::move(u2p1), std::move(v2p1)};
        }
    }
    return s;
}

template <CommutativeRing R>
LucasPair<R> lucas_uv_fast(std::uint64_t n, const LucasParams<R>& params) {
    auto s = lucas_state_fast(n, params);
    return {std::move(s.u), std::move(s.v)};
}

/// (P, Q) = (abx^2, -abx^2): the root pair behind the Binet form of F_n.
LucasParams<LaurentPoly> binet_f_params();

/// F_n minus its radical-free Binet form
///   A1~ * U_n + B1~ * U_{2*floor(n/2)+2},
/// where A1~ and B1~ carry the (alpha - beta) factor cancelled against U.
/// Zero for every n.
Mat2<LaurentPoly> binet_f_residual(std::uint64_t n);

}  // namespace biperiodic
