#pragma once

#include <concepts>
#include <cstdint>

#include "biperiodic/big_rational.hpp"
#include "biperiodic/mod_int.hpp"

namespace biperiodic {

template <class R>
concept CommutativeRing = std::copyable<R> && std::equality_comparable<R> && requires(const R& lhs, const R& rhs) {
    { lhs + rhs } -> std::convertible_to<R>;
    { lhs - rhs } -> std::convertible_to<R>;
    { lhs * rhs } -> std::convertible_to<R>;
    { -lhs } -> std::convertible_to<R>;
};

/// Constants of a ring, derived from an existing element so that rings with
/// runtime parameters (ModInt) can supply them.
template <class R>
struct RingTraits {
    static R from_int(const R& /*like*/, std::int64_t value) { return R(value); }
    static R zero(const R& like) { return from_int(like, 0); }
    static R one(const R& like) { return from_int(like, 1); }
};

template <>
struct RingTraits<ModInt> {
    static ModInt from_int(const ModInt& like, std::int64_t value) { return ModInt::from_int(value, like.modulus()); }
    static ModInt zero(const ModInt& like) { return from_int(like, 0); }
    static ModInt one(const ModInt& like) { return from_int(like, 1); }
};

}  // namespace biperiodic
