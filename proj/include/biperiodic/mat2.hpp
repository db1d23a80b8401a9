#pragma once

#include <string>

#include "biperiodic/ring.hpp"

namespace biperiodic {

/// 2x2 matrix over a commutative ring, [[e11, e12], [e21, e22]].
template <CommutativeRing R>
struct Mat2 {
    R e11{};
    R e12{};
    R e21{};
    R e22{};

    static Mat2 identity(const R& like = R{}) {
        return {RingTraits<R>::one(like), RingTraits<R>::zero(like), RingTraits<R>::zero(like),
                RingTraits<R>::one(like)};
    }
    static Mat2 zero(const R& like = R{}) {
        const R z = RingTraits<R>::zero(like);
        return {z, z, z, z};
    }

    Mat2 operator+(const Mat2& m) const { return {e11 + m.e11, e12 + m.e12, e21 + m.e21, e22 + m.e22}; }
    Mat2 operator-(const Mat2& m) const { return {e11 - m.e11, e12 - m.e12, e21 - m.e21, e22 - m.e22}; }
    Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }
    Mat2& operator+=(const Mat2& m) { return *this = *this + m; }
    Mat2& operator-=(const Mat2& m) { return *this = *this - m; }

    Mat2 operator*(const Mat2& m) const {
        return {e11 * m.e11 + e12 * m.e21, e11 * m.e12 + e12 * m.e22,
                e21 * m.e11 + e22 * m.e21, e21 * m.e12 + e22 * m.e22};
    }

    bool operator==(const Mat2&) const = default;

    template <class F>
    auto map(F&& f) const -> Mat2<decltype(f(e11))> {
        return {f(e11), f(e12), f(e21), f(e22)};
    }
};

/// Left scalar multiple; S may be any type whose product with R yields R.
template <class S, CommutativeRing R>
    requires requires(const S& s, const R& r) {
        { s * r } -> std::convertible_to<R>;
    }
Mat2<R> operator*(const S& scalar, const Mat2<R>& m) {
    return {scalar * m.e11, scalar * m.e12, scalar * m.e21, scalar * m.e22};
}

template <CommutativeRing R>
R mat2_det(const Mat2<R>& m) {
    return m.e11 * m.e22 - m.e12 * m.e21;
}

template <class R>
bool is_zero_matrix(const Mat2<R>& m) {
    return m.e11.is_zero() && m.e12.is_zero() && m.e21.is_zero() && m.e22.is_zero();
}

/// "[[e11, e12], [e21, e22]]" using each entry's str().
template <class R>
std::string render(const Mat2<R>& m) {
    return "[[" + m.e11.str() + ", " + m.e12.str() + "], [" + m.e21.str() + ", " + m.e22.str() + "]]";
}

/// Lifts a matrix over LaurentPoly (or any ring embedding into T) entrywise.
template <class T, class R>
Mat2<T> embed(const Mat2<R>& m) {
    return {T(m.e11), T(m.e12), T(m.e21), T(m.e22)};
}

}  // namespace biperiodic
