#pragma once

#include <cstdint>
#include <string>

#include "biperiodic/laurent_poly.hpp"

namespace biperiodic {

/// Which basis coordinates of a TowerElem are nonzero, as a bit mask.
enum Sector : unsigned {
    kSectorOne = 1U,
    kSectorU = 2U,
    kSectorV = 4U,
    kSectorUV = 8U,
};

/// Element of LaurentPoly[u, v] / (u^2 - a*x, v^2 - b*x).
///
/// Stored on the basis {1, u, v, uv}. With positive a, b, x the generators
/// stand for sqrt(a*x) and sqrt(b*x), and uv for x*sqrt(a*b).
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(std::int64_t constant) : c1_(constant) {}  // NOLINT
    TowerElem(LaurentPoly c1) : c1_(std::move(c1)) {}  // NOLINT
    TowerElem(LaurentPoly c1, LaurentPoly cu, LaurentPoly cv, LaurentPoly cuv)
        : c1_(std::move(c1)), cu_(std::move(cu)), cv_(std::move(cv)), cuv_(std::move(cuv)) {}

    static TowerElem u() { return {LaurentPoly(), LaurentPoly(1), LaurentPoly(), LaurentPoly()}; }
    static TowerElem v() { return {LaurentPoly(), LaurentPoly(), LaurentPoly(1), LaurentPoly()}; }
    /// k = uv, the image of x*sqrt(a*b).
    static TowerElem k() { return {LaurentPoly(), LaurentPoly(), LaurentPoly(), LaurentPoly(1)}; }

    const LaurentPoly& c1() const { return c1_; }
    const LaurentPoly& cu() const { return cu_; }
    const LaurentPoly& cv() const { return cv_; }
    const LaurentPoly& cuv() const { return cuv_; }

    bool is_zero() const { return c1_.is_zero() && cu_.is_zero() && cv_.is_zero() && cuv_.is_zero(); }
    unsigned support() const;

    TowerElem pow(std::uint32_t exponent) const;
    /// Coordinatewise application of LaurentPoly::t_coefficient.
    TowerElem t_coefficient(std::int32_t degree) const;
    TowerElem filter_t(const std::function<bool(std::int32_t)>& keep) const;
    TowerElem shift_t(std::int32_t delta) const;

    /// "(<c1>) + (<cu>)*u + (<cv>)*v + (<cuv>)*w", w standing for uv.
    std::string str() const;

    TowerElem& operator+=(const TowerElem& rhs);
    TowerElem& operator-=(const TowerElem& rhs);
    TowerElem& operator*=(const TowerElem& rhs) { return *this = *this * rhs; }

    friend TowerElem operator+(TowerElem lhs, const TowerElem& rhs) { return lhs += rhs; }
    friend TowerElem operator-(TowerElem lhs, const TowerElem& rhs) { return lhs -= rhs; }
    friend TowerElem operator*(const TowerElem& lhs, const TowerElem& rhs);
    /// Scaling by a base-ring element, cheaper than the full product.
    friend TowerElem operator*(const LaurentPoly& lhs, const TowerElem& rhs);
    TowerElem operator-() const { return {-c1_, -cu_, -cv_, -cuv_}; }

    friend bool operator==(const TowerElem&, const TowerElem&) = default;

private:
    LaurentPoly c1_;
    LaurentPoly cu_;
    LaurentPoly cv_;
    LaurentPoly cuv_;
};

TowerElem tower_mul(const TowerElem& s, const TowerElem& r);

}  // namespace biperiodic
