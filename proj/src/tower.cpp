#include "biperiodic/tower.hpp"

namespace biperiodic {

namespace {

const LaurentPoly& ax() {
    static const LaurentPoly value = LaurentPoly::monomial(BigRational(1), 1, 0, 1);
    return value;
}

const LaurentPoly& bx() {
    static const LaurentPoly value = LaurentPoly::monomial(BigRational(1), 0, 1, 1);
    return value;
}

const LaurentPoly& abx2() {
    static const LaurentPoly value = LaurentPoly::monomial(BigRational(1), 1, 1, 2);
    return value;
}

}  // namespace

unsigned TowerElem::support() const {
    unsigned mask = 0;
    if (!c1_.is_zero()) mask |= kSectorOne;
    if (!cu_.is_zero()) mask |= kSectorU;
    if (!cv_.is_zero()) mask |= kSectorV;
    if (!cuv_.is_zero()) mask |= kSectorUV;
    return mask;
}

TowerElem TowerElem::pow(std::uint32_t exponent) const {
    TowerElem result(1);
    TowerElem base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

TowerElem TowerElem::t_coefficient(std::int32_t degree) const {
    return {c1_.t_coefficient(degree), cu_.t_coefficient(degree), cv_.t_coefficient(degree),
            cuv_.t_coefficient(degree)};
}

TowerElem TowerElem::filter_t(const std::function<bool(std::int32_t)>& keep) const {
    return {c1_.filter_t(keep), cu_.filter_t(keep), cv_.filter_t(keep), cuv_.filter_t(keep)};
}

TowerElem TowerElem::shift_t(std::int32_t delta) const {
    return {c1_.shift_t(delta), cu_.shift_t(delta), cv_.shift_t(delta), cuv_.shift_t(delta)};
}

std::string TowerElem::str() const {
    return "(" + c1_.str() + ") + (" + cu_.str() + ")*u + (" + cv_.str() + ")*v + (" + cuv_.str() + ")*w";
}

TowerElem& TowerElem::operator+=(const TowerElem& rhs) {
    c1_ += rhs.c1_;
    cu_ += rhs.cu_;
    cv_ += rhs.cv_;
    cuv_ += rhs.cuv_;
    return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& rhs) {
    c1_ -= rhs.c1_;
    cu_ -= rhs.cu_;
    cv_ -= rhs.cv_;
    cuv_ -= rhs.cuv_;
    return *this;
}

// u*u = ax, v*v = bx, u*uv = ax*v, v*uv = bx*u, uv*uv = abx^2.
TowerElem operator*(const TowerElem& lhs, const TowerElem& rhs) {
    const unsigned ls = lhs.support();
    const unsigned rs = rhs.support();
    if (ls == 0 || rs == 0) return {};
    if (ls == kSectorOne) return lhs.c1_ * rhs;
    if (rs == kSectorOne) return rhs.c1_ * lhs;

    LaurentPoly c1 = lhs.c1_ * rhs.c1_ + ax() * (lhs.cu_ * rhs.cu_) + bx() * (lhs.cv_ * rhs.cv_) +
                     abx2() * (lhs.cuv_ * rhs.cuv_);
    LaurentPoly cu = lhs.c1_ * rhs.cu_ + lhs.cu_ * rhs.c1_ + bx() * (lhs.cv_ * rhs.cuv_ + lhs.cuv_ * rhs.cv_);
    LaurentPoly cv = lhs.c1_ * rhs.cv_ + lhs.cv_ * rhs.c1_ + ax() * (lhs.cu_ * rhs.cuv_ + lhs.cuv_ * rhs.cu_);
    LaurentPoly cuv = lhs.c1_ * rhs.cuv_ + lhs.cuv_ * rhs.c1_ + lhs.cu_ * rhs.cv_ + lhs.cv_ * rhs.cu_;
    return {std::move(c1), std::move(cu), std::move(cv), std::move(cuv)};
}

TowerElem operator*(const LaurentPoly& lhs, const TowerElem& rhs) {
    return {lhs * rhs.c1_, lhs * rhs.cu_, lhs * rhs.cv_, lhs * rhs.cuv_};
}

TowerElem tower_mul(const TowerElem& s, const TowerElem& r) { return s * r; }

}  // namespace biperiodic
