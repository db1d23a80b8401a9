#include "biperiodic/lucas.hpp"

#include "biperiodic/sequences.hpp"

namespace biperiodic {

LucasParams<LaurentPoly> binet_f_params() {
    const LaurentPoly abx2 = LaurentPoly::monomial(BigRational(1), 1, 1, 2);
    return {abx2, -abx2};
}

Mat2<LaurentPoly> binet_f_residual(std::uint64_t n) {
    const auto idx = SeqIndex::of(n);
    const auto half = static_cast<std::int32_t>(n / 2);
    const auto& f0 = f_matrix(0);
    const auto& f1 = f_matrix(1);
    const LaurentPoly ax = LaurentPoly::monomial(BigRational(1), 1, 0, 1);
    const LaurentPoly bx = LaurentPoly::monomial(BigRational(1), 0, 1, 1);
    const LaurentPoly abx2 = LaurentPoly::monomial(BigRational(1), 1, 1, 2);

    // The parity exponents select one of the two matrices.
    const Mat2<LaurentPoly> a_numerator = idx.odd() ? f1 - bx * f0 : ax * f1 - f0 - abx2 * f0;
    const LaurentPoly a_scale = LaurentPoly::monomial(BigRational(1), -half, -half, -2 * half);

    // b^eps / ((ab)^{half+1} x^{n + 2 eps(n+1)})
    const std::int32_t x_exp = static_cast<std::int32_t>(n) + 2 * parity(n + 1);
    const LaurentPoly b_scale =
        LaurentPoly::monomial(BigRational(1), -(half + 1), idx.eps - (half + 1), -x_exp);

    const auto params = binet_f_params();
    const LaurentPoly u_n = lucas_uv_fast(n, params).u;
    const LaurentPoly u_even = lucas_uv_fast(2 * static_cast<std::uint64_t>(half) + 2, params).u;

    return f_matrix(n) - ((a_scale * u_n) * a_numerator + (b_scale * u_even) * f0);
}

}  // namespace biperiodic
