#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "biperiodic/lucas.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/tower.hpp"

namespace biperiodic {

/// Weighted binomial sums of A_i; with k = uv:
///   binomial    sum C(n,i) A_i
///   k_binomial  sum C(n,i) k^n A_i
///   rising      sum C(n,i) k^i A_i
///   falling     sum C(n,i) k^{n-i} A_i
enum class TransformKind { binomial, k_binomial, rising, falling };

inline constexpr std::array<TransformKind, 4> kAllTransformKinds{
    TransformKind::binomial, TransformKind::k_binomial, TransformKind::rising, TransformKind::falling};

std::string_view kind_name(TransformKind kind);
std::optional<TransformKind> parse_transform_kind(std::string_view name);

/// Recurrence pair of each transform:
/// binomial (k+2, k), k-binomial (k^2+2k, k^3), rising (k^2+2, 1), falling (3k, 2k^2-1).
LucasParams<TowerElem> characteristic(TransformKind kind);

struct TransformValue {
    TransformKind kind;
    std::uint64_t n;
    Mat2<TowerElem> value;
};

/// C(n, i), exact.
const BigRational& binomial_coefficient(std::uint64_t n, std::uint64_t i);
/// k^n as a tower element.
const TowerElem& k_power(std::uint64_t n);

/// The definitional sum. Memoized per (kind, n).
TransformValue transform(TransformKind kind, std::uint64_t n);

/// T_{n+1} - (P T_n - Q T_{n-1}) with (P, Q) = characteristic(kind).
/// Throws std::invalid_argument for n = 0.
Mat2<TowerElem> recurrence_residual(TransformKind kind, std::uint64_t n);
/// Same with an explicit pair, used to probe alternative readings.
Mat2<TowerElem> recurrence_residual_with(TransformKind kind, std::uint64_t n, const LucasParams<TowerElem>& params);

/// b_{n+1} - b_n - sum_{i<=n} C(n,i) A_{i+1}.
Mat2<TowerElem> stepsum_residual(std::uint64_t n);

/// w_n - k^n b_n.
Mat2<TowerElem> scaling_residual(std::uint64_t n);

/// r_n - A_{2n}.
Mat2<TowerElem> rising_collapse_residual(std::uint64_t n);

/// Radical-free Binet constant D: u F_1 - (bx/2) u F_0 for binomial and
/// falling, k times that for k-binomial and rising.
Mat2<TowerElem> binet_constant(TransformKind kind);

/// T_n - [D U_n(P,Q) + (v F_0 / 2) V_n(P,Q)].
Mat2<TowerElem> binet_residual(TransformKind kind, std::uint64_t n);

}  // namespace biperiodic
