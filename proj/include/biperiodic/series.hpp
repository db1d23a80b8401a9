#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "biperiodic/big_rational.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/report.hpp"
#include "biperiodic/tower.hpp"

namespace biperiodic {

// The formal variable t is an ordinary Laurent symbol; a truncated series is
// just a polynomial whose high (or low) t-degrees are ignored.

enum class GfKind { f_ogf, b_ogf, w_ogf, negsum_finite, negsum_infinite };

std::string_view gf_kind_name(GfKind kind);

/// Closed form of a generating function: numerator / denominator, both in t.
/// The denominator has constant term 1 in t, so truncated division is defined.
struct GfSpec {
    GfKind kind;
    std::uint32_t order;
    TowerElem denominator;
    Mat2<TowerElem> numerator;
};

/// Closed forms of sum F_i t^i, sum b_i t^i and sum w_i t^i.
GfSpec ogf_spec(GfKind kind, std::uint32_t order);

/// Closed form of sum_{k>=0} F_k t^{-k}: denominator and t times the numerator matrix.
GfSpec negsum_infinite_spec(std::uint32_t order);

/// A difference split at a t-degree cutoff: `checked` must vanish for the
/// identity to hold, `truncation` is the expected tail of a finite sum.
struct TruncatedResidual {
    Mat2<TowerElem> checked;
    Mat2<TowerElem> truncation;

    bool passed() const { return is_zero_matrix(checked); }
};

/// The sequence term multiplying t^i in the given ordinary generating function.
Mat2<TowerElem> ogf_term(GfKind kind, std::uint64_t i);

/// denominator * sum_{i<=order} term_i t^i.
Mat2<TowerElem> ogf_product(GfKind kind, std::uint32_t order);

/// ogf_product - numerator, split at t-degree `order`.
/// Throws std::invalid_argument for order < 4 or a non-ogf kind.
TruncatedResidual ogf_residual(GfKind kind, std::uint32_t order);

/// Denominator readings of the finite negative-power sum.
enum class NegsumDenominator { abx2_plus_2, ab_plus_2 };
/// Last term of the finite sum. Literal: F_{n+2} / t^{n+2}. Corrected: F_{n+2} / t^{n-2}.
enum class NegsumForm { literal, corrected };

std::string_view negsum_denominator_name(NegsumDenominator reading);

/// denominator * sum_{k<=n} F_k t^{-k} minus the right-hand side multiplied
/// out by the same denominator. Throws std::invalid_argument for n < 2.
Mat2<LaurentPoly> negsum_finite_residual(std::uint64_t n, NegsumDenominator reading, NegsumForm form);

/// denominator * sum_{k<=order} F_k t^{-k} - t * numerator, split so that
/// `checked` holds the t-exponents >= 4 - order. The truncation tail of the
/// infinite sum only reaches down from t^{3-order}.
TruncatedResidual negsum_infinite_residual(std::uint32_t order);

/// Coefficients c_0..c_order of numerator / denominator as a power series in t.
/// Throws std::invalid_argument when the denominator's t^0 coefficient is not 1.
std::vector<Mat2<TowerElem>> series_expand(const Mat2<TowerElem>& numerator, const TowerElem& denominator,
                                           std::uint32_t order);

struct EgfSample {
    BigRational a;
    BigRational b;
    BigRational x;
    BigRational t;
};

/// Max entrywise relative error between sum_{n<=terms} b_n t^n / n! and the
/// exponential closed form at one sample.
double egf_relative_error(const EgfSample& sample, std::uint32_t terms);

/// Throws std::invalid_argument for terms < 20, non-positive a, b, x or negative t.
CheckReport egf_numeric_check(std::span<const EgfSample> samples, std::uint32_t terms, double tol);

}  // namespace biperiodic
