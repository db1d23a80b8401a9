#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "biperiodic/sequences.hpp"
#include "biperiodic/transforms.hpp"

using namespace biperiodic;

namespace {

using TM = Mat2<TowerElem>;

LaurentPoly mono(std::int64_t c, int ea, int eb, int ex) { return LaurentPoly::monomial(BigRational(c), ea, eb, ex); }

const TowerElem kU = TowerElem::u();
const TowerElem kV = TowerElem::v();
const TowerElem kK = TowerElem::k();
const TowerElem kAx(mono(1, 1, 0, 1));
const TowerElem kBx(mono(1, 0, 1, 1));
const TowerElem kAbx2(mono(1, 1, 1, 2));

TM F(std::uint64_t n) { return embed<TowerElem>(f_matrix(n)); }

// Direct evaluation of the weighted sums with a locally built Pascal row.
TM oracle(TransformKind kind, std::uint64_t n) {
    std::vector<BigRational> row{BigRational(1)};
    for (std::uint64_t m = 1; m <= n; ++m) {
        std::vector<BigRational> next(m + 1, BigRational(1));
        for (std::uint64_t i = 1; i < m; ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);
    }
    TM acc = TM::zero();
    for (std::uint64_t i = 0; i <= n; ++i) {
        TowerElem w(LaurentPoly(row[i]));
        switch (kind) {
            case TransformKind::binomial: break;
            case TransformKind::k_binomial: w = w * kK.pow(static_cast<std::uint32_t>(n)); break;
            case TransformKind::rising: w = w * kK.pow(static_cast<std::uint32_t>(i)); break;
            case TransformKind::falling: w = w * kK.pow(static_cast<std::uint32_t>(n - i)); break;
        }
        acc += w * a_matrix(i);
    }
    return acc;
}

}  // namespace

TEST(Transform, Names) {
    for (auto kind : kAllTransformKinds) EXPECT_EQ(parse_transform_kind(kind_name(kind)), kind);
    EXPECT_EQ(kind_name(TransformKind::k_binomial), "k-binomial");
    EXPECT_FALSE(parse_transform_kind("sideways").has_value());
}

TEST(Transform, HandExpansions) {
    EXPECT_EQ(transform(TransformKind::binomial, 0).value, kV * F(0));
    EXPECT_EQ(transform(TransformKind::binomial, 2).value,
              kV * (TowerElem(2) * F(0) + kAx * F(1)) + TowerElem(2) * kU * F(1));
    EXPECT_EQ(transform(TransformKind::rising, 1).value, a_matrix(2));
    // w_1 = k (v F_0 + u F_1)
    EXPECT_EQ(transform(TransformKind::k_binomial, 1).value, kBx * kU * F(0) + kAx * kV * F(1));
    EXPECT_EQ(transform(TransformKind::falling, 1).value, kU * (kBx * F(0) + F(1)));
    EXPECT_EQ(transform(TransformKind::falling, 2).value,
              kV * ((kAbx2 + TowerElem(1)) * F(0) + TowerElem(3) * kAx * F(1)));
}

TEST(Transform, BinomialCoefficients) {
    EXPECT_EQ(binomial_coefficient(0, 0), BigRational(1));
    EXPECT_EQ(binomial_coefficient(10, 3), BigRational(120));
    EXPECT_EQ(binomial_coefficient(60, 30), BigRational::parse("118264581564861424"));
    EXPECT_EQ(k_power(3), kK * kK * kK);
}

TEST(Transform, MatchesDirectSum) {
    for (auto kind : kAllTransformKinds) {
        for (std::uint64_t n = 0; n <= 16; ++n) {
            ASSERT_EQ(transform(kind, n).value, oracle(kind, n)) << kind_name(kind) << " n=" << n;
        }
    }
}

TEST(Transform, StaysInOddSector) {
    for (auto kind : kAllTransformKinds) {
        for (std::uint64_t n = 0; n <= 32; ++n) {
            const auto& m = transform(kind, n).value;
            for (const auto* e : {&m.e11, &m.e12, &m.e21, &m.e22}) {
                ASSERT_EQ(e->support() & (kSectorOne | kSectorUV), 0U) << kind_name(kind) << " n=" << n;
            }
        }
    }
}

TEST(Recurrence, HandExpansions) {
    EXPECT_TRUE(is_zero_matrix(recurrence_residual(TransformKind::binomial, 1)));
    EXPECT_TRUE(is_zero_matrix(recurrence_residual(TransformKind::falling, 1)));
    EXPECT_TRUE(is_zero_matrix(recurrence_residual(TransformKind::rising, 1)));
    EXPECT_THROW(recurrence_residual(TransformKind::binomial, 0), std::invalid_argument);
}

TEST(Recurrence, HoldsThrough32) {
    for (auto kind : kAllTransformKinds) {
        for (std::uint64_t n = 1; n <= 32; ++n) {
            ASSERT_TRUE(is_zero_matrix(recurrence_residual(kind, n))) << kind_name(kind) << " n=" << n;
        }
    }
}

TEST(Recurrence, NegatedConstantTermFailsForKBinomial) {
    // The pair (k^2+2k, -k^3) does not annihilate w_n; only +k^3 does.
    const LucasParams<TowerElem> negated{kK * kK + TowerElem(2) * kK, -(kK * kK * kK)};
    EXPECT_FALSE(is_zero_matrix(recurrence_residual_with(TransformKind::k_binomial, 1, negated)));
    EXPECT_TRUE(is_zero_matrix(
        recurrence_residual_with(TransformKind::k_binomial, 1, characteristic(TransformKind::k_binomial))));
}

TEST(StepSum, HoldsThrough32) {
    EXPECT_TRUE(is_zero_matrix(stepsum_residual(0)));
    EXPECT_TRUE(is_zero_matrix(stepsum_residual(1)));
    EXPECT_TRUE(is_zero_matrix(stepsum_residual(8)));
    for (std::uint64_t n = 0; n <= 32; ++n) ASSERT_TRUE(is_zero_matrix(stepsum_residual(n))) << "n=" << n;
}

TEST(Scaling, HoldsThrough32) {
    EXPECT_TRUE(is_zero_matrix(scaling_residual(0)));
    EXPECT_TRUE(is_zero_matrix(scaling_residual(1)));
    EXPECT_TRUE(is_zero_matrix(scaling_residual(6)));
    for (std::uint64_t n = 0; n <= 32; ++n) ASSERT_TRUE(is_zero_matrix(scaling_residual(n))) << "n=" << n;
}

TEST(RisingCollapse, HoldsThrough32) {
    EXPECT_TRUE(is_zero_matrix(rising_collapse_residual(0)));
    EXPECT_TRUE(is_zero_matrix(rising_collapse_residual(1)));
    EXPECT_TRUE(is_zero_matrix(rising_collapse_residual(12)));
    for (std::uint64_t n = 0; n <= 32; ++n) ASSERT_TRUE(is_zero_matrix(rising_collapse_residual(n))) << "n=" << n;
}

TEST(BinetT, HandExpansions) {
    EXPECT_TRUE(is_zero_matrix(binet_residual(TransformKind::binomial, 0)));
    EXPECT_TRUE(is_zero_matrix(binet_residual(TransformKind::binomial, 2)));
    EXPECT_TRUE(is_zero_matrix(binet_residual(TransformKind::falling, 1)));
    const TowerElem half(LaurentPoly(BigRational(1, 2)));
    EXPECT_EQ(binet_constant(TransformKind::binomial), kU * F(1) - half * kBx * kU * F(0));
    EXPECT_EQ(binet_constant(TransformKind::rising), kK * binet_constant(TransformKind::binomial));
}

TEST(BinetT, HoldsThrough24) {
    for (auto kind : kAllTransformKinds) {
        for (std::uint64_t n = 0; n <= 24; ++n) {
            ASSERT_TRUE(is_zero_matrix(binet_residual(kind, n))) << kind_name(kind) << " n=" << n;
        }
    }
}
