#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "biperiodic/sequences.hpp"
#include "biperiodic/series.hpp"
#include "biperiodic/transforms.hpp"
#include "generators.hpp"

using namespace biperiodic;

namespace {

const LaurentPoly kBx = LaurentPoly::monomial(BigRational(1), 0, 1, 1);

constexpr GfKind kOgfKinds[] = {GfKind::f_ogf, GfKind::b_ogf, GfKind::w_ogf};

}  // namespace

TEST(Ogf, TermsAreTheSequences) {
    for (std::uint64_t i = 0; i <= 10; ++i) {
        EXPECT_EQ(ogf_term(GfKind::f_ogf, i), embed<TowerElem>(f_matrix(i)));
        EXPECT_EQ(ogf_term(GfKind::b_ogf, i), transform(TransformKind::binomial, i).value);
        EXPECT_EQ(ogf_term(GfKind::w_ogf, i), transform(TransformKind::k_binomial, i).value);
    }
}

TEST(Ogf, NumeratorLowCoefficients) {
    const auto f = ogf_spec(GfKind::f_ogf, 4);
    EXPECT_EQ(f.numerator.e11.t_coefficient(0), TowerElem(1));
    EXPECT_EQ(f.numerator.e11.t_coefficient(1), TowerElem(kBx));
    EXPECT_EQ(f.numerator.e11.t_coefficient(2), TowerElem(-1));
    const auto b = ogf_spec(GfKind::b_ogf, 6);
    EXPECT_EQ(b.numerator.map([](const TowerElem& e) { return e.t_coefficient(0); }),
              TowerElem::v() * Mat2<TowerElem>::identity());
}

TEST(Ogf, ResidualVanishesBelowCutoff) {
    for (GfKind kind : kOgfKinds) {
        for (std::uint32_t order : {4U, 8U, 32U}) {
            const auto r = ogf_residual(kind, order);
            EXPECT_TRUE(r.passed()) << gf_kind_name(kind) << " N=" << order << ": " << render(r.checked);
            EXPECT_FALSE(is_zero_matrix(r.truncation)) << gf_kind_name(kind) << " N=" << order;
        }
    }
    EXPECT_THROW(ogf_residual(GfKind::f_ogf, 3), std::invalid_argument);
}

TEST(Ogf, ExpansionRecoversTerms) {
    for (GfKind kind : kOgfKinds) {
        const auto spec = ogf_spec(kind, 16);
        const auto coeffs = series_expand(spec.numerator, spec.denominator, 16);
        ASSERT_EQ(coeffs.size(), 17U);
        for (std::uint64_t i = 0; i <= 16; ++i) {
            ASSERT_EQ(coeffs[i], ogf_term(kind, i)) << gf_kind_name(kind) << " i=" << i;
        }
    }
    EXPECT_THROW(series_expand(Mat2<TowerElem>::identity(), TowerElem(2), 3), std::invalid_argument);
}

TEST(NegsumInfinite, NumeratorEntry) {
    const auto spec = negsum_infinite_spec(10);
    EXPECT_EQ(spec.numerator.e22.t_coefficient(1), TowerElem(kBx));
    EXPECT_EQ(spec.numerator.e22.t_coefficient(4), TowerElem(1));
}

TEST(NegsumInfinite, HighExponentsVanish) {
    for (std::uint32_t order : {6U, 10U, 24U}) {
        const auto r = negsum_infinite_residual(order);
        EXPECT_TRUE(r.passed()) << "N=" << order << ": " << render(r.checked);
        EXPECT_FALSE(is_zero_matrix(r.truncation)) << "N=" << order;
    }
}

TEST(NegsumFinite, CorrectedFormHolds) {
    for (std::uint64_t n = 2; n <= 16; ++n) {
        const auto r = negsum_finite_residual(n, NegsumDenominator::abx2_plus_2, NegsumForm::corrected);
        ASSERT_TRUE(is_zero_matrix(r)) << "n=" << n << ": " << render(r);
    }
    EXPECT_THROW(negsum_finite_residual(1, NegsumDenominator::abx2_plus_2, NegsumForm::corrected),
                 std::invalid_argument);
}

TEST(NegsumFinite, LiteralFormsFail) {
    // Recorded, not asserted as identities: the literal last term does not close.
    for (std::uint64_t n = 2; n <= 16; ++n) {
        for (auto reading : {NegsumDenominator::abx2_plus_2, NegsumDenominator::ab_plus_2}) {
            EXPECT_FALSE(is_zero_matrix(negsum_finite_residual(n, reading, NegsumForm::literal)))
                << negsum_denominator_name(reading) << " n=" << n;
        }
        EXPECT_FALSE(
            is_zero_matrix(negsum_finite_residual(n, NegsumDenominator::ab_plus_2, NegsumForm::corrected)))
            << "n=" << n;
    }
}

TEST(Egf, ZeroArgumentIsExact) {
    const EgfSample s{BigRational(2), BigRational(3), BigRational(1, 2), BigRational(0)};
    EXPECT_EQ(egf_relative_error(s, 20), 0.0);
}

TEST(Egf, DocumentedSamples) {
    const std::vector<EgfSample> samples{{BigRational(1), BigRational(1), BigRational(1), BigRational(3, 10)},
                                         {BigRational(2), BigRational(3), BigRational(1, 2), BigRational(1, 10)}};
    const auto report = egf_numeric_check(samples, 40, 1e-8);
    EXPECT_TRUE(report.passed) << report.residual.value_or("");
    EXPECT_EQ(report.suite, "egf");
    EXPECT_EQ(report.range.hi, 40);
}

TEST(Egf, AgreesWithRecurrenceSum) {
    // Test-side oracle: scalar recurrence in doubles for the (1,1) entry,
    // b_{n+1} = (k+2) b_n - k b_{n-1}, then the partial exponential sum.
    biperiodic::testing::Gen gen(55);
    for (int i = 0; i < 5; ++i) {
        const EgfSample s{gen.positive_rational(4), gen.positive_rational(4), gen.positive_rational(4),
                          BigRational(gen.integer(1, 5), 20)};
        EXPECT_LE(egf_relative_error(s, 40), 1e-8);

        const double a = s.a.to_double(), b = s.b.to_double(), x = s.x.to_double(), t = s.t.to_double();
        const double su = std::sqrt(a * x), sv = std::sqrt(b * x), k = su * sv;
        double prev = sv;             // (1,1) of v F_0
        double cur = sv + su * b * x;  // (1,1) of v F_0 + u F_1
        double sum = prev + cur * t;
        double weight = t;
        for (int n = 2; n <= 60; ++n) {
            const double next = (k + 2.0) * cur - k * prev;
            weight *= t / n;
            sum += weight * next;
            prev = cur;
            cur = next;
        }
        const double gap = std::sqrt(k * k + 4.0);
        const double r1 = ((k + 2.0) - gap) / 2.0, r2 = ((k + 2.0) + gap) / 2.0;
        const double d11 = su * b * x - 0.5 * b * x * su;
        const double closed = d11 * (std::exp(r2 * t) - std::exp(r1 * t)) / gap +
                              0.5 * sv * (std::exp(r2 * t) + std::exp(r1 * t));
        EXPECT_NEAR(sum / closed, 1.0, 1e-10);
    }
}

TEST(Egf, RejectsBadInput) {
    const std::vector<EgfSample> neg{{BigRational(-1), BigRational(1), BigRational(1), BigRational(1, 10)}};
    EXPECT_THROW(egf_numeric_check(neg, 40, 1e-8), std::invalid_argument);
    const std::vector<EgfSample> ok{{BigRational(1), BigRational(1), BigRational(1), BigRational(1, 10)}};
    EXPECT_THROW(egf_numeric_check(ok, 10, 1e-8), std::invalid_argument);
}
