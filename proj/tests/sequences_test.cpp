#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "biperiodic/sequences.hpp"
#include "generators.hpp"

using namespace biperiodic;

namespace {

LaurentPoly mono(std::int64_t c, int ea, int eb, int ex) { return LaurentPoly::monomial(BigRational(c), ea, eb, ex); }

const LaurentPoly kAx = mono(1, 1, 0, 1);
const LaurentPoly kBx = mono(1, 0, 1, 1);
const LaurentPoly kAbx2 = mono(1, 1, 1, 2);
const LaurentPoly kBOverA = mono(1, -1, 1, 0);

}  // namespace

TEST(SeqIndex, ParityAgreesWithCaseDefinition) {
    for (std::uint64_t n = 0; n < 100; ++n) {
        EXPECT_EQ(parity(n), n % 2 == 1 ? 1 : 0);
        EXPECT_EQ(SeqIndex::of(n).eps, parity(n));
    }
}

TEST(QPoly, FirstTerms) {
    EXPECT_EQ(q_poly(0), LaurentPoly());
    EXPECT_EQ(q_poly(1), LaurentPoly(1));
    EXPECT_EQ(q_poly(2), kAx);
    EXPECT_EQ(q_poly(5), mono(1, 2, 2, 4) + mono(3, 1, 1, 2) + LaurentPoly(1));
    EXPECT_EQ(q_poly(5).str(), "a^2*b^2*x^4 + 3*a*b*x^2 + 1");
}

TEST(QPoly, HasNoNegativeExponents) {
    for (std::uint64_t n = 0; n <= 40; ++n) {
        for (const auto& term : q_poly(n).terms()) {
            for (auto e : term.exponents.e) EXPECT_GE(e, 0) << "n=" << n;
        }
    }
}

TEST(FMatrix, InitialTerms) {
    EXPECT_EQ(f_matrix(0), Mat2<LaurentPoly>::identity());
    EXPECT_EQ(f_matrix(1), (Mat2<LaurentPoly>{kBx, kBOverA, LaurentPoly(1), LaurentPoly()}));
    EXPECT_EQ(f_matrix(2), (Mat2<LaurentPoly>{kAbx2 + LaurentPoly(1), kBx, kAx, LaurentPoly(1)}));
}

TEST(FMatrix, ExplicitFormSmallIndices) {
    EXPECT_EQ(f_matrix_explicit(0), Mat2<LaurentPoly>::identity());
    EXPECT_EQ(f_matrix_explicit(1), (Mat2<LaurentPoly>{kBx, kBOverA, LaurentPoly(1), LaurentPoly()}));
    EXPECT_EQ(f_matrix_explicit(2), f_matrix(2));
}

TEST(FMatrix, ExplicitFormThrough64) {
    for (std::uint64_t n = 0; n <= 64; ++n) {
        ASSERT_EQ(f_matrix(n), f_matrix_explicit(n)) << "n=" << n;
        ASSERT_EQ(f_matrix(n).e21, q_poly(n)) << "n=" << n;
    }
}

TEST(FMatrix, Determinant) {
    EXPECT_TRUE(det_residual(0).is_zero());
    EXPECT_TRUE(det_residual(1).is_zero());
    EXPECT_TRUE(det_residual(6).is_zero());
    for (std::uint64_t n = 0; n <= 64; ++n) ASSERT_TRUE(det_residual(n).is_zero()) << "n=" << n;
}

TEST(Cassini, HandExpansions) {
    EXPECT_TRUE(cassini_residual(1).is_zero());
    EXPECT_TRUE(cassini_residual(2).is_zero());
    // Fibonacci specialization at n = 3: 1*3*1 - 1*4 = -1.
    const EvalPoint ones{1, 1, 1, 0};
    EXPECT_EQ(q_poly(4).eval(ones) * q_poly(2).eval(ones) - q_poly(3).eval(ones) * q_poly(3).eval(ones),
              BigRational(-1));
    EXPECT_EQ(cassini_residual(3).eval(ones), BigRational(0));
}

TEST(Cassini, RejectsZeroIndex) { EXPECT_THROW(cassini_residual(0), std::invalid_argument); }

TEST(Cassini, VanishesThrough64) {
    for (std::uint64_t n = 1; n <= 64; ++n) ASSERT_TRUE(cassini_residual(n).is_zero()) << "n=" << n;
}

TEST(AMatrix, ScalesBySquareRoots) {
    EXPECT_EQ(a_matrix(0), TowerElem::v() * Mat2<TowerElem>::identity());
    EXPECT_EQ(a_matrix(1), TowerElem::u() * embed<TowerElem>(f_matrix(1)));
    const Mat2<LaurentPoly> f2{kAbx2 + LaurentPoly(1), kBx, kAx, LaurentPoly(1)};
    EXPECT_EQ(a_matrix(2), TowerElem::v() * embed<TowerElem>(f2));
}

TEST(AMatrix, SectorPurity) {
    for (std::uint64_t n = 0; n <= 64; ++n) {
        const unsigned expected = n % 2 == 0 ? kSectorV : kSectorU;
        const auto& m = a_matrix(n);
        for (const auto* e : {&m.e11, &m.e12, &m.e21, &m.e22}) {
            // Entries that vanish (e.g. the (2,2) entry of A_1) have empty support.
            if (!e->is_zero()) ASSERT_EQ(e->support(), expected) << "n=" << n;
        }
    }
}

TEST(PartialSum, SmallIndices) {
    EXPECT_TRUE(is_zero_matrix(sum_f_residual(1)));
    EXPECT_TRUE(is_zero_matrix(sum_f_residual(2)));
    EXPECT_TRUE(is_zero_matrix(sum_f_residual(10)));
    EXPECT_THROW(sum_f_residual(0), std::invalid_argument);
}

TEST(PartialSum, VanishesThrough32) {
    for (std::uint64_t n = 1; n <= 32; ++n) ASSERT_TRUE(is_zero_matrix(sum_f_residual(n))) << "n=" << n;
}

TEST(QFast, Examples) {
    EXPECT_EQ(q_fast(10, 1, 1, 1), BigRational(55));
    EXPECT_EQ(q_fast(5, 2, 2, 1), BigRational(29));
    EXPECT_EQ(q_fast(0, 3, 5, 7), BigRational(0));
    EXPECT_EQ(q_fast(0, BigRational(1, 3), 0, 0), BigRational(0));
}

TEST(QFast, DegenerateParameters) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
        for (auto [a, b, x] : {std::tuple{0, 3, 2}, std::tuple{2, 0, 5}, std::tuple{4, 1, 0}}) {
            const NumericParams<BigRational> p{a, b, x};
            EXPECT_EQ(q_fast(n, a, b, x), q_iterative(n, p)) << "n=" << n;
        }
    }
}

TEST(QFast, AgreesWithRecurrenceThrough2000) {
    biperiodic::testing::Gen gen(8128);
    for (int trial = 0; trial < 3; ++trial) {
        const NumericParams<BigRational> p{gen.nonzero_rational(5), gen.nonzero_rational(5), gen.nonzero_rational(5)};
        // Single sweep of the recurrence as the oracle.
        BigRational prev(0);
        BigRational cur(1);
        ASSERT_EQ(q_fast(0, p.a, p.b, p.x), prev);
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            ASSERT_EQ(q_fast(n, p.a, p.b, p.x), cur) << "n=" << n << " trial=" << trial;
            BigRational next = ((n + 1) % 2 == 0 ? p.a : p.b) * p.x * cur + prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        EXPECT_EQ(q_iterative(2000, p), prev);
    }
}

TEST(QFast, ModularMatchesIterative) {
    const std::uint64_t prime = 1'000'000'007ULL;
    const BigRational a(1), b(2), x(1, 2);
    const NumericParams<ModInt> mp{ModInt::from_rational(a, prime), ModInt::from_rational(b, prime),
                                   ModInt::from_rational(x, prime)};
    for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 999ULL, 123'456ULL}) {
        EXPECT_EQ(q_fast_mod(n, a, b, x, prime), q_iterative(n, mp)) << "n=" << n;
    }
    EXPECT_EQ(q_fast_mod(500, a, b, x, prime), ModInt::from_rational(q_fast(500, a, b, x), prime));
    EXPECT_THROW(q_fast_mod(10, a, b, x, 1'000'000'008ULL), std::invalid_argument);
}

TEST(Specializations, FibonacciPellAndKFibonacci) {
    // a = b = k, x = 1 collapses to y_n = k y_{n-1} + y_{n-2}.
    for (std::int64_t k : {1, 2, 3}) {
        std::vector<BigRational> y{BigRational(0), BigRational(1)};
        for (std::size_t n = 2; n <= 30; ++n) y.push_back(BigRational(k) * y[n - 1] + y[n - 2]);
        for (std::uint64_t n = 0; n <= 30; ++n) {
            EXPECT_EQ(q_poly(n).eval(EvalPoint{k, k, 1, 0}), y[n]) << "k=" << k << " n=" << n;
            EXPECT_EQ(q_fast(n, k, k, 1), y[n]) << "k=" << k << " n=" << n;
        }
    }
}
