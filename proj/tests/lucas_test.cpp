#include <gtest/gtest.h>

#include <vector>

#include "biperiodic/lucas.hpp"
#include "biperiodic/mod_int.hpp"
#include "biperiodic/transforms.hpp"
#include "generators.hpp"

using namespace biperiodic;

namespace {

// Every (U_n, V_n) for n <= count by stepping the recurrence once.
template <class R>
std::vector<LucasPair<R>> sweep(const LucasParams<R>& params, std::size_t count) {
    std::vector<LucasPair<R>> out;
    R u0 = RingTraits<R>::zero(params.p);
    R u1 = RingTraits<R>::one(params.p);
    R v0 = RingTraits<R>::from_int(params.p, 2);
    R v1 = params.p;
    for (std::size_t n = 0; n <= count; ++n) {
        out.push_back({u0, v0});
        R u2 = params.p * u1 - params.q * u0;
        R v2 = params.p * v1 - params.q * v0;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    return out;
}

}  // namespace

TEST(Lucas, InitialValues) {
    const LucasParams<LaurentPoly> symbolic{sym::a(), sym::b()};
    const auto zero = lucas_uv_iter(0, symbolic);
    EXPECT_EQ(zero.u, LaurentPoly());
    EXPECT_EQ(zero.v, LaurentPoly(2));
    const auto fast_zero = lucas_uv_fast(0, symbolic);
    EXPECT_EQ(fast_zero.u, LaurentPoly());
    EXPECT_EQ(fast_zero.v, LaurentPoly(2));
}

TEST(Lucas, ThirdTermSymbolic) {
    // With P = a and Q = b standing in for symbolic parameters.
    const LaurentPoly p = sym::a();
    const LaurentPoly q = sym::b();
    const auto uv = lucas_uv_iter(3, LucasParams<LaurentPoly>{p, q});
    EXPECT_EQ(uv.u, p * p - q);
    EXPECT_EQ(uv.v, p * p * p - LaurentPoly(3) * p * q);
    const auto fast = lucas_uv_fast(3, LucasParams<LaurentPoly>{p, q});
    EXPECT_EQ(fast.u, uv.u);
    EXPECT_EQ(fast.v, uv.v);
}

TEST(Lucas, FibonacciAndLucasNumbers) {
    const LucasParams<BigRational> fib{BigRational(1), BigRational(-1)};
    const auto uv = lucas_uv_iter(10, fib);
    EXPECT_EQ(uv.u, BigRational(55));
    EXPECT_EQ(uv.v, BigRational(123));
    const auto fast = lucas_uv_fast(10, fib);
    EXPECT_EQ(fast.u, BigRational(55));
    EXPECT_EQ(fast.v, BigRational(123));
}

TEST(Lucas, FastMatchesIterativeOnBinetPair) {
    const auto params = binet_f_params();
    const auto iter = lucas_uv_iter(16, params);
    const auto fast = lucas_uv_fast(16, params);
    EXPECT_EQ(fast.u, iter.u);
    EXPECT_EQ(fast.v, iter.v);
}

TEST(Lucas, FastMatchesIterativeModPrime) {
    const std::uint64_t p = 1'000'000'007ULL;
    const LucasParams<ModInt> params{ModInt(3, p), ModInt(1, p)};
    const auto iter = lucas_uv_iter(100'000, params);
    const auto fast = lucas_uv_fast(100'000, params);
    EXPECT_EQ(fast.u, iter.u);
    EXPECT_EQ(fast.v, iter.v);
}

TEST(Lucas, FastMatchesIterativeForAllRootPairs) {
    std::vector<std::pair<std::string, LucasParams<TowerElem>>> pairs;
    const auto base = binet_f_params();
    pairs.emplace_back("alpha/beta", LucasParams<TowerElem>{TowerElem(base.p), TowerElem(base.q)});
    for (auto kind : kAllTransformKinds) pairs.emplace_back(std::string(kind_name(kind)), characteristic(kind));

    for (const auto& [name, params] : pairs) {
        const auto expected = sweep(params, 64);
        EXPECT_EQ(lucas_uv_iter(64, params).u, expected[64].u) << name;
        for (std::uint64_t n = 0; n <= 64; ++n) {
            const auto fast = lucas_uv_fast(n, params);
            ASSERT_EQ(fast.u, expected[n].u) << name << " n=" << n;
            ASSERT_EQ(fast.v, expected[n].v) << name << " n=" << n;
        }
    }
}

TEST(Lucas, IndexSumIdentity) {
    const auto params = binet_f_params();
    const auto values = sweep(params, 40);
    biperiodic::testing::Gen gen(404);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(gen.integer(0, 19));
        const auto m = static_cast<std::size_t>(gen.integer(static_cast<std::int64_t>(n) + 1, 20));
        // U_{m+n} = U_m V_n - Q^n U_{m-n}
        EXPECT_EQ(values[m + n].u, values[m].u * values[n].v - params.q.pow(static_cast<std::uint32_t>(n)) *
                                                                   values[m - n].u)
            << "m=" << m << " n=" << n;
    }
}

TEST(BinetF, SmallIndicesByHand) {
    for (std::uint64_t n : {0U, 1U, 2U}) {
        EXPECT_TRUE(is_zero_matrix(binet_f_residual(n))) << "n=" << n << ": " << render(binet_f_residual(n));
    }
}

TEST(BinetF, VanishesThrough48) {
    for (std::uint64_t n = 0; n <= 48; ++n) {
        ASSERT_TRUE(is_zero_matrix(binet_f_residual(n))) << "n=" << n;
    }
}
