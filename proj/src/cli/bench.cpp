#include <chrono>

#include "biperiodic/cli.hpp"
#include "biperiodic/mod_int.hpp"
#include "biperiodic/sequences.hpp"

namespace biperiodic::cli {

namespace {

template <class F>
auto timed(F&& f, double& ms) {
    const auto start = std::chrono::steady_clock::now();
    auto value = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return value;
}

}  // namespace

BenchResult run_bench(std::uint64_t n, const Params& params, std::optional<std::uint64_t> modulus) {
    if (n == 0) throw UsageError("bench needs n >= 1");
    BenchResult result{n, modulus, {}, {}, 0.0, 0.0};
    if (modulus) {
        if (!is_prime_u64(*modulus)) throw UsageError("--modulus must be prime");
        NumericParams<ModInt> mp{ModInt(0, *modulus), ModInt(0, *modulus), ModInt(0, *modulus)};
        try {
            mp = {ModInt::from_rational(params.a, *modulus), ModInt::from_rational(params.b, *modulus),
                  ModInt::from_rational(params.x, *modulus)};
        } catch (const std::domain_error&) {
            throw UsageError("a parameter denominator vanishes modulo " + std::to_string(*modulus));
        }
        result.iterative_value = timed([&] { return q_iterative(n, mp); }, result.iterative_ms).str();
        result.fast_value =
            timed([&] { return q_fast_mod(n, params.a, params.b, params.x, *modulus); }, result.fast_ms).str();
        return result;
    }
    const NumericParams<BigRational> p{params.a, params.b, params.x};
    result.iterative_value = timed([&] { return q_iterative(n, p); }, result.iterative_ms).str();
    result.fast_value = timed([&] { return q_fast(n, params.a, params.b, params.x); }, result.fast_ms).str();
    return result;
}

}  // namespace biperiodic::cli
