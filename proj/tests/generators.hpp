#pragma once

// Random elements for the property tests. Seeds are fixed so failures replay.

#include <cstdint>
#include <random>

#include "biperiodic/laurent_poly.hpp"
#include "biperiodic/mat2.hpp"
#include "biperiodic/tower.hpp"

namespace biperiodic::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    BigRational rational(std::int64_t span = 9) {
        return BigRational(integer(-span, span), integer(1, span));
    }

    BigRational nonzero_rational(std::int64_t span = 9) {
        std::int64_t num = 0;
        while (num == 0) num = integer(-span, span);
        return BigRational(num, integer(1, span));
    }

    BigRational positive_rational(std::int64_t span = 9) { return BigRational(integer(1, span), integer(1, span)); }

    LaurentPoly poly(int max_terms = 4, int max_exp = 3, bool with_t = true) {
        std::vector<Term> terms;
        const auto count = integer(0, max_terms);
        for (std::int64_t i = 0; i < count; ++i) {
            Exponents e;
            for (std::size_t v = 0; v < 4; ++v) {
                if (v == 3 && !with_t) continue;
                e.e[v] = static_cast<std::int32_t>(integer(-max_exp, max_exp));
            }
            terms.push_back(Term{e, rational()});
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

    TowerElem tower(int max_terms = 3, int max_exp = 2) {
        return {poly(max_terms, max_exp), poly(max_terms, max_exp), poly(max_terms, max_exp),
                poly(max_terms, max_exp)};
    }

    Mat2<LaurentPoly> poly_matrix(int max_terms = 3, int max_exp = 2) {
        return {poly(max_terms, max_exp), poly(max_terms, max_exp), poly(max_terms, max_exp),
                poly(max_terms, max_exp)};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace biperiodic::testing
