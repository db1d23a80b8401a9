#include "biperiodic/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace biperiodic {

namespace {

constexpr std::array<Var, 4> kRenderOrder{Var::a, Var::b, Var::x, Var::t};
constexpr std::array<char, 4> kVarNames{'a', 'b', 'x', 't'};

auto order_key(const Exponents& e) { return std::tie(e.e[3], e.e[0], e.e[1], e.e[2]); }

struct CanonicalLess {
    bool operator()(const Term& lhs, const Term& rhs) const {
        return canonical_before(lhs.exponents, rhs.exponents);
    }
};

// Sorted, possibly repeated terms -> normalized terms.
std::vector<Term> combine_sorted(std::vector<Term> sorted) {
    std::vector<Term> out;
    out.reserve(sorted.size());
    for (auto& term : sorted) {
        if (!out.empty() && out.back().exponents == term.exponents) {
            out.back().coeff += term.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(term));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    return out;
}

template <class Combine>
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs, Combine rhs_sign) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.size() || j < rhs.size()) {
        if (j == rhs.size() || (i < lhs.size() && canonical_before(lhs[i].exponents, rhs[j].exponents))) {
            out.push_back(lhs[i++]);
        } else if (i == lhs.size() || canonical_before(rhs[j].exponents, lhs[i].exponents)) {
            out.push_back(Term{rhs[j].exponents, rhs_sign(rhs[j].coeff)});
            ++j;
        } else {
            BigRational sum = lhs[i].coeff + rhs_sign(rhs[j].coeff);
            if (!sum.is_zero()) out.push_back(Term{lhs[i].exponents, std::move(sum)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool canonical_before(const Exponents& lhs, const Exponents& rhs) { return order_key(lhs) > order_key(rhs); }

LaurentPoly::LaurentPoly(std::int64_t constant) : LaurentPoly(BigRational(constant)) {}

LaurentPoly::LaurentPoly(const BigRational& constant) {
    if (!constant.is_zero()) terms_.push_back(Term{Exponents{}, constant});
}

LaurentPoly LaurentPoly::monomial(const BigRational& coeff, std::int32_t ea, std::int32_t eb, std::int32_t ex,
                                  std::int32_t et) {
    return monomial(coeff, Exponents{{ea, eb, ex, et}});
}

LaurentPoly LaurentPoly::monomial(const BigRational& coeff, const Exponents& exponents) {
    LaurentPoly out;
    if (!coeff.is_zero()) out.terms_.push_back(Term{exponents, coeff});
    return out;
}

LaurentPoly LaurentPoly::var(Var v, std::int32_t power) {
    Exponents e;
    e[v] = power;
    return monomial(BigRational(1), e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), CanonicalLess{});
    LaurentPoly out;
    out.terms_ = combine_sorted(std::move(terms));
    return out;
}

BigRational LaurentPoly::constant_term() const {
    for (const auto& term : terms_) {
        if (term.exponents == Exponents{}) return term.coeff;
    }
    return BigRational(0);
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (is_zero()) throw std::invalid_argument("monomial inverse of zero");
    if (!is_monomial()) {
        throw std::invalid_argument("monomial inverse needs a single term, got " + std::to_string(size()) +
                                    " terms: " + str());
    }
    return monomial(terms_.front().coeff.reciprocal(), -terms_.front().exponents);
}

LaurentPoly LaurentPoly::pow(std::uint32_t exponent) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

BigRational LaurentPoly::eval(const EvalPoint& point) const {
    const std::array<const BigRational*, 4> values{&point.a, &point.b, &point.x, &point.t};
    BigRational total(0);
    for (const auto& term : terms_) {
        BigRational value = term.coeff;
        for (std::size_t i = 0; i < 4; ++i) {
            const std::int32_t e = term.exponents.e[i];
            if (e == 0) continue;
            if (e < 0 && values[i]->is_zero()) {
                throw std::domain_error(std::string("zero substituted for ") + kVarNames[i] +
                                        " which carries a negative exponent");
            }
            value *= values[i]->pow(e);
        }
        total += value;
    }
    return total;
}

LaurentPoly LaurentPoly::filter_t(const std::function<bool(std::int32_t)>& keep) const {
    LaurentPoly out;
    for (const auto& term : terms_) {
        if (keep(term.exponents[Var::t])) out.terms_.push_back(term);
    }
    return out;
}

LaurentPoly LaurentPoly::t_coefficient(std::int32_t degree) const {
    LaurentPoly out;
    for (const auto& term : terms_) {
        if (term.exponents[Var::t] != degree) continue;
        Term copy = term;
        copy.exponents[Var::t] = 0;
        out.terms_.push_back(std::move(copy));
    }
    return out;
}

LaurentPoly LaurentPoly::shift_t(std::int32_t delta) const {
    LaurentPoly out = *this;
    for (auto& term : out.terms_) term.exponents[Var::t] += delta;
    return out;
}

std::pair<std::int32_t, std::int32_t> LaurentPoly::t_range() const {
    if (is_zero()) return {0, 0};
    // t is the leading sort key, so the extremes sit at the ends.
    return {terms_.back().exponents[Var::t], terms_.front().exponents[Var::t]};
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms_) {
        std::string factors;
        for (Var v : kRenderOrder) {
            const std::int32_t e = term.exponents[v];
            if (e == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += kVarNames[static_cast<std::size_t>(v)];
            if (e != 1) factors += "^" + std::to_string(e);
        }
        const bool negative = term.coeff.sign() < 0;
        const BigRational magnitude = term.coeff.abs();
        std::string body;
        if (factors.empty()) {
            body = magnitude.str();
        } else if (magnitude.is_one()) {
            body = factors;
        } else {
            body = magnitude.str() + "*" + factors;
        }
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    terms_ = merge_terms(terms_, rhs.terms_, [](const BigRational& c) { return c; });
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    terms_ = merge_terms(terms_, rhs.terms_, [](const BigRational& c) { return -c; });
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out = lhs;
    out += rhs;
    return out;
}

LaurentPoly operator-(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out = lhs;
    out -= rhs;
    return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Term> products;
    products.reserve(lhs.size() * rhs.size());
    for (const auto& l : lhs.terms_) {
        for (const auto& r : rhs.terms_) {
            products.push_back(Term{l.exponents + r.exponents, l.coeff * r.coeff});
        }
    }
    if (lhs.size() == 1 || rhs.size() == 1) {
        // Shifting by a single monomial preserves the order.
        LaurentPoly out;
        out.terms_ = std::move(products);
        return out;
    }
    std::sort(products.begin(), products.end(), CanonicalLess{});
    LaurentPoly out;
    out.terms_ = combine_sorted(std::move(products));
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& term : out.terms_) term.coeff = -term.coeff;
    return out;
}

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly lp_monomial_inverse(const LaurentPoly& p) { return p.monomial_inverse(); }

BigRational lp_eval(const LaurentPoly& p, const BigRational& a0, const BigRational& b0, const BigRational& x0,
                    const BigRational& t0) {
    return p.eval(EvalPoint{a0, b0, x0, t0});
}

}  // namespace biperiodic
