#include "biperiodic/series.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "biperiodic/sequences.hpp"
#include "biperiodic/transforms.hpp"

namespace biperiodic {

namespace {

LaurentPoly mono(const BigRational& coeff, std::int32_t ea, std::int32_t eb, std::int32_t ex, std::int32_t et = 0) {
    return LaurentPoly::monomial(coeff, ea, eb, ex, et);
}

LaurentPoly t_pow(std::int32_t e) { return LaurentPoly::var(Var::t, e); }

TowerElem tw(const LaurentPoly& p) { return TowerElem(p); }

// 1 - (abx^2 + 2) t^2 + t^4, or the (ab + 2) reading.
LaurentPoly quartic_denominator(NegsumDenominator reading) {
    const LaurentPoly middle = reading == NegsumDenominator::abx2_plus_2 ? mono(1, 1, 1, 2) + LaurentPoly(2)
                                                                         : mono(1, 1, 1, 0) + LaurentPoly(2);
    return LaurentPoly(1) - middle * t_pow(2) + t_pow(4);
}

Mat2<TowerElem> f0_tower() { return embed<TowerElem>(f_matrix(0)); }
Mat2<TowerElem> f1_tower() { return embed<TowerElem>(f_matrix(1)); }

}  // namespace

std::string_view gf_kind_name(GfKind kind) {
    switch (kind) {
        case GfKind::f_ogf:
            return "F-ogf";
        case GfKind::b_ogf:
            return "b-ogf";
        case GfKind::w_ogf:
            return "w-ogf";
        case GfKind::negsum_finite:
            return "negsum-finite";
        case GfKind::negsum_infinite:
            return "negsum-infinite";
    }
    return "?";
}

std::string_view negsum_denominator_name(NegsumDenominator reading) {
    return reading == NegsumDenominator::abx2_plus_2 ? "abx^2+2" : "ab+2";
}

GfSpec ogf_spec(GfKind kind, std::uint32_t order) {
    const TowerElem t = tw(sym::t());
    const TowerElem k = TowerElem::k();
    const auto f0 = f0_tower();
    const auto f1 = f1_tower();
    const LaurentPoly ax = mono(1, 1, 0, 1);
    const LaurentPoly bx = mono(1, 0, 1, 1);
    const LaurentPoly abx2 = mono(1, 1, 1, 2);
    const LaurentPoly b_over_a = mono(1, -1, 1, 0);

    switch (kind) {
        case GfKind::f_ogf: {
            const LaurentPoly tt = sym::t();
            Mat2<LaurentPoly> num{
                LaurentPoly(1) + bx * tt - t_pow(2),
                b_over_a * tt + bx * t_pow(2) - b_over_a * t_pow(3),
                tt + ax * t_pow(2) - t_pow(3),
                LaurentPoly(1) - (abx2 + LaurentPoly(1)) * t_pow(2) + bx * t_pow(3),
            };
            return {kind, order, tw(quartic_denominator(NegsumDenominator::abx2_plus_2)), embed<TowerElem>(num)};
        }
        case GfKind::b_ogf: {
            const TowerElem den = TowerElem(1) - (k + TowerElem(2)) * t + k * tw(t_pow(2));
            const auto num = TowerElem::v() * f0 +
                             t * (TowerElem::u() * f1 - (TowerElem::v() * (TowerElem(1) + k)) * f0);
            return {kind, order, den, num};
        }
        case GfKind::w_ogf: {
            const TowerElem den = TowerElem(1) - (k * k + TowerElem(2) * k) * t + (k * k * k) * tw(t_pow(2));
            const auto num = TowerElem::v() * f0 +
                             t * ((tw(ax) * TowerElem::v()) * f1 -
                                  (tw(bx) * TowerElem::u() + tw(abx2) * TowerElem::v()) * f0);
            return {kind, order, den, num};
        }
        default:
            throw std::invalid_argument("not an ordinary generating function: " + std::string(gf_kind_name(kind)));
    }
}

GfSpec negsum_infinite_spec(std::uint32_t order) {
    const LaurentPoly ax = mono(1, 1, 0, 1);
    const LaurentPoly bx = mono(1, 0, 1, 1);
    const LaurentPoly abx2 = mono(1, 1, 1, 2);
    const LaurentPoly b_over_a = mono(1, -1, 1, 0);
    const LaurentPoly t = sym::t();
    Mat2<LaurentPoly> inner{
        t_pow(3) + bx * t_pow(2) - t,
        b_over_a * t_pow(2) + bx * t - b_over_a,
        t_pow(2) + ax * t - LaurentPoly(1),
        t_pow(3) - (abx2 + LaurentPoly(1)) * t + bx,
    };
    return {GfKind::negsum_infinite, order, tw(quartic_denominator(NegsumDenominator::abx2_plus_2)),
            embed<TowerElem>(t * inner)};
}

Mat2<TowerElem> ogf_term(GfKind kind, std::uint64_t i) {
    switch (kind) {
        case GfKind::f_ogf:
            return embed<TowerElem>(f_matrix(i));
        case GfKind::b_ogf:
            return transform(TransformKind::binomial, i).value;
        case GfKind::w_ogf:
            return transform(TransformKind::k_binomial, i).value;
        default:
            throw std::invalid_argument("not an ordinary generating function: " + std::string(gf_kind_name(kind)));
    }
}

Mat2<TowerElem> ogf_product(GfKind kind, std::uint32_t order) {
    const GfSpec spec = ogf_spec(kind, order);
    auto partial = Mat2<TowerElem>::zero();
    for (std::uint32_t i = 0; i <= order; ++i) {
        partial += tw(t_pow(static_cast<std::int32_t>(i))) * ogf_term(kind, i);
    }
    return spec.denominator * partial;
}

TruncatedResidual ogf_residual(GfKind kind, std::uint32_t order) {
    if (order < 4) throw std::invalid_argument("generating-function check needs order >= 4");
    const GfSpec spec = ogf_spec(kind, order);
    const auto diff = ogf_product(kind, order) - spec.numerator;
    const auto cutoff = static_cast<std::int32_t>(order);
    return {diff.map([&](const TowerElem& e) { return e.filter_t([&](std::int32_t d) { return d <= cutoff; }); }),
            diff.map([&](const TowerElem& e) { return e.filter_t([&](std::int32_t d) { return d > cutoff; }); })};
}

Mat2<LaurentPoly> negsum_finite_residual(std::uint64_t n, NegsumDenominator reading, NegsumForm form) {
    if (n < 2) throw std::invalid_argument("finite negative-power sum needs n >= 2");
    const auto sn = static_cast<std::int32_t>(n);
    auto partial = Mat2<LaurentPoly>::zero();
    for (std::uint64_t k = 0; k <= n; ++k) partial += t_pow(-static_cast<std::int32_t>(k)) * f_matrix(k);
    const LaurentPoly den = quartic_denominator(reading);

    const auto& f0 = f_matrix(0);
    const auto& f1 = f_matrix(1);
    const LaurentPoly ax = mono(1, 1, 0, 1);
    const LaurentPoly bx = mono(1, 0, 1, 1);
    const LaurentPoly abx2_plus_1 = mono(1, 1, 1, 2) + LaurentPoly(1);
    const std::int32_t last_exp = form == NegsumForm::literal ? -(sn + 2) : -(sn - 2);

    const Mat2<LaurentPoly> rhs = t_pow(-(sn - 1)) * f_matrix(n - 1) - t_pow(-(sn - 3)) * f_matrix(n + 1) +
                                  t_pow(-sn) * f_matrix(n) - t_pow(last_exp) * f_matrix(n + 2) + t_pow(4) * f0 +
                                  t_pow(3) * f1 - t_pow(2) * (abx2_plus_1 * f0 - ax * f1) -
                                  sym::t() * (f1 - bx * f0);
    return den * partial - rhs;
}

TruncatedResidual negsum_infinite_residual(std::uint32_t order) {
    const GfSpec spec = negsum_infinite_spec(order);
    auto partial = Mat2<TowerElem>::zero();
    for (std::uint32_t k = 0; k <= order; ++k) {
        partial += tw(t_pow(-static_cast<std::int32_t>(k))) * embed<TowerElem>(f_matrix(k));
    }
    const auto diff = spec.denominator * partial - spec.numerator;
    const std::int32_t cutoff = 4 - static_cast<std::int32_t>(order);
    return {diff.map([&](const TowerElem& e) { return e.filter_t([&](std::int32_t d) { return d >= cutoff; }); }),
            diff.map([&](const TowerElem& e) { return e.filter_t([&](std::int32_t d) { return d < cutoff; }); })};
}

std::vector<Mat2<TowerElem>> series_expand(const Mat2<TowerElem>& numerator, const TowerElem& denominator,
                                           std::uint32_t order) {
    if (denominator.t_coefficient(0) != TowerElem(1)) {
        throw std::invalid_argument("series division needs a denominator with t^0 coefficient 1");
    }
    std::int32_t den_degree = 0;
    for (const auto* coord : {&denominator.c1(), &denominator.cu(), &denominator.cv(), &denominator.cuv()}) {
        const auto [lo, hi] = coord->t_range();
        if (lo < 0) throw std::invalid_argument("series division needs a polynomial denominator in t");
        den_degree = std::max(den_degree, hi);
    }
    std::vector<TowerElem> den_coeffs;
    for (std::int32_t j = 0; j <= den_degree; ++j) den_coeffs.push_back(denominator.t_coefficient(j));

    std::vector<Mat2<TowerElem>> out;
    out.reserve(order + 1);
    for (std::uint32_t i = 0; i <= order; ++i) {
        const auto si = static_cast<std::int32_t>(i);
        auto c = numerator.map([&](const TowerElem& e) { return e.t_coefficient(si); });
        for (std::int32_t j = 1; j <= std::min(si, den_degree); ++j) {
            c -= den_coeffs[static_cast<std::size_t>(j)] * out[i - static_cast<std::uint32_t>(j)];
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct NumericTower {
    double su;  // sqrt(a x)
    double sv;  // sqrt(b x)
    EvalPoint point;

    double operator()(const TowerElem& e) const {
        return e.c1().eval(point).to_double() + e.cu().eval(point).to_double() * su +
               e.cv().eval(point).to_double() * sv + e.cuv().eval(point).to_double() * su * sv;
    }
};

void validate_sample(const EgfSample& s) {
    if (s.a.sign() <= 0 || s.b.sign() <= 0 || s.x.sign() <= 0) {
        throw std::invalid_argument("exponential check needs positive a, b, x");
    }
    if (s.t.sign() < 0) throw std::invalid_argument("exponential check needs t >= 0");
}

}  // namespace

double egf_relative_error(const EgfSample& sample, std::uint32_t terms) {
    validate_sample(sample);
    const NumericTower num{std::sqrt((sample.a * sample.x).to_double()), std::sqrt((sample.b * sample.x).to_double()),
                           EvalPoint{sample.a, sample.b, sample.x, BigRational(0)}};
    const double t = sample.t.to_double();

    Mat2<double> series{0.0, 0.0, 0.0, 0.0};
    double weight = 1.0;  // t^n / n!
    for (std::uint32_t n = 0; n <= terms; ++n) {
        if (n > 0) weight *= t / static_cast<double>(n);
        const auto b_n = transform(TransformKind::binomial, n).value.map(num);
        series.e11 += weight * b_n.e11;
        series.e12 += weight * b_n.e12;
        series.e21 += weight * b_n.e21;
        series.e22 += weight * b_n.e22;
    }

    const double k = num.su * num.sv;
    const double root_gap = std::sqrt(k * k + 4.0);
    const double r1 = ((k + 2.0) - root_gap) / 2.0;
    const double r2 = ((k + 2.0) + root_gap) / 2.0;
    const double e1 = std::exp(r1 * t);
    const double e2 = std::exp(r2 * t);
    const auto d = binet_constant(TransformKind::binomial).map(num);
    const double half_sv = num.sv / 2.0;
    const Mat2<double> closed{
        d.e11 * (e2 - e1) / root_gap + half_sv * (e2 + e1),
        d.e12 * (e2 - e1) / root_gap,
        d.e21 * (e2 - e1) / root_gap,
        d.e22 * (e2 - e1) / root_gap + half_sv * (e2 + e1),
    };

    double worst = 0.0;
    for (auto [lhs, rhs] : {std::pair{series.e11, closed.e11}, std::pair{series.e12, closed.e12},
                            std::pair{series.e21, closed.e21}, std::pair{series.e22, closed.e22}}) {
        const double scale = std::max(std::abs(rhs), std::numeric_limits<double>::min());
        worst = std::max(worst, rhs == 0.0 ? std::abs(lhs - rhs) : std::abs(lhs - rhs) / scale);
    }
    return worst;
}

CheckReport egf_numeric_check(std::span<const EgfSample> samples, std::uint32_t terms, double tol) {
    if (terms < 20) throw std::invalid_argument("exponential check needs at least 20 terms");
    for (const auto& s : samples) validate_sample(s);
    const auto start = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = "egf";
    report.range = {0, static_cast<std::int64_t>(terms)};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double err = egf_relative_error(samples[i], terms);
        if (!(err <= tol)) {
            const auto& s = samples[i];
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3e", err);
            report.fail_at(static_cast<std::int64_t>(i), "relative error " + std::string(buf) + " at (a,b,x,t) = (" +
                                                             s.a.str() + ", " + s.b.str() + ", " + s.x.str() + ", " +
                                                             s.t.str() + ")");
            break;
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace biperiodic
