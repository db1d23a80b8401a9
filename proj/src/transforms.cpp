#include "biperiodic/transforms.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "biperiodic/sequences.hpp"

namespace biperiodic {

namespace {

class PascalTriangle {
public:
    const BigRational& at(std::uint64_t n, std::uint64_t i) {
        if (i > n) throw std::out_of_range("binomial index beyond row");
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n) {
            std::vector<BigRational> row(rows_.size() + 1, BigRational(1));
            if (!rows_.empty()) {
                const auto& prev = rows_.back();
                for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][i];
    }

private:
    std::mutex mutex_;
    std::deque<std::vector<BigRational>> rows_;
};

class KPowers {
public:
    KPowers() { powers_.emplace_back(1); }

    const TowerElem& at(std::uint64_t n) {
        std::lock_guard lock(mutex_);
        while (powers_.size() <= n) powers_.push_back(powers_.back() * TowerElem::k());
        return powers_[n];
    }

private:
    std::mutex mutex_;
    std::deque<TowerElem> powers_;
};

class TransformTable {
public:
    const Mat2<TowerElem>& at(TransformKind kind, std::uint64_t n) {
        const auto key = std::make_pair(kind, n);
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        Mat2<TowerElem> value = compute(kind, n);
        std::lock_guard lock(mutex_);
        return values_.try_emplace(key, std::move(value)).first->second;
    }

private:
    static Mat2<TowerElem> compute(TransformKind kind, std::uint64_t n) {
        auto sum = Mat2<TowerElem>::zero();
        for (std::uint64_t i = 0; i <= n; ++i) {
            TowerElem weight(LaurentPoly(binomial_coefficient(n, i)));
            switch (kind) {
                case TransformKind::binomial:
                    break;
                case TransformKind::k_binomial:
                    weight = weight * k_power(n);
                    break;
                case TransformKind::rising:
                    weight = weight * k_power(i);
                    break;
                case TransformKind::falling:
                    weight = weight * k_power(n - i);
                    break;
            }
            sum += weight * a_matrix(i);
        }
        return sum;
    }

    std::mutex mutex_;
    std::map<std::pair<TransformKind, std::uint64_t>, Mat2<TowerElem>> values_;
};

PascalTriangle& pascal() {
    static PascalTriangle triangle;
    return triangle;
}

KPowers& k_powers() {
    static KPowers powers;
    return powers;
}

TransformTable& table() {
    static TransformTable t;
    return t;
}

TowerElem base(const LaurentPoly& p) { return TowerElem(p); }

}  // namespace

std::string_view kind_name(TransformKind kind) {
    switch (kind) {
        case TransformKind::binomial:
            return "binomial";
        case TransformKind::k_binomial:
            return "k-binomial";
        case TransformKind::rising:
            return "rising";
        case TransformKind::falling:
            return "falling";
    }
    return "?";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
    for (auto kind : kAllTransformKinds) {
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

LucasParams<TowerElem> characteristic(TransformKind kind) {
    const TowerElem k = TowerElem::k();
    const TowerElem k2 = k * k;
    switch (kind) {
        case TransformKind::binomial:
            return {k + TowerElem(2), k};
        case TransformKind::k_binomial:
            return {k2 + TowerElem(2) * k, k2 * k};
        case TransformKind::rising:
            return {k2 + TowerElem(2), TowerElem(1)};
        case TransformKind::falling:
            return {TowerElem(3) * k, TowerElem(2) * k2 - TowerElem(1)};
    }
    throw std::logic_error("unknown transform kind");
}

const BigRational& binomial_coefficient(std::uint64_t n, std::uint64_t i) { return pascal().at(n, i); }

const TowerElem& k_power(std::uint64_t n) { return k_powers().at(n); }

TransformValue transform(TransformKind kind, std::uint64_t n) { return {kind, n, table().at(kind, n)}; }

Mat2<TowerElem> recurrence_residual_with(TransformKind kind, std::uint64_t n, const LucasParams<TowerElem>& params) {
    if (n == 0) throw std::invalid_argument("transform recurrence needs n >= 1");
    return table().at(kind, n + 1) - (params.p * table().at(kind, n) - params.q * table().at(kind, n - 1));
}

Mat2<TowerElem> recurrence_residual(TransformKind kind, std::uint64_t n) {
    return recurrence_residual_with(kind, n, characteristic(kind));
}

Mat2<TowerElem> stepsum_residual(std::uint64_t n) {
    auto shifted = Mat2<TowerElem>::zero();
    for (std::uint64_t i = 0; i <= n; ++i) {
        shifted += base(LaurentPoly(binomial_coefficient(n, i))) * a_matrix(i + 1);
    }
    return table().at(TransformKind::binomial, n + 1) - table().at(TransformKind::binomial, n) - shifted;
}

Mat2<TowerElem> scaling_residual(std::uint64_t n) {
    return table().at(TransformKind::k_binomial, n) - k_power(n) * table().at(TransformKind::binomial, n);
}

Mat2<TowerElem> rising_collapse_residual(std::uint64_t n) {
    return table().at(TransformKind::rising, n) - a_matrix(2 * n);
}

Mat2<TowerElem> binet_constant(TransformKind kind) {
    const auto f0 = embed<TowerElem>(f_matrix(0));
    const auto f1 = embed<TowerElem>(f_matrix(1));
    const LaurentPoly half_bx = LaurentPoly::monomial(BigRational(1, 2), 0, 1, 1);
    Mat2<TowerElem> d = TowerElem::u() * f1 - (base(half_bx) * TowerElem::u()) * f0;
    if (kind == TransformKind::k_binomial || kind == TransformKind::rising) d = TowerElem::k() * d;
    return d;
}

Mat2<TowerElem> binet_residual(TransformKind kind, std::uint64_t n) {
    const auto uv = lucas_uv_fast(n, characteristic(kind));
    const auto half_v_f0 = (base(LaurentPoly(BigRational(1, 2))) * TowerElem::v()) * embed<TowerElem>(f_matrix(0));
    return table().at(kind, n) - (uv.u * binet_constant(kind) + uv.v * half_v_f0);
}

}  // namespace biperiodic
