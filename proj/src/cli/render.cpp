#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "biperiodic/cli.hpp"
#include "biperiodic/sequences.hpp"
#include "biperiodic/transforms.hpp"

namespace biperiodic::cli {

namespace {

std::string decimal(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

template <class T, class F>
std::string render_with(const Mat2<T>& m, F&& fmt) {
    return "[[" + fmt(m.e11) + ", " + fmt(m.e12) + "], [" + fmt(m.e21) + ", " + fmt(m.e22) + "]]";
}

Mat2<TowerElem> tower_term(char kind, std::uint64_t n) {
    switch (kind) {
        case 'A': return a_matrix(n);
        case 'b': return transform(TransformKind::binomial, n).value;
        case 'w': return transform(TransformKind::k_binomial, n).value;
        case 'r': return transform(TransformKind::rising, n).value;
        case 'f': return transform(TransformKind::falling, n).value;
        default: throw UsageError("unknown sequence kind");
    }
}

}  // namespace

bool is_seq_kind(std::string_view kind) {
    return kind.size() == 1 && std::string_view("qFAbwrf").find(kind[0]) != std::string_view::npos;
}

std::string render_term(std::string_view kind, std::uint64_t n, const std::optional<Params>& params, bool float_mode) {
    if (!is_seq_kind(kind)) throw UsageError("unknown sequence kind '" + std::string(kind) + "' (expected q, F, A, b, w, r or f)");
    if (float_mode && !params) throw UsageError("--float needs --a, --b and --x");
    const char k = kind[0];
    const bool tower = k != 'q' && k != 'F';
    if (float_mode && tower && (params->a.sign() <= 0 || params->b.sign() <= 0 || params->x.sign() <= 0)) {
        throw UsageError("--float for kind " + std::string(kind) + " needs positive a, b, x");
    }

    try {
        if (!params) {
            if (k == 'q') return q_poly(n).str();
            if (k == 'F') return render(f_matrix(n));
            return render(tower_term(k, n));
        }

        const EvalPoint at{params->a, params->b, params->x, BigRational(0)};
        if (k == 'q') {
            const BigRational value = q_poly(n).eval(at);
            return float_mode ? decimal(value.to_double()) : value.str();
        }
        if (k == 'F') {
            const auto& m = f_matrix(n);
            if (float_mode) return render_with(m, [&](const LaurentPoly& p) { return decimal(p.eval(at).to_double()); });
            return render_with(m, [&](const LaurentPoly& p) { return p.eval(at).str(); });
        }

        const auto m = tower_term(k, n);
        if (float_mode) {
            const double su = std::sqrt((params->a * params->x).to_double());
            const double sv = std::sqrt((params->b * params->x).to_double());
            return render_with(m, [&](const TowerElem& e) {
                return decimal(e.c1().eval(at).to_double() + e.cu().eval(at).to_double() * su +
                               e.cv().eval(at).to_double() * sv + e.cuv().eval(at).to_double() * su * sv);
            });
        }
        return render_with(m, [&](const TowerElem& e) {
            return TowerElem(LaurentPoly(e.c1().eval(at)), LaurentPoly(e.cu().eval(at)), LaurentPoly(e.cv().eval(at)),
                             LaurentPoly(e.cuv().eval(at)))
                .str();
        });
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("parameters not admissible: ") + e.what());
    }
}

}  // namespace biperiodic::cli
