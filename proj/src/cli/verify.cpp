#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "biperiodic/cli.hpp"
#include "biperiodic/lucas.hpp"
#include "biperiodic/sequences.hpp"
#include "biperiodic/series.hpp"
#include "biperiodic/transforms.hpp"

namespace biperiodic::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kEgfTerms = 40;
constexpr double kEgfTolerance = 1e-8;
constexpr std::size_t kEgfSamples = 5;
constexpr std::uint64_t kEgfSeed = 20240611;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Scans lo..hi and stops at the first index whose residual renders nonzero.
/// `probe` returns an empty optional on success.
CheckReport scan(std::string suite, std::int64_t lo, std::int64_t hi,
                 const std::function<std::optional<std::string>(std::uint64_t)>& probe) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = std::move(suite);
    report.range = {lo, hi};
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (auto residual = probe(static_cast<std::uint64_t>(n))) {
            report.fail_at(n, std::move(*residual));
            break;
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

template <class M>
std::optional<std::string> matrix_failure(const M& residual) {
    if (is_zero_matrix(residual)) return std::nullopt;
    return render(residual);
}

std::optional<std::string> poly_failure(const LaurentPoly& residual) {
    if (residual.is_zero()) return std::nullopt;
    return residual.str();
}

/// Lowest t-degree at which a truncated check has a nonzero coefficient.
std::int32_t lowest_t_degree(const Mat2<TowerElem>& m) {
    std::int32_t lo = std::numeric_limits<std::int32_t>::max();
    for (const auto* e : {&m.e11, &m.e12, &m.e21, &m.e22}) {
        for (const auto* c : {&e->c1(), &e->cu(), &e->cv(), &e->cuv()}) {
            if (!c->is_zero()) lo = std::min(lo, c->t_range().first);
        }
    }
    return lo;
}

CheckReport truncated(std::string suite, IndexRange range, const std::function<TruncatedResidual()>& compute) {
    const auto start = Clock::now();
    CheckReport report;
    report.suite = std::move(suite);
    report.range = range;
    const auto r = compute();
    if (!r.passed()) report.fail_at(lowest_t_degree(r.checked), render(r.checked));
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<EgfSample> egf_samples() {
    std::mt19937_64 rng(kEgfSeed);
    std::uniform_int_distribution<std::int64_t> digit(1, 9);
    std::uniform_int_distribution<std::int64_t> tenths(1, 5);
    std::vector<EgfSample> out;
    for (std::size_t i = 0; i < kEgfSamples; ++i) {
        BigRational a(digit(rng), digit(rng));
        BigRational b(digit(rng), digit(rng));
        BigRational x(digit(rng), digit(rng));
        out.push_back({a, b, x, BigRational(tenths(rng), 10)});
    }
    return out;
}

std::string slug(TransformKind kind) { return std::string(kind_name(kind)); }

std::vector<CheckReport> transforms_suite(std::int64_t n) {
    std::vector<CheckReport> out;
    for (auto kind : kAllTransformKinds) {
        out.push_back(scan("transforms:recurrence:" + slug(kind), 1, n,
                           [kind](std::uint64_t i) { return matrix_failure(recurrence_residual(kind, i)); }));
    }
    out.push_back(scan("transforms:stepsum", 0, n, [](std::uint64_t i) { return matrix_failure(stepsum_residual(i)); }));
    out.push_back(scan("transforms:scaling", 0, n, [](std::uint64_t i) { return matrix_failure(scaling_residual(i)); }));
    out.push_back(scan("transforms:rising-collapse", 0, n,
                       [](std::uint64_t i) { return matrix_failure(rising_collapse_residual(i)); }));

    // Characteristic pair of w_n with the constant term negated.
    const TowerElem k = TowerElem::k();
    const LucasParams<TowerElem> negated{k * k + TowerElem(2) * k, -(k * k * k)};
    out.push_back(scan("errata:w-root-equation", 1, n, [&](std::uint64_t i) {
        return matrix_failure(recurrence_residual_with(TransformKind::k_binomial, i, negated));
    }));
    return out;
}

std::vector<CheckReport> negsum_suite(std::int64_t n) {
    std::vector<CheckReport> out;
    const auto order = static_cast<std::uint32_t>(n);
    out.push_back(truncated("negsum:infinite", {4 - n, 4}, [order] { return negsum_infinite_residual(order); }));
    out.push_back(scan("negsum:finite", 2, n, [](std::uint64_t i) {
        return matrix_failure(negsum_finite_residual(i, NegsumDenominator::abx2_plus_2, NegsumForm::corrected));
    }));
    const std::pair<NegsumDenominator, NegsumForm> probes[] = {
        {NegsumDenominator::abx2_plus_2, NegsumForm::literal},
        {NegsumDenominator::ab_plus_2, NegsumForm::literal},
        {NegsumDenominator::ab_plus_2, NegsumForm::corrected},
    };
    for (auto [reading, form] : probes) {
        const std::string name = std::string("errata:negsum-finite:") + (form == NegsumForm::literal ? "literal:" : "corrected:") +
                                 std::string(negsum_denominator_name(reading));
        out.push_back(scan(name, 2, n, [reading, form](std::uint64_t i) {
            return matrix_failure(negsum_finite_residual(i, reading, form));
        }));
    }
    return out;
}

std::vector<CheckReport> egf_suite() {
    const auto samples = egf_samples();
    return {egf_numeric_check(samples, kEgfTerms, kEgfTolerance)};
}

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"explicit", "det",  "cassini",    "sums",   "binet-F",
                                                "gf",       "transforms", "binet-T", "negsum", "egf"};
    return names;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
    if (requested.empty()) throw UsageError("no suites requested");
    std::vector<bool> wanted(suite_names().size(), false);
    for (const auto& name : requested) {
        if (name == "all") {
            std::fill(wanted.begin(), wanted.end(), true);
            continue;
        }
        const auto it = std::find(suite_names().begin(), suite_names().end(), name);
        if (it == suite_names().end()) throw UsageError("unknown suite '" + name + "'");
        wanted[static_cast<std::size_t>(it - suite_names().begin())] = true;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < wanted.size(); ++i) {
        if (wanted[i]) out.push_back(suite_names()[i]);
    }
    return out;
}

std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t max_n) {
    if (max_n < 4) throw UsageError("--max-n must be at least 4");
    const auto n = static_cast<std::int64_t>(max_n);
    if (suite == "explicit") {
        return {scan("explicit", 0, n, [](std::uint64_t i) { return matrix_failure(f_matrix(i) - f_matrix_explicit(i)); })};
    }
    if (suite == "det") return {scan("det", 0, n, [](std::uint64_t i) { return poly_failure(det_residual(i)); })};
    if (suite == "cassini") return {scan("cassini", 1, n, [](std::uint64_t i) { return poly_failure(cassini_residual(i)); })};
    if (suite == "sums") return {scan("sums", 1, n, [](std::uint64_t i) { return matrix_failure(sum_f_residual(i)); })};
    if (suite == "binet-F") {
        return {scan("binet-F", 0, n, [](std::uint64_t i) { return matrix_failure(binet_f_residual(i)); })};
    }
    if (suite == "gf") {
        std::vector<CheckReport> out;
        for (auto kind : {GfKind::f_ogf, GfKind::b_ogf, GfKind::w_ogf}) {
            const auto order = static_cast<std::uint32_t>(n);
            out.push_back(truncated("gf:" + std::string(gf_kind_name(kind)), {0, n},
                                    [kind, order] { return ogf_residual(kind, order); }));
        }
        return out;
    }
    if (suite == "transforms") return transforms_suite(n);
    if (suite == "binet-T") {
        std::vector<CheckReport> out;
        for (auto kind : kAllTransformKinds) {
            out.push_back(scan("binet-T:" + slug(kind), 0, n,
                               [kind](std::uint64_t i) { return matrix_failure(binet_residual(kind, i)); }));
        }
        return out;
    }
    if (suite == "negsum") return negsum_suite(n);
    if (suite == "egf") return egf_suite();
    throw UsageError("unknown suite '" + suite + "'");
}

std::vector<CheckReport> run_verify(const std::vector<std::string>& suites, std::uint64_t max_n, unsigned jobs) {
    if (max_n < 4) throw UsageError("--max-n must be at least 4");
    if (jobs == 0) throw UsageError("--jobs must be at least 1");
    std::vector<std::vector<CheckReport>> slots(suites.size());
    std::vector<std::exception_ptr> errors(suites.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suites.size(); i = next++) {
            try {
                slots[i] = run_suite(suites[i], max_n);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = std::min<std::size_t>(jobs, suites.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (auto& r : slots[i]) out.push_back(std::move(r));
    }
    return out;
}

bool is_errata(const CheckReport& report) { return report.suite.rfind("errata:", 0) == 0; }

std::string report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["range"] = {report.range.lo, report.range.hi};
    j["status"] = report.passed ? "pass" : "fail";
    j["first_failure"] = report.first_failure ? nlohmann::ordered_json(*report.first_failure) : nullptr;
    j["residual"] = report.residual ? nlohmann::ordered_json(*report.residual) : nullptr;
    j["elapsed_ms"] = std::round(report.elapsed_ms * 1000.0) / 1000.0;
    return j.dump();
}

std::string reports_text(const std::vector<CheckReport>& reports) {
    std::size_t width = 5;
    for (const auto& r : reports) width = std::max(width, r.suite.size());
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-*s  %-12s  %-6s  %-13s  %10s\n", static_cast<int>(width), "suite", "range",
                  "status", "first_failure", "ms");
    out << line;
    for (const auto& r : reports) {
        const std::string range = "[" + std::to_string(r.range.lo) + ", " + std::to_string(r.range.hi) + "]";
        const std::string first = r.first_failure ? std::to_string(*r.first_failure) : "-";
        std::snprintf(line, sizeof line, "%-*s  %-12s  %-6s  %-13s  %10s\n", static_cast<int>(width), r.suite.c_str(),
                      range.c_str(), r.passed ? "pass" : "fail", first.c_str(), fixed3(r.elapsed_ms).c_str());
        out << line;
    }
    bool header = false;
    for (const auto& r : reports) {
        if (r.passed || !r.residual) continue;
        if (!header) out << "\nresiduals at first failure:\n";
        header = true;
        out << "  " << r.suite << ": " << *r.residual << "\n";
    }
    const bool has_egf = std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.suite == "egf"; });
    const bool has_errata = std::any_of(reports.begin(), reports.end(), is_errata);
    if (!has_egf && !has_errata) return out.str();
    out << "\nnotes:\n";
    if (has_egf) out << "  egf: the coefficient of t^n/n! in the exponential identity is the binomial Binet form at n,\n"
           "       which binet-T:binomial checks exactly; the egf line only confirms the numeric packaging.\n";
    if (has_errata) out << "  errata:* lines record literal readings that do not hold and never change the exit code.\n";
    return out.str();
}

std::string errata_markdown(const std::vector<CheckReport>& reports, std::uint64_t max_n) {
    std::ostringstream out;
    out << "# Errata\n\nAdjudications from `verify --max-n " << max_n << "`.\n";
    auto describe = [](const std::string& suite) -> std::string {
        if (suite == "negsum:finite") {
            return "Finite sum of F_k t^{-k}, k <= n, with denominator 1 - (abx^2+2)t^2 + t^4 and last term "
                   "F_{n+2} t^{-(n-2)}.";
        }
        if (suite == "errata:negsum-finite:literal:abx^2+2") {
            return "Same sum with the literal last term F_{n+2} t^{-(n+2)} and denominator 1 - (abx^2+2)t^2 + t^4.";
        }
        if (suite == "errata:negsum-finite:literal:ab+2") {
            return "Same sum with the literal last term F_{n+2} t^{-(n+2)} and denominator 1 - (ab+2)t^2 + t^4.";
        }
        if (suite == "errata:negsum-finite:corrected:ab+2") {
            return "Same sum with last term F_{n+2} t^{-(n-2)} and denominator 1 - (ab+2)t^2 + t^4.";
        }
        if (suite == "errata:w-root-equation") {
            return "k-binomial transform w_n against the recurrence with roots of r^2 - (k^2+2k)r - k^3. "
                   "The pair that holds is (k^2+2k, k^3), i.e. w_{n+1} = (k^2+2k)w_n - k^3 w_{n-1}.";
        }
        return {};
    };
    bool any = false;
    for (const auto& r : reports) {
        const std::string text = describe(r.suite);
        if (text.empty()) continue;
        any = true;
        out << "\n## " << r.suite << "\n\n" << text << "\n\n";
        out << "- range: " << r.range.lo << ".." << r.range.hi << "\n";
        out << "- status: " << (r.passed ? "pass" : "fail") << "\n";
        if (r.first_failure) out << "- minimal failing index: " << *r.first_failure << "\n";
        if (r.residual) out << "- residual (left side minus right side, denominators cleared):\n\n```\n" << *r.residual << "\n```\n";
    }
    if (!any) out << "\nNo adjudicated suites were run (use --suites negsum,transforms).\n";
    return out.str();
}

int verify_exit_code(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed && !is_errata(r)) return kExitFailure;
    }
    return kExitOk;
}

}  // namespace biperiodic::cli
