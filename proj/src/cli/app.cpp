#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "biperiodic/cli.hpp"
#include "biperiodic/series.hpp"

namespace biperiodic::cli {

namespace {

struct Options {
    std::string kind;
    std::optional<std::uint64_t> n_pos;
    std::optional<std::uint64_t> n_flag;
    std::uint64_t max_n = 0;
    std::uint64_t table_max_n = 10;
    std::uint64_t gf_order = 8;
    std::uint64_t verify_max_n = 32;
    std::optional<std::string> a, b, x;
    std::string format = "text";
    std::string verify_format = "json";
    bool float_mode = false;
    std::vector<std::string> suites{"all"};
    std::optional<unsigned> jobs;
    std::optional<std::uint64_t> modulus;
    bool write_errata = false;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    throw UsageError("--format must be text or json");
}

std::optional<Params> parse_params(const Options& o) {
    const int given = int(o.a.has_value()) + int(o.b.has_value()) + int(o.x.has_value());
    if (given == 0) return std::nullopt;
    if (given != 3) throw UsageError("--a, --b and --x must be given together");
    try {
        return Params{BigRational::parse(*o.a), BigRational::parse(*o.b), BigRational::parse(*o.x)};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::uint64_t index_arg(const Options& o) {
    if (o.n_pos && o.n_flag && *o.n_pos != *o.n_flag) throw UsageError("conflicting indices");
    if (o.n_pos) return *o.n_pos;
    if (o.n_flag) return *o.n_flag;
    throw UsageError("an index is required (positional or --n)");
}

unsigned default_jobs() {
    if (const char* env = std::getenv("BIPERIODIC_JOBS"); env && *env) {
        try {
            std::size_t used = 0;
            const long v = std::stol(env, &used);
            if (used == std::string(env).size() && v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("BIPERIODIC_JOBS must be a positive integer");
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void add_params(CLI::App* cmd, Options& o) {
    cmd->add_option("--a", o.a, "parameter a (p or p/q)");
    cmd->add_option("--b", o.b, "parameter b (p or p/q)");
    cmd->add_option("--x", o.x, "parameter x (p or p/q)");
}

int do_seq(const Options& o, std::ostream& out) {
    const auto n = index_arg(o);
    const auto params = parse_params(o);
    const std::string value = render_term(o.kind, n, params, o.float_mode);
    if (parse_format(o.format) == Format::json) {
        nlohmann::ordered_json j{{"kind", o.kind}, {"n", n}, {"value", value}};
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
    }
    return kExitOk;
}

int do_table(const Options& o, std::ostream& out) {
    const auto params = parse_params(o);
    const auto format = parse_format(o.format);
    // Render everything first so a bad parameter never leaves partial output.
    std::vector<std::string> values;
    for (std::uint64_t n = 0; n <= o.max_n; ++n) values.push_back(render_term(o.kind, n, params, o.float_mode));
    for (std::uint64_t n = 0; n <= o.max_n; ++n) {
        if (format == Format::json) {
            out << nlohmann::ordered_json{{"kind", o.kind}, {"n", n}, {"value", values[n]}}.dump() << '\n';
        } else {
            out << n << '\t' << values[n] << '\n';
        }
    }
    return kExitOk;
}

int do_gf(const Options& o, std::ostream& out) {
    if (o.max_n < 4) throw UsageError("--max-n must be at least 4");
    const auto order = static_cast<std::uint32_t>(o.max_n);
    if (o.kind != "F" && o.kind != "b" && o.kind != "w" && o.kind != "negsum") {
        throw UsageError("gf kind must be F, b, w or negsum");
    }
    const bool negsum = o.kind == "negsum";
    const GfKind kind = o.kind == "F" ? GfKind::f_ogf : o.kind == "b" ? GfKind::b_ogf : GfKind::w_ogf;
    const GfSpec spec = negsum ? negsum_infinite_spec(order) : ogf_spec(kind, order);
    const bool passed = negsum ? negsum_infinite_residual(order).passed() : ogf_residual(kind, order).passed();
    std::vector<Mat2<TowerElem>> coeffs;
    if (!negsum) coeffs = series_expand(spec.numerator, spec.denominator, order);

    if (parse_format(o.format) == Format::json) {
        nlohmann::ordered_json j;
        j["kind"] = gf_kind_name(spec.kind);
        j["order"] = order;
        j["denominator"] = spec.denominator.str();
        j["numerator"] = render(spec.numerator);
        j["coefficients"] = nlohmann::json::array();
        for (const auto& c : coeffs) j["coefficients"].push_back(render(c));
        j["status"] = passed ? "pass" : "fail";
        out << j.dump() << '\n';
        return passed ? kExitOk : kExitFailure;
    }
    out << "kind:        " << gf_kind_name(spec.kind) << '\n';
    out << "denominator: " << spec.denominator.str() << '\n';
    out << "numerator:   " << render(spec.numerator) << '\n';
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << "t^" << i << ":\t" << render(coeffs[i]) << '\n';
    out << "check to order " << order << ": " << (passed ? "pass" : "fail") << '\n';
    return passed ? kExitOk : kExitFailure;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto format = parse_format(o.format);
    const auto suites = expand_suites(o.suites);
    const unsigned jobs = o.jobs ? *o.jobs : default_jobs();
    const auto reports = run_verify(suites, o.max_n, jobs);
    if (format == Format::json) {
        for (const auto& r : reports) out << report_json(r) << '\n';
        err << "note: errata:* lines adjudicate literal readings and do not affect the exit code\n";
        if (std::find(suites.begin(), suites.end(), "egf") != suites.end()) {
            err << "note: egf coefficients reduce to the binomial Binet form, checked exactly by binet-T:binomial\n";
        }
    } else {
        out << reports_text(reports);
    }
    if (o.write_errata) {
        std::ofstream file("ERRATA.md");
        if (!file) throw std::runtime_error("cannot write ERRATA.md");
        file << errata_markdown(reports, o.max_n);
        err << "wrote ERRATA.md\n";
    }
    return verify_exit_code(reports);
}

int do_bench(const Options& o, std::ostream& out) {
    const auto n = index_arg(o);
    const auto params = parse_params(o).value_or(Params{BigRational(1), BigRational(1), BigRational(1)});
    const auto r = run_bench(n, params, o.modulus);
    auto shorten = [](const std::string& s) {
        if (s.size() <= 48) return s;
        return s.substr(0, 20) + "..." + s.substr(s.size() - 20) + " (" + std::to_string(s.size()) + " chars)";
    };
    if (parse_format(o.format) == Format::json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["modulus"] = r.modulus ? nlohmann::ordered_json(*r.modulus) : nullptr;
        j["iterative_ms"] = r.iterative_ms;
        j["fast_ms"] = r.fast_ms;
        j["equal"] = r.agree();
        j["value"] = r.fast_value;
        out << j.dump() << '\n';
    } else {
        char line[160];
        std::snprintf(line, sizeof line, "%-10s %14s  %s\n", "method", "ms", "value");
        out << line;
        std::snprintf(line, sizeof line, "%-10s %14.3f  ", "iterative", r.iterative_ms);
        out << line << shorten(r.iterative_value) << '\n';
        std::snprintf(line, sizeof line, "%-10s %14.3f  ", "doubling", r.fast_ms);
        out << line << shorten(r.fast_value) << '\n';
        out << "n = " << n << (r.modulus ? ", mod " + std::to_string(*r.modulus) : std::string(", exact"))
            << ", equal: " << (r.agree() ? "yes" : "NO") << '\n';
    }
    return r.agree() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bi-periodic Fibonacci matrix polynomials: terms, tables, identity checks, benchmarks."};
    app.require_subcommand(1);

    auto* seq = app.add_subcommand("seq", "one term of q, F, A, b, w, r or f");
    seq->add_option("kind", o.kind, "q | F | A | b | w | r | f")->required();
    seq->add_option("index", o.n_pos, "index n");
    seq->add_option("--n", o.n_flag, "index");
    add_params(seq, o);
    seq->add_option("--format", o.format, "text | json");
    seq->add_flag("--float", o.float_mode, "decimal output (needs --a --b --x)");

    auto* table = app.add_subcommand("table", "terms 0..max-n, one per line");
    table->add_option("kind", o.kind, "q | F | A | b | w | r | f")->required();
    table->add_option("--max-n", o.table_max_n, "last index")->capture_default_str();
    add_params(table, o);
    table->add_option("--format", o.format, "text | json");
    table->add_flag("--float", o.float_mode, "decimal output (needs --a --b --x)");

    auto* gf = app.add_subcommand("gf", "closed form and expansion of a generating function");
    gf->add_option("kind", o.kind, "F | b | w | negsum")->required();
    gf->add_option("--max-n", o.gf_order, "truncation order (>= 4)")->capture_default_str();
    gf->add_option("--format", o.format, "text | json");

    auto* verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("--suites", o.suites, "comma-separated: explicit det cassini sums binet-F gf transforms binet-T negsum egf all")
        ->delimiter(',');
    verify->add_option("--max-n", o.verify_max_n, "largest index checked (>= 4)")->capture_default_str();
    verify->add_option("--format", o.verify_format, "json | text")->capture_default_str();
    verify->add_option("--jobs", o.jobs, "concurrent suites (default $BIPERIODIC_JOBS or core count)");
    verify->add_flag("--write-errata", o.write_errata, "write ERRATA.md in the working directory");

    auto* bench = app.add_subcommand("bench", "iterative vs doubling evaluation of q_n");
    bench->add_option("index", o.n_pos, "index n");
    bench->add_option("--n", o.n_flag, "index");
    add_params(bench, o);
    bench->add_option("--modulus", o.modulus, "prime modulus");
    bench->add_option("--format", o.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*seq) return do_seq(o, out);
        if (*table) {
            o.max_n = o.table_max_n;
            return do_table(o, out);
        }
        if (*gf) {
            o.max_n = o.gf_order;
            return do_gf(o, out);
        }
        if (*verify) {
            o.max_n = o.verify_max_n;
            o.format = o.verify_format;
            return do_verify(o, out, err);
        }
        if (*bench) return do_bench(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace biperiodic::cli
