#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biperiodic/big_rational.hpp"
#include "biperiodic/report.hpp"

namespace biperiodic::cli {

/// Bad flags, kinds, suite names or preconditions. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { text, json };

struct Params {
    BigRational a;
    BigRational b;
    BigRational x;
};

// ---- seq / table ----

/// Kinds accepted by seq and table: q, F, A, b, w, r, f.
bool is_seq_kind(std::string_view kind);

/// Canonical rendering of one term. Symbolic without params, exact with
/// params, decimal in float mode (which needs params).
std::string render_term(std::string_view kind, std::uint64_t n, const std::optional<Params>& params, bool float_mode);

// ---- verify ----

/// Suite names in report order, without "all".
const std::vector<std::string>& suite_names();

/// Resolves "all" and removes duplicates, keeping suite order.
/// Throws UsageError on an unknown name or an empty list.
std::vector<std::string> expand_suites(const std::vector<std::string>& requested);

/// Reports of a single suite. Throws UsageError for max_n < 4.
std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t max_n);

/// Runs suites on up to `jobs` threads; the result is in suite order.
std::vector<CheckReport> run_verify(const std::vector<std::string>& suites, std::uint64_t max_n, unsigned jobs);

/// Adjudication lines for literal readings that fail. They report but never set the exit code.
bool is_errata(const CheckReport& report);

/// One JSON object, no trailing newline.
std::string report_json(const CheckReport& report);

/// Human table of the reports plus notes.
std::string reports_text(const std::vector<CheckReport>& reports);

/// Markdown written by --write-errata.
std::string errata_markdown(const std::vector<CheckReport>& reports, std::uint64_t max_n);

/// 0 when every non-errata report passed, 1 otherwise.
int verify_exit_code(const std::vector<CheckReport>& reports);

// ---- bench ----

struct BenchResult {
    std::uint64_t n;
    std::optional<std::uint64_t> modulus;
    std::string iterative_value;
    std::string fast_value;
    double iterative_ms;
    double fast_ms;

    bool agree() const { return iterative_value == fast_value; }
};

/// Throws UsageError for n = 0 or a nonprime modulus.
BenchResult run_bench(std::uint64_t n, const Params& params, std::optional<std::uint64_t> modulus);

// ---- entry point ----

/// Parses argv and dispatches. Never throws; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biperiodic::cli
