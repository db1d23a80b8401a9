#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace biperiodic {

struct IndexRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Outcome of one identity suite. `passed` holds iff `first_failure` is empty.
struct CheckReport {
    std::string suite;
    IndexRange range;
    bool passed = true;
    std::optional<std::int64_t> first_failure;
    std::optional<std::string> residual;
    double elapsed_ms = 0.0;

    void fail_at(std::int64_t index, std::string rendering) {
        passed = false;
        first_failure = index;
        residual = std::move(rendering);
    }
};

}  // namespace biperiodic
