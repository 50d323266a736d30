#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kschur/abc.hpp"

namespace kschur {

enum class Suite {
    paper_examples,
    classical,
    triangularity,
    structure,
    charge_consistency,
    basis,
    all,
};

std::string_view to_string(Suite s) noexcept;
Suite parse_suite(std::string_view name);

struct VerifyOptions {
    int max_n = 6;
    int k_min = 2;
    int k_max = 4;
    unsigned threads = 1;
    InsertionRule rule = InsertionRule::largest_column;
};

/// "a..b" or a single integer. Throws input_error(bound_violation).
std::pair<int, int> parse_k_range(std::string_view text);

struct CheckOutcome {
    std::string suite;
    std::string name;
    bool passed = true;
    bool anomalous = false;  ///< the check raised a kschur::anomaly
    std::string detail;      ///< counterexample on failure
};

struct VerifyReport {
    std::vector<CheckOutcome> checks;

    bool passed() const noexcept;
    bool anomalous() const noexcept;
    int failures() const noexcept;
};

/// Runs one suite (or all of them). Exceptions raised while checking are
/// recorded as failed outcomes rather than propagated.
VerifyReport run_suite(Suite suite, const VerifyOptions& options = {});

}  // namespace kschur
