#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kschur {

enum class errc {
    invalid_partition,
    out_of_shape,
    size_mismatch,
    invalid_core,
    bound_violation,
    parameter_mismatch,
    not_a_ribbon,
    weight_out_of_range,
    weight_not_partition,
    not_a_permutation,
    structure,
    // Anomalies: outcomes the construction says cannot happen.
    chain_not_unique,
    seed_missing,
    ambiguous_minimum,
    ribbon_overflow,
    charge_mismatch,
    negative_k_charge,
    triangularity,
};

std::string_view to_string(errc code) noexcept;

/// Bad input supplied by the caller (CLI exit code 1).
class input_error : public std::invalid_argument {
public:
    input_error(errc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// A combinatorial invariant of the construction failed to hold (CLI exit
/// code 3). These are never silently resolved.
class anomaly : public std::logic_error {
public:
    anomaly(errc code, const std::string& what)
        : std::logic_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace kschur
