#include "kschur/error.hpp"

namespace kschur {

std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_partition: return "invalid-partition";
    case errc::out_of_shape: return "out-of-shape";
    case errc::size_mismatch: return "size-mismatch";
    case errc::invalid_core: return "invalid-core";
    case errc::bound_violation: return "bound-violation";
    case errc::parameter_mismatch: return "parameter-mismatch";
    case errc::not_a_ribbon: return "not-a-ribbon";
    case errc::weight_out_of_range: return "weight-out-of-range";
    case errc::weight_not_partition: return "weight-not-partition";
    case errc::not_a_permutation: return "not-a-permutation";
    case errc::structure: return "structure";
    case errc::chain_not_unique: return "chain-not-unique";
    case errc::seed_missing: return "seed-missing";
    case errc::ambiguous_minimum: return "ambiguous-minimum";
    case errc::ribbon_overflow: return "ribbon-overflow";
    case errc::charge_mismatch: return "charge-mismatch";
    case errc::negative_k_charge: return "negative-k-charge";
    case errc::triangularity: return "triangularity";
    }
    return "unknown";
}

}  // namespace kschur
