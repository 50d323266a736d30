#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/partition.hpp"

namespace kschur {

/// Rookwise-connected skew cells without a 2x2 square. Cells are kept sorted
/// by (row, col) in French coordinates.
class Ribbon {
public:
    /// Throws input_error(not_a_ribbon) if the cells are disconnected or
    /// contain a 2x2 square.
    explicit Ribbon(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int size() const noexcept { return static_cast<int>(cells_.size()); }
    /// Southeasternmost cell: lowest row, rightmost column within it.
    Cell head() const noexcept;
    /// Northwesternmost cell: highest row, leftmost column within it.
    Cell tail() const noexcept;
    bool horizontal() const noexcept { return head().row == tail().row; }

    /// True if `other` is this ribbon shifted by a fixed (drow, dcol).
    bool translate_of(const Ribbon& other) const noexcept;

    friend bool operator==(const Ribbon&, const Ribbon&) = default;

private:
    std::vector<Cell> cells_;
};

struct StrongCover {
    Core lower;
    Core upper;
    std::vector<Ribbon> components;
};

struct Chain {
    std::vector<Core> cores;
    std::vector<StrongCover> covers;

    int length() const noexcept { return static_cast<int>(covers.size()); }
};

struct CheckResult {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Connected components of outer/inner, ordered by head (row, then column).
/// Throws input_error(not_a_ribbon) when a component contains a 2x2 square.
std::vector<Ribbon> ribbon_components(const Partition& outer, const Partition& inner);

/// rho <. gamma in the strong order: containment and degree one higher.
bool is_strong_cover(const Core& rho, const Core& gamma);

/// Builds the cover record. Throws input_error(structure) if not a cover.
StrongCover make_cover(const Core& lower, const Core& upper);

/// Checks that the components are ribbons, mutual translates, and that
/// their heads share one residue mod k+1.
CheckResult validate_cover(const StrongCover& cover, int k);

/// (k+1)-cores gamma with rho < gamma <= bound covering rho, canonical order.
std::vector<Core> strong_covers_within(const Core& rho, const Partition& bound, int k);

/// (k + base_1, base): the shape a bottom strong strip on `base` fills.
Partition strip_target(const Partition& base, int k);

/// The unique saturated chain nu = nu^0 <. ... <. nu^m = strip_target(base)
/// with target/nu a horizontal strip and each nu^i gaining the rightmost cell
/// of its bottom row. Empty optional when target/nu is not a bottom strong
/// strip; anomaly(chain_not_unique) if two chains qualify.
std::optional<Chain> bottom_strong_chain(const Core& nu, const Core& base, int k);

}  // namespace kschur
