#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kschur {

/// A cell of a Ferrers diagram in French coordinates: row 1 is the bottom
/// (longest) row, column 1 the leftmost column.
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so that equal shapes compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    /// Number of nonzero parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Sum of the parts.
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part in 1-based row `i`; zero beyond the length.
    int row(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first() const noexcept { return row(1); }

    bool contains(const Cell& c) const noexcept {
        return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
    }
    /// True when `other` fits inside this diagram.
    bool contains(const Partition& other) const noexcept;

    Partition conjugate() const;
    std::vector<Cell> cells() const;

    /// (head, this): prepend a new bottom row. `head` must be >= first().
    Partition with_bottom_row(int head) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic comparison of the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical ordering of partition lists: reverse-lexicographic, so (3)
/// precedes (2,1) precedes (1,1,1). Refines dominance.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

/// Cells of outer/inner. Throws if inner is not contained in outer.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

/// All partitions of n with parts at most `max_part`, canonical order.
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

/// All compositions of n with entries in [1, max_part], lexicographically
/// descending.
std::vector<std::vector<int>> compositions_of(int n, int max_part);

/// Parse "6,2,2,1"; "" and "0" are the empty partition.
Partition parse_partition(std::string_view text);

/// True iff the sequence is weakly decreasing with positive entries.
bool is_partition_sequence(std::span<const int> seq) noexcept;

}  // namespace kschur
