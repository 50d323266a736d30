#pragma once

#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

/// A p-core: a partition none of whose cells has hook length p.
/// Throughout the library p = k + 1.
class Core {
public:
    /// Throws input_error(invalid_core) if `shape` is not a p-core.
    Core(Partition shape, int p);

    const Partition& shape() const noexcept { return shape_; }
    int p() const noexcept { return p_; }
    int k() const noexcept { return p_ - 1; }

    friend bool operator==(const Core&, const Core&) = default;

private:
    Partition shape_;
    int p_;
};

/// arm + leg + 1. Throws input_error(out_of_shape) if `c` is outside `shape`.
int hook_length(const Partition& shape, const Cell& c);

/// Hook lengths indexed [row-1][col-1].
std::vector<std::vector<int>> hook_lengths(const Partition& shape);

bool is_p_core(const Partition& shape, int p);

/// Number of cells whose hook length is smaller than p.
int degree(const Partition& shape, int p);
int degree(const Core& core);

/// (col - row) mod p, in [0, p).
int residue(const Cell& c, int p);

/// Dominance order. Throws input_error(size_mismatch) on unequal sizes.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// Inverse of the bounded-partition/core bijection: row i of the result
/// counts the cells in row i of `core` with hook length at most k.
Partition bounded_from_core(const Core& core);
Partition bounded_from_core(const Partition& shape, int k);

/// The unique (k+1)-core whose bounded partition is `lambda`. Rows are placed
/// from the top down, each slid right just far enough for its last
/// lambda_i cells to be the only ones with hook <= k.
Core core_from_bounded(const Partition& lambda, int k);

/// All p-cores of degree d in canonical order. Generated by repeatedly adding
/// every addable cell of a single residue, which raises the degree by one.
std::vector<Core> enumerate_cores(int p, int d);

}  // namespace kschur
