#include "kschur/core.hpp"

#include <algorithm>
#include <set>

#include "kschur/error.hpp"

namespace kschur {

Core::Core(Partition shape, int p) : shape_(std::move(shape)), p_(p) {
    if (p < 1)
        throw input_error(errc::invalid_core, "core parameter p must be positive");
    if (!is_p_core(shape_, p))
        throw input_error(errc::invalid_core,
                          shape_.str() + " is not a " + std::to_string(p) + "-core");
}

int hook_length(const Partition& shape, const Cell& c) {
    if (!shape.contains(c))
        throw input_error(errc::out_of_shape, "cell (" + std::to_string(c.row) + "," +
                                                  std::to_string(c.col) + ") lies outside " +
                                                  shape.str());
    int arm = shape.row(c.row) - c.col;
    int leg = 0;
    while (shape.row(c.row + leg + 1) >= c.col)
        ++leg;
    return arm + leg + 1;
}

std::vector<std::vector<int>> hook_lengths(const Partition& shape) {
    const Partition conj = shape.conjugate();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(shape.length()));
    for (int r = 1; r <= shape.length(); ++r) {
        auto& row = out[static_cast<std::size_t>(r - 1)];
        row.resize(static_cast<std::size_t>(shape.row(r)));
        for (int c = 1; c <= shape.row(r); ++c)
            row[static_cast<std::size_t>(c - 1)] = (shape.row(r) - c) + (conj.row(c) - r) + 1;
    }
    return out;
}

bool is_p_core(const Partition& shape, int p) {
    for (const auto& row : hook_lengths(shape))
        if (std::find(row.begin(), row.end(), p) != row.end())
            return false;
    return true;
}

int degree(const Partition& shape, int p) {
    int n = 0;
    for (const auto& row : hook_lengths(shape))
        n += static_cast<int>(std::count_if(row.begin(), row.end(), [p](int h) { return h < p; }));
    return n;
}

int degree(const Core& core) { return degree(core.shape(), core.p()); }

int residue(const Cell& c, int p) {
    int r = (c.col - c.row) % p;
    return r < 0 ? r + p : r;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw input_error(errc::size_mismatch, "dominance compares partitions of equal size");
    int a = 0, b = 0;
    for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i) {
        a += lambda.row(i);
        b += mu.row(i);
        if (a > b)
            return false;
    }
    return true;
}

Partition bounded_from_core(const Partition& shape, int k) {
    if (!is_p_core(shape, k + 1))
        throw input_error(errc::invalid_core,
                          shape.str() + " is not a " + std::to_string(k + 1) + "-core");
    std::vector<int> rows;
    for (const auto& row : hook_lengths(shape))
        rows.push_back(static_cast<int>(
            std::count_if(row.begin(), row.end(), [k](int h) { return h <= k; })));
    return Partition(std::move(rows));
}

Partition bounded_from_core(const Core& core) { return bounded_from_core(core.shape(), core.k()); }

namespace {

// Number of cells with hook <= k in the bottom row of (length, above).
int short_hooks_in_bottom_row(int length, const Partition& above, int k) {
    const Partition conj = above.conjugate();
    int count = 0;
    for (int c = 1; c <= length; ++c) {
        int hook = (length - c) + conj.row(c) + 1;
        if (hook <= k)
            ++count;
    }
    return count;
}

}  // namespace

Core core_from_bounded(const Partition& lambda, int k) {
    if (k < 1)
        throw input_error(errc::bound_violation, "k must be positive");
    if (lambda.first() > k)
        throw input_error(errc::bound_violation,
                          lambda.str() + " has a part larger than k = " + std::to_string(k));
    Partition core;
    for (int r = lambda.length(); r >= 1; --r) {
        const int part = lambda.row(r);
        int length = std::max(part, core.first());
        // Hooks in a row strictly decrease left to right, so the first length
        // with exactly `part` short hooks places the row.
        const int limit = core.first() + k + part;
        while (short_hooks_in_bottom_row(length, core, k) != part) {
            if (++length > limit)
                throw anomaly(errc::invalid_core, "no row placement for part " +
                                                      std::to_string(part) + " of " + lambda.str());
        }
        core = core.with_bottom_row(length);
    }
    if (!is_p_core(core, k + 1))
        throw anomaly(errc::invalid_core,
                      "row placement of " + lambda.str() + " produced non-core " + core.str());
    return Core(std::move(core), k + 1);
}

namespace {

// Addable cells of residue r; empty if none.
Partition add_residue(const Partition& shape, int r, int p) {
    std::vector<int> rows(shape.vec());
    rows.push_back(0);
    bool added = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int row = static_cast<int>(i) + 1;
        int col = rows[i] + 1;
        bool addable = (i == 0) || rows[i - 1] >= col;
        if (addable && residue({row, col}, p) == r) {
            ++rows[i];
            added = true;
        }
    }
    return added ? Partition(std::move(rows)) : shape;
}

}  // namespace

std::vector<Core> enumerate_cores(int p, int d) {
    if (p < 2)
        throw input_error(errc::invalid_core, "enumerate_cores needs p >= 2");
    std::set<Partition, CanonicalOrder> level{Partition{}};
    for (int step = 0; step < d; ++step) {
        std::set<Partition, CanonicalOrder> next;
        for (const auto& shape : level)
            for (int r = 0; r < p; ++r) {
                Partition grown = add_residue(shape, r, p);
                if (grown.size() > shape.size())
                    next.insert(std::move(grown));
            }
        level = std::move(next);
    }
    std::vector<Core> out;
    out.reserve(level.size());
    for (const auto& shape : level)
        out.emplace_back(shape, p);
    return out;
}

}  // namespace kschur
