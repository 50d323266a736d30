#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kschur/charge.hpp"
#include "kschur/core.hpp"
#include "kschur/partition.hpp"
#include "kschur/strong_order.hpp"

namespace kschur {

/// Position in a counter-tableau: row 1 is the TOP row, column 1 leftmost.
/// Counter row j of an ABC with n rows is French row n - j + 1.
struct CounterCell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const CounterCell&, const CounterCell&) = default;
};

struct AbcCell {
    int col = 1;
    int letter = 1;
    int ribbon = 0;  ///< index into Abc::ribbons

    friend bool operator==(const AbcCell&, const AbcCell&) = default;
};

/// Columns 1..length; columns without an AbcCell are empty (inner shape).
/// Filled cells are sorted by column and form a suffix of the row.
struct AbcRow {
    int length = 0;
    std::vector<AbcCell> cells;

    friend bool operator==(const AbcRow&, const AbcRow&) = default;
};

/// A horizontal ribbon occupying columns [col_start, col_end] of one row.
struct AbcRibbon {
    int letter = 1;
    int row = 1;
    int col_start = 1;
    int col_end = 1;
    /// 1-based position of the strong cover that added it within its strip;
    /// 0 for cells appended by extend().
    int cover = 0;

    int size() const noexcept { return col_end - col_start + 1; }
    CounterCell head() const noexcept { return {row, col_end}; }
    CounterCell tail() const noexcept { return {row, col_start}; }

    friend bool operator==(const AbcRibbon&, const AbcRibbon&) = default;
};

/// Affine Bruhat counter-tableau of k-weight `weight`.
struct Abc {
    int k = 1;
    std::vector<int> weight;
    std::vector<AbcRow> rows;
    std::vector<AbcRibbon> ribbons;
    Partition inner;  ///< French shape of the empty cells

    int num_rows() const noexcept { return static_cast<int>(rows.size()); }
    /// 0 for empty cells and for cells outside the row.
    int letter_at(CounterCell c) const;
    int french_row(int counter_row) const noexcept { return num_rows() - counter_row + 1; }
    /// (col - french_row) mod (k+1), computed in the final diagram.
    int residue(CounterCell c) const noexcept;

    friend bool operator==(const Abc&, const Abc&) = default;
};

/// ABCs of k-weight alpha, optionally restricted to one inner shape.
/// Built strip by strip: for letter i, every core nu inside
/// (k + lambda_1, lambda) admitting a bottom strong chain with k - alpha_i
/// covers. Candidate cores are tried in canonical order at each step, which
/// fixes the output order. Throws input_error(weight_out_of_range).
std::vector<Abc> abc_enumerate(int k, std::span<const int> alpha,
                               const std::optional<Partition>& inner = std::nullopt);

/// Recomputes every lambda^(x) from the cells and re-derives each strip.
CheckResult abc_validate(const Abc& a);

/// lambda^(l(alpha)) as a (k+1)-core, recomputed from the cells.
Core inner_shape(const Abc& a);

/// lambda^(x): cells of rows 1..x holding letters > x or empty, as a French
/// partition (counter row x is its bottom row).
Partition abc_shape_above(const Abc& a, int x);

struct ExtendOptions {
    /// Cap the first appended ribbon at k cells when mu_i - s_i + r_i + 1
    /// exceeds k. Off by default: the uncapped ribbon keeps the k-Kostka
    /// matrices unitriangular. Exposed for comparison.
    bool cap_overflow = false;
};

/// ext(A): k (or more, see ExtendOptions) cells of letter i appended to row i,
/// the first mu_i - s_i + r_i + 1 of them forming one ribbon, plus V_A.
struct ExtendedAbc {
    Abc base;
    std::vector<AbcRow> rows;
    std::vector<AbcRibbon> ribbons;  ///< base ribbons, then appended ones
    std::vector<CounterCell> marked;  ///< V_A, sorted
    std::vector<int> first_ribbon;   ///< per row, size of the first appended ribbon
    bool capped = false;             ///< some row hit the cap
};

/// Throws input_error(weight_not_partition) and anomaly(ribbon_overflow)
/// when the first appended ribbon would be empty.
ExtendedAbc extend(const Abc& a, ExtendOptions options = {});

/// E_A^r: one marked cell per row, from row 1 down.
struct ESet {
    int r = 1;
    std::vector<CounterCell> cells;
};

/// Greedy extraction for r = 1..mu_1. Seeds at (1, k + mu_1 + 2 - r); row i
/// takes the free marked cell x minimising (c_{i-1} - x + k) mod (k+1).
/// anomaly(seed_missing) / anomaly(ambiguous_minimum) on failure.
std::vector<ESet> e_sets(const ExtendedAbc& e);

enum class InsertionRule {
    /// Insert i right of the j < i with the largest column c_j < c_i
    /// (ties to larger j). Reproduces the worked reading words.
    largest_column,
    /// Insert i right of the largest index j < i with c_j < c_i.
    largest_index,
};

/// Builds the permutation by inserting 1, 2, ... in turn; i goes to the front
/// when no earlier letter has a smaller column.
Word reading_word(const ESet& e, InsertionRule rule = InsertionRule::largest_column);

/// Sum of d_i over the E-set, d_1 = 0, d_i = d_{i-1} + [c_i > c_{i-1}].
int column_statistic(const ESet& e);

/// Charge of each reading word, cross-checked against column_statistic
/// (anomaly(charge_mismatch) on disagreement).
std::vector<int> word_charges(const ExtendedAbc& e,
                              InsertionRule rule = InsertionRule::largest_column);

struct Offsets {
    std::vector<int> ribbons;  ///< indices into Abc::ribbons
    int off = 0;
};

/// A ribbon is an offset when a strictly lower ribbon with the same letter and
/// size has a head of the same residue. off = sum of (size - 1).
Offsets offsets(const Abc& a);

/// Cells of the inner shape with hook length > k.
int beta(const Abc& a);

struct AbcStatistics {
    std::vector<ESet> e_sets;
    std::vector<Word> words;
    std::vector<int> charge_words;
    int charge = 0;
    int off = 0;
    int beta = 0;
    int k_charge = 0;
};

AbcStatistics statistics(const Abc& a, InsertionRule rule = InsertionRule::largest_column,
                         ExtendOptions options = {});

/// Sum of word charges - off - beta; anomaly(negative_k_charge) if < 0.
int k_charge(const Abc& a, InsertionRule rule = InsertionRule::largest_column,
             ExtendOptions options = {});

/// Rows top to bottom, one line each; '.' for empty cells, and a trailing '
/// on every cell of a ribbon of size > 1.
std::string render_text(const Abc& a);
std::string render_text(const ExtendedAbc& e);
/// \tableau[sbY]{...} body with \bar on multi-cell ribbons.
std::string render_latex(const Abc& a);

}  // namespace kschur
