#pragma once

#include <span>
#include <vector>

#include "kschur/partition.hpp"
#include "kschur/tpoly.hpp"

namespace kschur {

using Word = std::vector<int>;

/// Sum of the counters c_i, where c_1 = 0 and c_i grows by one whenever i
/// sits to the right of i-1. Throws input_error(not_a_permutation).
int charge_permutation(std::span<const int> w);

/// Letter multiplicities (index 0 holds the count of letter 1).
std::vector<int> word_weight(std::span<const int> w);

/// Splits a word of partition content into charge subwords: each pass scans
/// right to left (wrapping around) marking 1, 2, ..., max, then removes the
/// marked letters. Throws input_error(weight_not_partition).
std::vector<Word> charge_subwords(std::span<const int> w);

/// Sum of the charges of the charge subwords.
int charge_word(std::span<const int> w);

/// Semistandard tableau in French convention: rows[0] is the bottom row.
/// Rows weakly increase left to right, columns strictly increase upward.
struct Ssyt {
    Partition shape;
    std::vector<std::vector<int>> rows;

    friend bool operator==(const Ssyt&, const Ssyt&) = default;
};

bool is_semistandard(const Ssyt& t);
std::vector<int> ssyt_weight(const Ssyt& t);

/// Rows read top to bottom, each left to right.
Word ssyt_reading_word(const Ssyt& t);

/// All SSYT of shape lambda and weight mu (a composition). Ordered by the
/// reading word of the bottom row upward, lexicographically.
std::vector<Ssyt> ssyt_enumerate(const Partition& lambda, std::span<const int> mu);

/// Kostka-Foulkes polynomial: sum of t^charge over SSYT(lambda, mu).
TPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

}  // namespace kschur
