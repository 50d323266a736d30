#include "kschur/charge.hpp"

#include <algorithm>

#include "kschur/error.hpp"

namespace kschur {

int charge_permutation(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        const int letter = w[static_cast<std::size_t>(i)];
        if (letter < 1 || letter > n || pos[static_cast<std::size_t>(letter)] != -1)
            throw input_error(errc::not_a_permutation, "word is not a permutation of 1..n");
        pos[static_cast<std::size_t>(letter)] = i;
    }
    int counter = 0, total = 0;
    for (int i = 2; i <= n; ++i) {
        if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(i - 1)])
            ++counter;
        total += counter;
    }
    return total;
}

std::vector<int> word_weight(std::span<const int> w) {
    std::vector<int> weight;
    for (int letter : w) {
        if (letter < 1)
            throw input_error(errc::invalid_partition, "word letters must be positive");
        if (static_cast<std::size_t>(letter) > weight.size())
            weight.resize(static_cast<std::size_t>(letter), 0);
        ++weight[static_cast<std::size_t>(letter - 1)];
    }
    return weight;
}

std::vector<Word> charge_subwords(std::span<const int> w) {
    const auto weight = word_weight(w);
    if (!is_partition_sequence(weight))
        throw input_error(errc::weight_not_partition, "charge needs a word of partition content");

    Word rest(w.begin(), w.end());
    std::vector<Word> out;
    while (!rest.empty()) {
        const int n = static_cast<int>(rest.size());
        const int top = *std::max_element(rest.begin(), rest.end());
        std::vector<bool> marked(rest.size(), false);
        int at = n;  // scanning starts just past the right end
        for (int letter = 1; letter <= top; ++letter) {
            for (int step = 1; step <= n; ++step) {
                int j = ((at - step) % n + n) % n;
                if (rest[static_cast<std::size_t>(j)] == letter && !marked[static_cast<std::size_t>(j)]) {
                    marked[static_cast<std::size_t>(j)] = true;
                    at = j;
                    break;
                }
            }
        }
        Word sub, left;
        for (std::size_t j = 0; j < rest.size(); ++j)
            (marked[j] ? sub : left).push_back(rest[j]);
        out.push_back(std::move(sub));
        rest = std::move(left);
    }
    return out;
}

int charge_word(std::span<const int> w) {
    int total = 0;
    for (const Word& sub : charge_subwords(w))
        total += charge_permutation(sub);
    return total;
}

bool is_semistandard(const Ssyt& t) {
    if (static_cast<int>(t.rows.size()) != t.shape.length())
        return false;
    for (int r = 0; r < t.shape.length(); ++r) {
        const auto& row = t.rows[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != t.shape.row(r + 1))
            return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1)
                return false;
            if (c > 0 && row[c] < row[c - 1])
                return false;
            if (r > 0 && row[c] <= t.rows[static_cast<std::size_t>(r - 1)][c])
                return false;
        }
    }
    return true;
}

std::vector<int> ssyt_weight(const Ssyt& t) {
    Word all;
    for (const auto& row : t.rows)
        all.insert(all.end(), row.begin(), row.end());
    return word_weight(all);
}

Word ssyt_reading_word(const Ssyt& t) {
    Word w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace {

struct SsytSearch {
    const Partition& shape;
    std::vector<int> remaining;
    std::vector<std::vector<int>> rows;
    std::vector<Ssyt> out;

    void fill(int r, int c) {
        if (r > shape.length()) {
            out.push_back({shape, rows});
            return;
        }
        if (c > shape.row(r)) {
            fill(r + 1, 1);
            return;
        }
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        int lo = c > 1 ? row[static_cast<std::size_t>(c - 2)] : 1;
        if (r > 1)
            lo = std::max(lo, rows[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)] + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            auto& left = remaining[static_cast<std::size_t>(v - 1)];
            if (left == 0)
                continue;
            --left;
            row[static_cast<std::size_t>(c - 1)] = v;
            fill(r, c + 1);
            ++left;
        }
    }
};

}  // namespace

std::vector<Ssyt> ssyt_enumerate(const Partition& lambda, std::span<const int> mu) {
    int total = 0;
    for (int m : mu) {
        if (m < 0)
            throw input_error(errc::invalid_partition, "weight entries must be non-negative");
        total += m;
    }
    if (total != lambda.size())
        throw input_error(errc::size_mismatch, "|lambda| != |mu|");
    SsytSearch search{lambda, std::vector<int>(mu.begin(), mu.end()), {}, {}};
    for (int r = 1; r <= lambda.length(); ++r)
        search.rows.emplace_back(static_cast<std::size_t>(lambda.row(r)), 0);
    search.fill(1, 1);
    return std::move(search.out);
}

TPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw input_error(errc::size_mismatch, "|lambda| != |mu|");
    TPoly out;
    for (const Ssyt& t : ssyt_enumerate(lambda, mu.parts()))
        out += TPoly::monomial(1, charge_word(ssyt_reading_word(t)));
    return out;
}

}  // namespace kschur
