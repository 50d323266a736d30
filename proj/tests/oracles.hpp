#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;  // French rows, bottom first

inline Shape trim(Shape s) {
    while (!s.empty() && s.back() == 0)
        s.pop_back();
    return s;
}

inline int at(const Shape& s, int r) { return r >= 1 && r <= static_cast<int>(s.size()) ? s[r - 1] : 0; }

inline std::set<std::pair<int, int>> cell_set(const Shape& s) {
    std::set<std::pair<int, int>> out;
    for (int r = 1; r <= static_cast<int>(s.size()); ++r)
        for (int c = 1; c <= s[r - 1]; ++c)
            out.insert({r, c});
    return out;
}

/// Hook length by walking right and up through the cell set.
inline int hook(const Shape& s, int r, int c) {
    const auto cells = cell_set(s);
    int h = 1;
    for (int x = c + 1; cells.count({r, x}); ++x)
        ++h;
    for (int y = r + 1; cells.count({y, c}); ++y)
        ++h;
    return h;
}

inline bool is_core(const Shape& s, int p) {
    for (auto [r, c] : cell_set(s))
        if (hook(s, r, c) == p)
            return false;
    return true;
}

inline int degree(const Shape& s, int p) {
    int d = 0;
    for (auto [r, c] : cell_set(s))
        d += hook(s, r, c) < p;
    return d;
}

inline Shape bounded(const Shape& core, int k) {
    Shape out;
    for (int r = 1; r <= static_cast<int>(core.size()); ++r) {
        int n = 0;
        for (int c = 1; c <= core[r - 1]; ++c)
            n += hook(core, r, c) <= k;
        out.push_back(n);
    }
    return trim(out);
}

inline bool contains(const Shape& outer, const Shape& inner) {
    for (int r = 1; r <= static_cast<int>(inner.size()); ++r)
        if (at(outer, r) < inner[r - 1])
            return false;
    return true;
}

/// Every partition lying between lower and upper (inclusive).
inline std::vector<Shape> between(const Shape& lower, const Shape& upper) {
    std::vector<Shape> out;
    Shape cur;
    std::function<void(int)> rec = [&](int r) {
        if (r > static_cast<int>(upper.size())) {
            out.push_back(trim(cur));
            return;
        }
        int hi = upper[r - 1];
        if (!cur.empty())
            hi = std::min(hi, cur.back());
        for (int v = at(lower, r); v <= hi; ++v) {
            cur.push_back(v);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

inline std::vector<Shape> partitions(int n, int max_part) {
    std::vector<Shape> out;
    Shape cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

inline bool dominated(const Shape& a, const Shape& b) {  // a <= b
    int sa = 0, sb = 0;
    for (int i = 1; i <= static_cast<int>(std::max(a.size(), b.size())); ++i) {
        sa += at(a, i);
        sb += at(b, i);
        if (sa > sb)
            return false;
    }
    return sa == sb;
}

/// Kostka number via Gelfand-Tsetlin patterns with top row lambda and row
/// sums fixed by mu.
inline long long kostka_number(const Shape& lambda, const Shape& mu) {
    const int n = std::max<int>(static_cast<int>(mu.size()), static_cast<int>(lambda.size()));
    std::vector<int> top(n, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        top[i] = lambda[i];
    std::vector<int> sums(n + 1, 0);  // sums[m] = mu_1 + ... + mu_m
    for (int m = 1; m <= n; ++m)
        sums[m] = sums[m - 1] + at(mu, m);
    if (std::accumulate(top.begin(), top.end(), 0) != sums[n])
        return 0;
    // Rows of length n-1, n-2, ..., 1 interlacing the row above.
    std::function<long long(const std::vector<int>&)> down = [&](const std::vector<int>& row) -> long long {
        const int len = static_cast<int>(row.size());
        if (len == 1)
            return row[0] == sums[1] ? 1 : 0;
        std::vector<int> next(len - 1);
        long long total = 0;
        std::function<void(int, int)> pick = [&](int i, int sum) {
            if (i == len - 1) {
                if (sum == sums[len - 1])
                    total += down(next);
                return;
            }
            for (int v = row[i + 1]; v <= row[i]; ++v) {
                next[i] = v;
                pick(i + 1, sum + v);
            }
        };
        pick(0, 0);
        return total;
    };
    return down(top);
}

/// Coefficient of m_nu in h_mu: nonnegative integer matrices with row sums
/// mu and column sums nu.
inline long long h_in_m(const Shape& mu, const Shape& nu) {
    std::vector<int> cols(nu.begin(), nu.end());
    std::function<long long(std::size_t)> rows = [&](std::size_t i) -> long long {
        if (i == mu.size())
            return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
        long long total = 0;
        std::function<void(std::size_t, int)> fill = [&](std::size_t j, int left) {
            if (j == cols.size()) {
                if (left == 0)
                    total += rows(i + 1);
                return;
            }
            for (int v = 0; v <= std::min(left, cols[j]); ++v) {
                cols[j] -= v;
                fill(j + 1, left - v);
                cols[j] += v;
            }
        };
        fill(0, mu[i]);
        return total;
    };
    return rows(0);
}

/// Charge of a permutation: 1 has index 0, i+1 gains one over i when it sits
/// to the right of i.
inline int charge_perm(const std::vector<int>& w) {
    std::vector<int> pos(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    int idx = 0, total = 0;
    for (std::size_t v = 2; v <= w.size(); ++v) {
        if (pos[v] > pos[v - 1])
            ++idx;
        total += idx;
    }
    return total;
}

/// Charge of a word with partition content, subword by subword.
inline int charge_word(std::vector<int> w) {
    int total = 0;
    while (!w.empty()) {
        const int top = *std::max_element(w.begin(), w.end());
        std::vector<bool> used(w.size(), false);
        std::vector<int> picked;  // positions of 1, 2, ...
        int start = static_cast<int>(w.size()) - 1;
        for (int letter = 1; letter <= top; ++letter) {
            int found = -1;
            for (int step = 0; step < static_cast<int>(w.size()); ++step) {
                const int i = ((start - step) % static_cast<int>(w.size()) + static_cast<int>(w.size())) %
                              static_cast<int>(w.size());
                if (!used[i] && w[i] == letter) {
                    found = i;
                    break;
                }
            }
            if (found < 0)
                throw std::logic_error("word content is not a partition");
            used[found] = true;
            picked.push_back(found);
            start = found;
        }
        std::vector<int> sub;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (used[i])
                sub.push_back(w[i]);
        total += charge_perm(sub);
        std::vector<int> rest;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!used[i])
                rest.push_back(w[i]);
        w = rest;
    }
    return total;
}

/// Kostka-Foulkes polynomial by listing every filling of lambda with content
/// mu and keeping the semistandard ones. Coefficients by ascending power.
inline std::vector<long long> kostka_foulkes(const Shape& lambda, const Shape& mu) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < mu.size(); ++i)
        letters.insert(letters.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i + 1));
    std::vector<long long> poly;
    std::sort(letters.begin(), letters.end());
    do {
        // Fill rows bottom first, left to right.
        std::vector<std::vector<int>> t;
        std::size_t at_ = 0;
        for (int len : lambda) {
            t.emplace_back(letters.begin() + static_cast<long>(at_), letters.begin() + static_cast<long>(at_ + len));
            at_ += static_cast<std::size_t>(len);
        }
        bool ok = true;
        for (std::size_t r = 0; r < t.size() && ok; ++r)
            for (std::size_t c = 0; c < t[r].size() && ok; ++c) {
                if (c > 0 && t[r][c - 1] > t[r][c])
                    ok = false;
                if (r > 0 && t[r - 1][c] >= t[r][c])
                    ok = false;
            }
        if (!ok)
            continue;
        std::vector<int> word;  // top row first
        for (auto r = t.rbegin(); r != t.rend(); ++r)
            word.insert(word.end(), r->begin(), r->end());
        const int ch = charge_word(word);
        if (static_cast<int>(poly.size()) <= ch)
            poly.resize(static_cast<std::size_t>(ch) + 1, 0);
        ++poly[static_cast<std::size_t>(ch)];
    } while (std::next_permutation(letters.begin(), letters.end()));
    return poly;
}

}  // namespace oracle
