#include "kschur/abc.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "kschur/error.hpp"

namespace kschur {

int Abc::letter_at(CounterCell c) const {
    if (c.row < 1 || c.row > num_rows())
        return 0;
    for (const AbcCell& cell : rows[static_cast<std::size_t>(c.row - 1)].cells)
        if (cell.col == c.col)
            return cell.letter;
    return 0;
}

int Abc::residue(CounterCell c) const noexcept {
    return kschur::residue(Cell{french_row(c.row), c.col}, k + 1);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void horizontal_strip_rec(const Partition& target, std::vector<int>& prefix,
                          std::vector<Partition>& out) {
    const int r = static_cast<int>(prefix.size()) + 1;
    if (r > target.length()) {
        out.emplace_back(prefix);
        return;
    }
    int hi = target.row(r);
    if (!prefix.empty())
        hi = std::min(hi, prefix.back());
    for (int v = hi; v >= target.row(r + 1); --v) {
        prefix.push_back(v);
        horizontal_strip_rec(target, prefix, out);
        prefix.pop_back();
    }
}

// Cores nu with target/nu a horizontal strip and deg(nu) = want.
std::vector<Core> strip_candidates(const Partition& target, int k, int want) {
    std::vector<Partition> shapes;
    std::vector<int> prefix;
    horizontal_strip_rec(target, prefix, shapes);
    std::vector<Core> out;
    for (auto& s : shapes)
        if (is_p_core(s, k + 1) && degree(s, k + 1) == want)
            out.emplace_back(std::move(s), k + 1);
    return out;
}

// Places the cells of `chain` as letter `letter` into `a`, whose bottom
// counter row is row `letter`.
void place_strip(Abc& a, const Chain& chain, int letter) {
    for (std::size_t j = 0; j < chain.covers.size(); ++j) {
        for (const Ribbon& rib : chain.covers[j].components) {
            if (!rib.horizontal())
                throw anomaly(errc::not_a_ribbon, "bottom strong strip produced a vertical ribbon");
            const int crow = letter - rib.head().row + 1;
            const int id = static_cast<int>(a.ribbons.size());
            a.ribbons.push_back({letter, crow, rib.tail().col, rib.head().col, static_cast<int>(j) + 1});
            auto& cells = a.rows[static_cast<std::size_t>(crow - 1)].cells;
            for (const Cell& c : rib.cells())
                cells.push_back({c.col, letter, id});
        }
    }
}

struct Enumerator {
    int k;
    std::span<const int> alpha;
    const std::optional<Partition>& inner;
    std::vector<Abc> out;

    void step(std::size_t i, const Partition& lambda, const Abc& partial) {
        if (i == alpha.size()) {
            if (inner && *inner != lambda)
                return;
            Abc done = partial;
            for (auto& row : done.rows)
                std::sort(row.cells.begin(), row.cells.end(),
                          [](const AbcCell& a, const AbcCell& b) { return a.col < b.col; });
            done.inner = lambda;
            out.push_back(std::move(done));
            return;
        }
        const int letter = static_cast<int>(i) + 1;
        const int covers = k - alpha[i];
        const Partition target = strip_target(lambda, k);
        const Core base(lambda, k + 1);
        for (const Core& nu : strip_candidates(target, k, degree(target, k + 1) - covers)) {
            auto chain = bottom_strong_chain(nu, base, k);
            if (!chain)
                continue;
            if (chain->length() != covers)
                throw anomaly(errc::structure, "bottom strong chain has the wrong length");
            Abc next = partial;
            next.rows.push_back({target.first(), {}});
            place_strip(next, *chain, letter);
            step(i + 1, nu.shape(), next);
        }
    }
};

}  // namespace

std::vector<Abc> abc_enumerate(int k, std::span<const int> alpha, const std::optional<Partition>& inner) {
    if (k < 1)
        throw input_error(errc::weight_out_of_range, "k must be positive");
    for (int a : alpha)
        if (a < 1 || a > k)
            throw input_error(errc::weight_out_of_range,
                              "k-weight entries must lie in [1, " + std::to_string(k) + "]");
    Abc seed;
    seed.k = k;
    seed.weight.assign(alpha.begin(), alpha.end());
    Enumerator e{k, alpha, inner, {}};
    e.step(0, Partition{}, seed);
    return std::move(e.out);
}

// ---------------------------------------------------------------------------
// Validation

Partition abc_shape_above(const Abc& a, int x) {
    std::vector<int> parts;
    for (int j = x; j >= 1; --j) {
        const AbcRow& row = a.rows[static_cast<std::size_t>(j - 1)];
        int count = row.length - static_cast<int>(row.cells.size());
        for (const AbcCell& c : row.cells)
            if (c.letter > x)
                ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

Core inner_shape(const Abc& a) { return Core(abc_shape_above(a, a.num_rows()), a.k + 1); }

namespace {

CheckResult fail(std::string msg) { return {false, std::move(msg)}; }

CheckResult check_rows(const Abc& a) {
    const int n = a.num_rows();
    for (int j = 1; j <= n; ++j) {
        const AbcRow& row = a.rows[static_cast<std::size_t>(j - 1)];
        const std::string where = "row " + std::to_string(j) + ": ";
        if (row.length < 1)
            return fail(where + "empty row");
        const int first = row.length - static_cast<int>(row.cells.size()) + 1;
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const AbcCell& cell = row.cells[c];
            if (cell.col != first + static_cast<int>(c))
                return fail(where + "filled cells must be a contiguous suffix");
            if (cell.letter < j || cell.letter > n)
                return fail(where + "letter " + std::to_string(cell.letter) + " out of range");
            if (c > 0 && cell.letter > row.cells[c - 1].letter)
                return fail(where + "letters must weakly decrease left to right");
            if (cell.ribbon < 0 || cell.ribbon >= static_cast<int>(a.ribbons.size()))
                return fail(where + "dangling ribbon id");
            const AbcRibbon& r = a.ribbons[static_cast<std::size_t>(cell.ribbon)];
            if (r.row != j || r.letter != cell.letter || cell.col < r.col_start || cell.col > r.col_end)
                return fail(where + "cell disagrees with its ribbon");
        }
    }
    for (std::size_t id = 0; id < a.ribbons.size(); ++id) {
        const AbcRibbon& r = a.ribbons[id];
        if (r.row < 1 || r.row > n || r.col_start > r.col_end)
            return fail("ribbon " + std::to_string(id) + " is malformed");
        for (int c = r.col_start; c <= r.col_end; ++c) {
            const auto& cells = a.rows[static_cast<std::size_t>(r.row - 1)].cells;
            auto it = std::find_if(cells.begin(), cells.end(),
                                   [c](const AbcCell& x) { return x.col == c; });
            if (it == cells.end() || it->ribbon != static_cast<int>(id))
                return fail("ribbon " + std::to_string(id) + " does not own its cells");
        }
    }
    return {};
}

using RibbonKey = std::tuple<int, int, int, int>;  // row, start, end, cover

}  // namespace

CheckResult abc_validate(const Abc& a) {
    if (a.k < 1)
        return fail("k must be positive");
    const int n = a.num_rows();
    if (static_cast<int>(a.weight.size()) != n)
        return fail("weight length differs from the number of rows");
    for (int w : a.weight)
        if (w < 1 || w > a.k)
            return fail("k-weight entry out of range");
    if (auto rows = check_rows(a); !rows)
        return rows;

    std::vector<Partition> lambda;
    try {
        for (int x = 0; x <= n; ++x) {
            lambda.push_back(abc_shape_above(a, x));
            if (!is_p_core(lambda.back(), a.k + 1))
                return fail("lambda^(" + std::to_string(x) + ") = " + lambda.back().str() +
                            " is not a core");
        }
    } catch (const input_error&) {
        return fail("some lambda^(x) is not a partition");
    }

    for (int i = 1; i <= n; ++i) {
        const Partition& prev = lambda[static_cast<std::size_t>(i - 1)];
        const Partition& cur = lambda[static_cast<std::size_t>(i)];
        const std::string where = "strip " + std::to_string(i) + ": ";
        if (a.rows[static_cast<std::size_t>(i - 1)].length != a.k + prev.first())
            return fail(where + "row length must be k + lambda^(i-1)_1");
        std::optional<Chain> chain;
        try {
            chain = bottom_strong_chain(Core(cur, a.k + 1), Core(prev, a.k + 1), a.k);
        } catch (const input_error& e) {
            return fail(where + e.what());
        }
        if (!chain)
            return fail(where + "not a bottom strong strip");
        if (chain->length() != a.k - a.weight[static_cast<std::size_t>(i - 1)])
            return fail(where + "strip has " + std::to_string(chain->length()) +
                        " covers, expected k - alpha_i");
        std::multiset<RibbonKey> expected, actual;
        for (std::size_t j = 0; j < chain->covers.size(); ++j)
            for (const Ribbon& r : chain->covers[j].components)
                expected.insert({i - r.head().row + 1, r.tail().col, r.head().col, static_cast<int>(j) + 1});
        for (const AbcRibbon& r : a.ribbons)
            if (r.letter == i)
                actual.insert({r.row, r.col_start, r.col_end, r.cover});
        if (expected != actual)
            return fail(where + "ribbons do not match the strong covers of the strip");
    }
    if (a.inner != lambda.back())
        return fail("stored inner shape " + a.inner.str() + " differs from " + lambda.back().str());
    return {};
}

// ---------------------------------------------------------------------------
// Extension, E-sets, reading words

ExtendedAbc extend(const Abc& a, ExtendOptions options) {
    if (!is_partition_sequence(a.weight))
        throw input_error(errc::weight_not_partition, "ext(A) needs a partition k-weight");
    ExtendedAbc e;
    e.base = a;
    e.rows = a.rows;
    e.ribbons = a.ribbons;
    const int n = a.num_rows();
    for (int i = 1; i <= n; ++i) {
        int s = 0, r = 0;
        for (const AbcRibbon& rib : a.ribbons)
            if (rib.letter == i && rib.row == i) {
                s += rib.size();
                ++r;
            }
        int first = a.weight[static_cast<std::size_t>(i - 1)] - s + r + 1;
        if (first < 1)
            throw anomaly(errc::ribbon_overflow,
                          "row " + std::to_string(i) + ": first appended ribbon would be empty");
        if (first > a.k && options.cap_overflow) {
            first = a.k;
            e.capped = true;
        }
        const int count = std::max(a.k, first);
        AbcRow& row = e.rows[static_cast<std::size_t>(i - 1)];
        const int start = row.length + 1;
        for (int c = start; c < start + count; ++c) {
            if (c == start || c >= start + first) {
                const int end = (c == start) ? start + first - 1 : c;
                e.ribbons.push_back({i, i, c, end, 0});
            }
            row.cells.push_back({c, i, static_cast<int>(e.ribbons.size()) - 1});
        }
        row.length += count;
        e.first_ribbon.push_back(first);
    }
    for (const AbcRibbon& rib : e.ribbons)
        if (rib.letter == rib.row)
            for (int c = rib.col_start + 1; c <= rib.col_end; ++c)
                e.marked.push_back({rib.row, c});
    std::sort(e.marked.begin(), e.marked.end());
    return e;
}

std::vector<ESet> e_sets(const ExtendedAbc& e) {
    const auto& mu = e.base.weight;
    std::vector<ESet> out;
    if (mu.empty())
        return out;
    const int k = e.base.k;
    const int rows = e.base.num_rows();
    std::set<CounterCell> free(e.marked.begin(), e.marked.end());
    for (int r = 1; r <= mu.front(); ++r) {
        const CounterCell seed{1, k + mu.front() + 2 - r};
        if (!free.count(seed)) {
            if (e.capped) {
                out.push_back({r, {}});
                continue;
            }
            throw anomaly(errc::seed_missing, "seed (1," + std::to_string(seed.col) +
                                                  ") is not an available marked cell");
        }
        ESet set{r, {seed}};
        free.erase(seed);
        for (int row = 2; row <= rows; ++row) {
            const int prev = set.cells.back().col;
            int best_key = k + 1, best_col = 0, ties = 0;
            for (auto it = free.lower_bound({row, 0}); it != free.end() && it->row == row; ++it) {
                const int key = ((prev - it->col + k) % (k + 1) + (k + 1)) % (k + 1);
                if (key < best_key) {
                    best_key = key;
                    best_col = it->col;
                    ties = 1;
                } else if (key == best_key) {
                    ++ties;
                }
            }
            if (ties == 0)
                break;
            if (ties > 1)
                throw anomaly(errc::ambiguous_minimum,
                              "E-set " + std::to_string(r) + ", row " + std::to_string(row) +
                                  ": minimum attained more than once");
            set.cells.push_back({row, best_col});
            free.erase({row, best_col});
        }
        out.push_back(std::move(set));
    }
    return out;
}

Word reading_word(const ESet& e, InsertionRule rule) {
    Word w;
    const auto& cells = e.cells;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int letter = static_cast<int>(i) + 1;
        int after = 0;  // letter to insert after; 0 = front
        for (std::size_t j = 0; j < i; ++j) {
            if (cells[j].col >= cells[i].col)
                continue;
            const int cand = static_cast<int>(j) + 1;
            if (rule == InsertionRule::largest_index ||
                after == 0 || cells[j].col >= cells[static_cast<std::size_t>(after - 1)].col)
                after = cand;
        }
        auto pos = after == 0 ? w.begin() : std::next(std::find(w.begin(), w.end(), after));
        w.insert(pos, letter);
    }
    return w;
}

int column_statistic(const ESet& e) {
    int d = 0, total = 0;
    for (std::size_t i = 1; i < e.cells.size(); ++i) {
        if (e.cells[i].col > e.cells[i - 1].col)
            ++d;
        total += d;
    }
    return total;
}

std::vector<int> word_charges(const ExtendedAbc& e, InsertionRule rule) {
    std::vector<int> out;
    for (const ESet& set : e_sets(e)) {
        if (set.cells.empty()) {
            out.push_back(0);
            continue;
        }
        const int ch = charge_permutation(reading_word(set, rule));
        const int cs = column_statistic(set);
        if (ch != cs)
            throw anomaly(errc::charge_mismatch, "E-set " + std::to_string(set.r) + ": word charge " +
                                                     std::to_string(ch) + " != column statistic " +
                                                     std::to_string(cs));
        out.push_back(ch);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Offsets and k-charge

Offsets offsets(const Abc& a) {
    Offsets out;
    for (std::size_t i = 0; i < a.ribbons.size(); ++i) {
        const AbcRibbon& r = a.ribbons[i];
        const int res = a.residue(r.head());
        for (const AbcRibbon& q : a.ribbons) {
            if (q.letter == r.letter && q.row > r.row && q.size() == r.size() &&
                a.residue(q.head()) == res) {
                out.ribbons.push_back(static_cast<int>(i));
                out.off += r.size() - 1;
                break;
            }
        }
    }
    return out;
}

int beta(const Abc& a) {
    int count = 0;
    for (const auto& row : hook_lengths(a.inner))
        count += static_cast<int>(std::count_if(row.begin(), row.end(), [&](int h) { return h > a.k; }));
    return count;
}

AbcStatistics statistics(const Abc& a, InsertionRule rule, ExtendOptions options) {
    AbcStatistics s;
    const ExtendedAbc e = extend(a, options);
    s.e_sets = e_sets(e);
    for (const ESet& set : s.e_sets)
        s.words.push_back(reading_word(set, rule));
    s.charge_words = word_charges(e, rule);
    for (int c : s.charge_words)
        s.charge += c;
    s.off = offsets(a).off;
    s.beta = beta(a);
    s.k_charge = s.charge - s.off - s.beta;
    int n = 0;
    for (int w : a.weight)
        n += w;
    if (a.k == n && (s.off != 0 || s.beta != 0))
        throw anomaly(errc::structure, "off and beta must vanish when k = |mu|");
    if (s.k_charge < 0)
        throw anomaly(errc::negative_k_charge, "k-charge " + std::to_string(s.k_charge) + " < 0");
    return s;
}

int k_charge(const Abc& a, InsertionRule rule, ExtendOptions options) {
    return statistics(a, rule, options).k_charge;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_rows(const std::vector<AbcRow>& rows, const std::vector<AbcRibbon>& ribbons) {
    std::string out;
    for (const AbcRow& row : rows) {
        std::string line;
        const int first = row.length - static_cast<int>(row.cells.size()) + 1;
        for (int c = 1; c <= row.length; ++c) {
            if (c > 1)
                line += ' ';
            if (c < first) {
                line += '.';
                continue;
            }
            const AbcCell& cell = row.cells[static_cast<std::size_t>(c - first)];
            line += std::to_string(cell.letter);
            if (ribbons[static_cast<std::size_t>(cell.ribbon)].size() > 1)
                line += '\'';
        }
        out += line + '\n';
    }
    return out;
}

}  // namespace

std::string render_text(const Abc& a) { return render_rows(a.rows, a.ribbons); }

std::string render_text(const ExtendedAbc& e) { return render_rows(e.rows, e.ribbons); }

std::string render_latex(const Abc& a) {
    std::string out = "\\tableau[sbY]{";
    for (int j = 1; j <= a.num_rows(); ++j) {
        if (j > 1)
            out += " \\cr ";
        const AbcRow& row = a.rows[static_cast<std::size_t>(j - 1)];
        const int first = row.length - static_cast<int>(row.cells.size()) + 1;
        for (int c = 1; c <= row.length; ++c) {
            if (c > 1)
                out += "&";
            if (c < first)
                continue;
            const AbcCell& cell = row.cells[static_cast<std::size_t>(c - first)];
            if (a.ribbons[static_cast<std::size_t>(cell.ribbon)].size() > 1)
                out += "{\\bar " + std::to_string(cell.letter) + "}";
            else
                out += std::to_string(cell.letter);
        }
    }
    return out + "}";
}

}  // namespace kschur
