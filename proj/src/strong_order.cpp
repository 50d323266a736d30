#include "kschur/strong_order.hpp"

#include <algorithm>
#include <set>

#include "kschur/error.hpp"

namespace kschur {

namespace {

bool rook_connected(const std::vector<Cell>& cells) {
    if (cells.empty())
        return true;
    std::set<Cell> todo(cells.begin(), cells.end());
    std::vector<Cell> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                       Cell{c.row, c.col - 1}}) {
            if (auto it = todo.find(n); it != todo.end()) {
                todo.erase(it);
                stack.push_back(n);
            }
        }
    }
    return todo.empty();
}

bool has_square(const std::vector<Cell>& cells) {
    std::set<Cell> s(cells.begin(), cells.end());
    for (Cell c : cells)
        if (s.count({c.row + 1, c.col}) && s.count({c.row, c.col + 1}) &&
            s.count({c.row + 1, c.col + 1}))
            return true;
    return false;
}

}  // namespace

Ribbon::Ribbon(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (cells_.empty())
        throw input_error(errc::not_a_ribbon, "empty ribbon");
    if (!rook_connected(cells_))
        throw input_error(errc::not_a_ribbon, "ribbon cells are not rookwise connected");
    if (has_square(cells_))
        throw input_error(errc::not_a_ribbon, "skew component contains a 2x2 square");
}

Cell Ribbon::head() const noexcept {
    // Sorted by (row, col): the lowest row comes first, take its last cell.
    auto it = std::find_if(cells_.begin(), cells_.end(),
                           [&](const Cell& c) { return c.row != cells_.front().row; });
    return *std::prev(it);
}

Cell Ribbon::tail() const noexcept {
    auto it = std::find_if(cells_.begin(), cells_.end(),
                           [&](const Cell& c) { return c.row == cells_.back().row; });
    return *it;
}

bool Ribbon::translate_of(const Ribbon& other) const noexcept {
    if (other.size() != size())
        return false;
    const int dr = other.cells_.front().row - cells_.front().row;
    const int dc = other.cells_.front().col - cells_.front().col;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (other.cells_[i].row != cells_[i].row + dr || other.cells_[i].col != cells_[i].col + dc)
            return false;
    return true;
}

std::vector<Ribbon> ribbon_components(const Partition& outer, const Partition& inner) {
    std::set<Cell> todo;
    for (Cell c : skew_cells(outer, inner))
        todo.insert(c);
    std::vector<Ribbon> out;
    while (!todo.empty()) {
        std::vector<Cell> comp{*todo.begin()};
        todo.erase(todo.begin());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Cell c = comp[i];
            for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                           Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
                if (auto it = todo.find(n); it != todo.end()) {
                    todo.erase(it);
                    comp.push_back(n);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const Ribbon& a, const Ribbon& b) { return a.head() < b.head(); });
    return out;
}

bool is_strong_cover(const Core& rho, const Core& gamma) {
    if (rho.p() != gamma.p())
        throw input_error(errc::parameter_mismatch, "cores have different p");
    return gamma.shape().contains(rho.shape()) && degree(gamma) == degree(rho) + 1;
}

StrongCover make_cover(const Core& lower, const Core& upper) {
    if (!is_strong_cover(lower, upper))
        throw input_error(errc::structure,
                          lower.shape().str() + " is not covered by " + upper.shape().str());
    return {lower, upper, ribbon_components(upper.shape(), lower.shape())};
}

CheckResult validate_cover(const StrongCover& cover, int k) {
    if (cover.components.empty())
        return {false, "cover has no components"};
    const Ribbon& first = cover.components.front();
    const int res = residue(first.head(), k + 1);
    for (const Ribbon& r : cover.components) {
        if (!r.translate_of(first))
            return {false, "components are not translates of each other"};
        if (residue(r.head(), k + 1) != res)
            return {false, "head residues differ: " + std::to_string(res) + " vs " +
                               std::to_string(residue(r.head(), k + 1))};
    }
    return {};
}

namespace {

// Partitions between lower and bound, visited in canonical order.
void between_rec(const Partition& lower, const Partition& bound, std::vector<int>& prefix,
                 std::vector<Partition>& out) {
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > bound.length()) {
        out.emplace_back(prefix);
        return;
    }
    int hi = bound.row(i);
    if (!prefix.empty())
        hi = std::min(hi, prefix.back());
    for (int v = hi; v >= lower.row(i); --v) {
        prefix.push_back(v);
        between_rec(lower, bound, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Core> strong_covers_within(const Core& rho, const Partition& bound, int k) {
    const int p = k + 1;
    if (rho.p() != p)
        throw input_error(errc::parameter_mismatch, "core parameter does not match k");
    if (!bound.contains(rho.shape()))
        return {};
    std::vector<Partition> candidates;
    std::vector<int> prefix;
    between_rec(rho.shape(), bound, prefix, candidates);
    const int want = degree(rho) + 1;
    std::vector<Core> out;
    for (auto& shape : candidates) {
        if (shape == rho.shape() || !is_p_core(shape, p) || degree(shape, p) != want)
            continue;
        out.emplace_back(std::move(shape), p);
    }
    return out;
}

Partition strip_target(const Partition& base, int k) { return base.with_bottom_row(k + base.first()); }

namespace {

void chain_search(const Core& current, const Partition& target, int k, std::vector<Core>& path,
                  std::vector<std::vector<Core>>& found) {
    if (current.shape() == target) {
        found.push_back(path);
        return;
    }
    const int head = current.shape().first();
    for (Core& next : strong_covers_within(current, target, k)) {
        if (next.shape().first() <= head)
            continue;
        path.push_back(std::move(next));
        chain_search(path.back(), target, k, path, found);
        path.pop_back();
        if (found.size() > 1)
            return;
    }
}

}  // namespace

std::optional<Chain> bottom_strong_chain(const Core& nu, const Core& base, int k) {
    const int p = k + 1;
    if (nu.p() != p || base.p() != p)
        throw input_error(errc::parameter_mismatch, "cores must be (k+1)-cores");
    const Partition target = strip_target(base.shape(), k);
    if (!is_p_core(target, p))
        throw input_error(errc::invalid_core, "strip target " + target.str() + " is not a core");
    if (!target.contains(nu.shape()))
        throw input_error(errc::out_of_shape,
                          nu.shape().str() + " is not contained in " + target.str());
    // Horizontal strip: target_{r+1} <= nu_r for every row.
    for (int r = 1; r < target.length(); ++r)
        if (nu.shape().row(r) < target.row(r + 1))
            return std::nullopt;

    std::vector<Core> path{nu};
    std::vector<std::vector<Core>> found;
    chain_search(nu, target, k, path, found);
    if (found.empty())
        return std::nullopt;
    if (found.size() > 1)
        throw anomaly(errc::chain_not_unique, "two bottom strong chains from " +
                                                  nu.shape().str() + " to " + target.str());
    Chain chain;
    chain.cores = std::move(found.front());
    for (std::size_t i = 1; i < chain.cores.size(); ++i)
        chain.covers.push_back(make_cover(chain.cores[i - 1], chain.cores[i]));
    return chain;
}

}  // namespace kschur
