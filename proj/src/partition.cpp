#include "kschur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "kschur/error.hpp"

namespace kschur {

namespace {

void strip_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

}  // namespace

bool is_partition_sequence(std::span<const int> seq) noexcept {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 1)
            return false;
        if (i > 0 && seq[i] > seq[i - 1])
            return false;
    }
    return true;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    strip_trailing_zeros(parts_);
    if (!is_partition_sequence(parts_))
        throw input_error(errc::invalid_partition,
                          "not a weakly decreasing sequence of positive integers");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length())
        return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.row(i) > row(i))
            return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(first()), 0);
    for (int part : parts_)
        for (int c = 0; c < part; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= row(r); ++c)
            out.push_back({r, c});
    return out;
}

Partition Partition::with_bottom_row(int head) const {
    std::vector<int> v;
    v.reserve(parts_.size() + 1);
    v.push_back(head);
    v.insert(v.end(), parts_.begin(), parts_.end());
    return Partition(std::move(v));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner))
        throw input_error(errc::out_of_shape,
                          inner.str() + " is not contained in " + outer.str());
    std::vector<Cell> out;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c)
            out.push_back({r, c});
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void compositions_rec(int remaining, int max_part, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        compositions_rec(remaining - part, max_part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    partitions_rec(n, std::max(max_part, 0), prefix, out);
    return out;
}

std::vector<std::vector<int>> compositions_of(int n, int max_part) {
    std::vector<std::vector<int>> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    compositions_rec(n, std::max(max_part, 0), prefix, out);
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '[' || s.front() == '('))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ']' || s.back() == ')'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return {};
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw input_error(errc::invalid_partition,
                              "cannot parse partition entry '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (parts.size() == 1 && parts[0] == 0)
        return {};
    return Partition(std::move(parts));
}

}  // namespace kschur
