#include <doctest.h>

#include <algorithm>
#include <map>

#include "kschur/abc.hpp"
#include "kschur/error.hpp"
#include "reference_abc.hpp"

using namespace kschur;

namespace {

std::string lines(std::initializer_list<const char*> rows) {
    std::string s;
    for (const char* r : rows)
        s += std::string(r) + '\n';
    return s;
}

const Abc& find(const std::vector<Abc>& all, const std::string& picture) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Abc& a) { return render_text(a) == picture; });
    REQUIRE_MESSAGE(it != all.end(), picture);
    return *it;
}

std::vector<CounterCell> cc(std::initializer_list<std::pair<int, int>> list) {
    std::vector<CounterCell> out;
    for (auto [r, c] : list)
        out.push_back({r, c});
    return out;
}

}  // namespace

TEST_CASE("5-weight (3,3,3,1): extension, marked cells, E-sets and words") {
    const auto all = abc_enumerate(5, std::vector{3, 3, 3, 1});
    const Abc& a = find(all, lines({". 4 2 1 1", ". . 4 3 2' 2' 2' 2", ". . . 4' 4' 4 3' 3' 3",
                                    ". . . . . . 4 4 4' 4' 4"}));
    CHECK(a.inner == Partition{6, 3, 2, 1});
    CHECK(abc_validate(a).ok);
    CHECK(abc_shape_above(a, 4) == a.inner);
    CHECK(inner_shape(a).shape() == a.inner);

    const ExtendedAbc e = extend(a);
    CHECK(render_text(e) == lines({". 4 2 1 1 1' 1' 1' 1' 1", ". . 4 3 2' 2' 2' 2 2' 2' 2 2 2",
                                   ". . . 4' 4' 4 3' 3' 3 3' 3' 3' 3 3", ". . . . . . 4 4 4' 4' 4 4 4 4 4 4"}));
    CHECK(e.marked == cc({{1, 7}, {1, 8}, {1, 9}, {2, 6}, {2, 7}, {2, 10}, {3, 8}, {3, 11}, {3, 12}, {4, 10}}));
    CHECK_FALSE(e.capped);

    const auto es = e_sets(e);
    REQUIRE(es.size() == 3);
    CHECK(es[0].cells == cc({{1, 9}, {2, 7}, {3, 12}, {4, 10}}));
    CHECK(es[1].cells == cc({{1, 8}, {2, 6}, {3, 11}}));
    CHECK(es[2].cells == cc({{1, 7}, {2, 10}, {3, 8}}));

    CHECK(reading_word(es[0]) == Word{2, 1, 4, 3});
    CHECK(reading_word(es[1]) == Word{2, 1, 3});
    CHECK(reading_word(es[2]) == Word{1, 3, 2});
    CHECK(reading_word(es[0], InsertionRule::largest_index) == Word{2, 4, 3, 1});
    CHECK(column_statistic(es[0]) == 2);

    const AbcStatistics s = statistics(a);
    CHECK(s.charge_words == std::vector<int>{2, 1, 2});
    CHECK(s.charge == 5);
    CHECK(s.off == 1);
    CHECK(s.beta == 2);
    CHECK(s.k_charge == 2);
}

TEST_CASE("3-weight (1^7): the standard reading word") {
    const auto all = abc_enumerate(3, std::vector{1, 1, 1, 1, 1, 1, 1});
    const Abc& a = find(all, lines({"2 1 1", "5 3 2 2", ". 4 3' 3' 3", ". 6 5 4 4", ". 7' 7' 5' 5' 5", ". . . 6 6' 6'",
                                    ". . . 7' 7' 7"}));
    CHECK(a.inner == Partition{3, 3, 1, 1, 1});
    const ExtendedAbc e = extend(a);
    CHECK(e.marked == cc({{1, 5}, {2, 6}, {3, 4}, {4, 7}, {5, 5}, {6, 6}, {7, 5}}));
    const auto es = e_sets(e);
    REQUIRE(es.size() == 1);
    CHECK(reading_word(es[0]) == Word{3, 7, 5, 6, 1, 2, 4});
    CHECK(reading_word(es[0], InsertionRule::largest_index) == Word{3, 7, 5, 6, 4, 1, 2});
    const AbcStatistics s = statistics(a);
    CHECK(s.charge == 12);
    CHECK(s.off == 1);
    CHECK(s.beta == 2);
    CHECK(s.k_charge == 9);
}

TEST_CASE("3-weight (1^5): one offset") {
    const auto all = abc_enumerate(3, std::vector{1, 1, 1, 1, 1});
    const Abc& a = find(all, lines({"3 1 1", ". 2 2' 2'", ". 4 3 3", ". 5' 5' 4 4", ". . . 5 5' 5'"}));
    const Offsets off = offsets(a);
    CHECK(off.off == 1);
    std::vector<AbcRibbon> long_offsets;
    for (int i : off.ribbons)
        if (a.ribbons[static_cast<std::size_t>(i)].size() > 1)
            long_offsets.push_back(a.ribbons[static_cast<std::size_t>(i)]);
    REQUIRE(long_offsets.size() == 1);
    const AbcRibbon& r = long_offsets[0];
    CHECK(r.letter == 5);
    CHECK(r.row == 4);
    CHECK(r.size() == 2);
    CHECK(beta(a) == 1);
    const auto es = e_sets(extend(a));
    CHECK(es[0].cells == cc({{1, 5}, {2, 4}, {3, 6}, {4, 7}, {5, 6}}));
    CHECK(reading_word(es[0]) == Word{2, 1, 5, 3, 4});
    CHECK(k_charge(a) == 3);
}

TEST_CASE("other displayed ABCs are enumerated") {
    const auto a331 = abc_enumerate(5, std::vector{3, 3, 1});
    CHECK(find(a331, lines({"3 3 2 1 1", ". . . 3 2' 2' 2' 2", ". . . . 3 3 3' 3' 3"})).inner == Partition{4, 3});

    const auto a4421 = abc_enumerate(6, std::vector{4, 4, 2, 1});
    const Abc& b = find(a4421, lines({". 4 2 2 1 1", ". . 3 3 3 3' 3' 3' 2 2", ". . 4 4 4' 4' 4 4 3 3 3 3' 3' 3'",
                                      ". . . . . . . . 4 4 4' 4' 4 4"}));
    CHECK(b.inner == Partition{8, 2, 2, 1});
    const AbcStatistics s = statistics(b);
    CHECK(s.charge_words == std::vector<int>{3, 2, 1, 1});
    CHECK(s.off == 3);
    CHECK(s.beta == 2);
    CHECK(s.k_charge == 2);

    const auto a17 = abc_enumerate(7, std::vector{1, 1, 1, 1, 1, 1, 1});
    const Abc& c = find(a17, lines({"2 1 1 1 1 1 1", "4 3 2 2 2 2 2 2", "5 4 3 3 3 3 3' 3' 3", "6 6 5 4 4 4 4 4 4",
                                    ". 7 7 5 5 5 5 5' 5' 5", ". . . 6 6 6 6 6 6' 6'", ". . . 7 7 7' 7' 7 7 7"}));
    CHECK(c.inner == Partition{3, 3, 1});
    CHECK(k_charge(c) == 12);
}

TEST_CASE("k=2, degree 2 by hand") {
    const auto two = abc_enumerate(2, std::vector{2});
    REQUIRE(two.size() == 1);
    CHECK(two[0].inner == Partition{2});
    CHECK(k_charge(two[0]) == 0);

    const auto ones = abc_enumerate(2, std::vector{1, 1});
    REQUIRE(ones.size() == 2);
    std::map<Partition, int> kc;
    for (const Abc& a : ones)
        kc[a.inner] = k_charge(a);
    CHECK(kc.at(Partition{2}) == 1);
    CHECK(kc.at(Partition{1, 1}) == 0);

    const auto single = abc_enumerate(2, std::vector{1});
    REQUIRE(single.size() == 1);
    CHECK(extend(single[0]).marked == cc({{1, 4}}));
}

TEST_CASE("the library agrees with the reference pipeline") {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 5; ++n)
            for (const Partition& mu : partitions_of(n, k)) {
                const auto mine = abc_enumerate(k, mu.parts());
                const auto ref = reference::enumerate(k, mu.vec());
                REQUIRE(mine.size() == ref.size());
                std::map<std::string, reference::Stats> by_picture;
                for (const auto& t : ref)
                    by_picture.emplace(reference::picture(t), reference::statistics(t));
                for (const Abc& a : mine) {
                    auto it = by_picture.find(render_text(a));
                    REQUIRE_MESSAGE(it != by_picture.end(), render_text(a));
                    const AbcStatistics s = statistics(a);
                    CHECK(s.words == it->second.words);
                    CHECK(s.charge == it->second.charge);
                    CHECK(s.off == it->second.off);
                    CHECK(s.beta == it->second.beta);
                    CHECK(s.k_charge == it->second.k_charge);
                }
            }
}

TEST_CASE("inner-shape filter and weights") {
    const auto all = abc_enumerate(3, std::vector{1, 1, 1, 1, 1});
    const auto some = abc_enumerate(3, std::vector{1, 1, 1, 1, 1}, Partition{3, 1, 1, 1});
    CHECK(some.size() == 3);
    CHECK(std::count_if(all.begin(), all.end(), [](const Abc& a) { return a.inner == Partition{3, 1, 1, 1}; }) == 3);
    CHECK_THROWS_AS(abc_enumerate(3, std::vector{4}), input_error);
    CHECK_THROWS_AS(abc_enumerate(3, std::vector{0, 1}), input_error);
    CHECK_THROWS_AS(abc_enumerate(0, std::vector{1}), input_error);
    CHECK(abc_enumerate(3, std::vector<int>{}).size() == 1);

    // Compositions are allowed for enumeration; extension needs a partition.
    const auto comp = abc_enumerate(3, std::vector{1, 2});
    REQUIRE_FALSE(comp.empty());
    CHECK_THROWS_AS(extend(comp[0]), input_error);
}

TEST_CASE("validation rejects tampered tableaux") {
    auto all = abc_enumerate(3, std::vector{2, 1, 1});
    REQUIRE_FALSE(all.empty());
    Abc a = all[0];
    CHECK(abc_validate(a).ok);
    a.rows[0].cells.back().letter = 3;
    CHECK_FALSE(abc_validate(a).ok);
}

TEST_CASE("the capped extension is available for comparison") {
    // For k=2 and weight (2,2) the first appended ribbon in row 2 exceeds k.
    const auto all = abc_enumerate(2, std::vector{2, 2});
    bool any_capped = false;
    for (const Abc& a : all) {
        const ExtendedAbc uncapped = extend(a);
        const ExtendedAbc capped = extend(a, ExtendOptions{true});
        CHECK_FALSE(uncapped.capped);
        any_capped = any_capped || capped.capped;
        for (std::size_t i = 0; i < uncapped.first_ribbon.size(); ++i)
            CHECK(capped.first_ribbon[i] <= std::max(2, uncapped.first_ribbon[i]));
    }
    CHECK(any_capped);
}

TEST_CASE("latex rendering") {
    const auto all = abc_enumerate(2, std::vector{1});
    CHECK(render_latex(all[0]) == "\\tableau[sbY]{&1}");
}
