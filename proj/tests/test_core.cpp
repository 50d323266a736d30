#include <doctest.h>

#include "kschur/core.hpp"
#include "kschur/error.hpp"
#include "oracles.hpp"

using namespace kschur;

TEST_CASE("hook lengths agree with a brute-force count") {
    for (int n = 0; n <= 9; ++n)
        for (const Partition& p : partitions_of(n))
            for (const Cell& c : p.cells())
                CHECK(hook_length(p, c) == oracle::hook(p.vec(), c.row, c.col));
    CHECK_THROWS_AS(hook_length(Partition{2}, Cell{1, 3}), input_error);
}

TEST_CASE("cores and degrees") {
    CHECK(is_p_core(Partition{8, 2, 2, 1}, 7));
    CHECK_FALSE(is_p_core(Partition{6, 2, 2, 1}, 7));
    CHECK(degree(Partition{7, 2}, 6) == 7);
    CHECK(degree(Partition{8, 2, 2, 1}, 7) == 11);
    CHECK_THROWS_AS(Core(Partition{6, 2, 2, 1}, 7), input_error);
    CHECK(Core(Partition{5, 2, 1}, 4).k() == 3);
}

TEST_CASE("residues") {
    CHECK(residue(Cell{1, 1}, 4) == 0);
    CHECK(residue(Cell{2, 1}, 4) == 3);
    CHECK(residue(Cell{1, 6}, 4) == 1);
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == false);
    CHECK(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}) == false);
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), input_error);
}

TEST_CASE("bounded partitions and cores") {
    CHECK(core_from_bounded(Partition{6, 2, 2, 1}, 6).shape() == Partition{8, 2, 2, 1});
    CHECK(bounded_from_core(Partition{8, 2, 2, 1}, 6) == Partition{6, 2, 2, 1});
    CHECK(bounded_from_core(Partition{7, 2}, 5) == Partition{5, 2});
    CHECK(core_from_bounded(Partition{5, 2}, 5).shape() == Partition{7, 2});
    CHECK(core_from_bounded(Partition{2, 1}, 9).shape() == Partition{2, 1});
    CHECK(core_from_bounded(Partition{}, 3).shape().empty());
    CHECK_THROWS_AS(core_from_bounded(Partition{4}, 3), input_error);
    CHECK_THROWS_AS(bounded_from_core(Partition{3}, 2), input_error);

    for (int k = 1; k <= 5; ++k)
        for (int n = 0; n <= 10; ++n)
            for (const Partition& lambda : partitions_of(n, k)) {
                const Core c = core_from_bounded(lambda, k);
                CHECK(degree(c) == n);
                CHECK(bounded_from_core(c) == lambda);
                CHECK(oracle::bounded(c.shape().vec(), k) == lambda.vec());
            }
}

TEST_CASE("enumerate_cores matches a filter over all small partitions") {
    for (int p = 2; p <= 5; ++p)
        for (int d = 0; d <= 6; ++d) {
            const auto cores = enumerate_cores(p, d);
            // Each core of degree d corresponds to one bounded partition of d.
            CHECK(cores.size() == partitions_of(d, p - 1).size());
            for (std::size_t i = 0; i < cores.size(); ++i) {
                CHECK(oracle::is_core(cores[i].shape().vec(), p));
                CHECK(oracle::degree(cores[i].shape().vec(), p) == d);
                if (i > 0)
                    CHECK(CanonicalOrder{}(cores[i - 1].shape(), cores[i].shape()));
            }
        }
    CHECK_THROWS_AS(enumerate_cores(1, 2), input_error);
}
