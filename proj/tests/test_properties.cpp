#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "kschur/charge.hpp"
#include "kschur/core.hpp"
#include "kschur/json_io.hpp"
#include "kschur/strong_order.hpp"
#include "kschur/symfunc.hpp"
#include "oracles.hpp"

using namespace kschur;

namespace {

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    std::vector<int> composition(int n, int max_part) {
        std::vector<int> out;
        while (n > 0) {
            const int x = uniform(1, std::min(n, max_part));
            out.push_back(x);
            n -= x;
        }
        return out;
    }

    Partition partition(int n, int max_part) {
        auto c = composition(n, max_part);
        std::sort(c.begin(), c.end(), std::greater<>());
        return Partition(c);
    }

    /// A shuffled word whose content is the partition mu.
    Word word(const Partition& mu) {
        Word w;
        for (int i = 1; i <= mu.length(); ++i)
            w.insert(w.end(), static_cast<std::size_t>(mu.row(i)), i);
        std::shuffle(w.begin(), w.end(), rng);
        return w;
    }

    TPoly poly(int max_degree) {
        std::vector<Integer> c;
        for (int i = 0, d = uniform(0, max_degree); i <= d; ++i)
            c.emplace_back(uniform(-5, 5));
        return TPoly(std::move(c));
    }
};

constexpr int kTrials = 200;

}  // namespace

TEST_CASE("conjugation is an involution and preserves size") {
    Gen g(1);
    for (int i = 0; i < kTrials; ++i) {
        const Partition p = g.partition(g.uniform(0, 25), 9);
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
        CHECK(p.conjugate().length() == p.first());
    }
}

TEST_CASE("cores: round trip, degree and the growth law") {
    Gen g(2);
    for (int i = 0; i < kTrials; ++i) {
        const int k = g.uniform(1, 6);
        const Partition lambda = g.partition(g.uniform(0, 14), k);
        const Core c = core_from_bounded(lambda, k);
        CHECK(degree(c) == lambda.size());
        CHECK(bounded_from_core(c) == lambda);
        CHECK(oracle::is_core(c.shape().vec(), k + 1));
        const Partition up = strip_target(c.shape(), k);
        CHECK(is_p_core(up, k + 1));
        CHECK(degree(up, k + 1) == lambda.size() + k);
    }
}

TEST_CASE("charge: oracle agreement and subword lengths") {
    Gen g(3);
    for (int i = 0; i < kTrials; ++i) {
        const Partition mu = g.partition(g.uniform(1, 9), 4);
        const Word w = g.word(mu);
        CHECK(charge_word(w) == oracle::charge_word(w));
        const auto sub = charge_subwords(w);
        const Partition conj = mu.conjugate();
        REQUIRE(static_cast<int>(sub.size()) == conj.length());
        for (int r = 1; r <= conj.length(); ++r)
            CHECK(static_cast<int>(sub[static_cast<std::size_t>(r - 1)].size()) == conj.row(r));
        const int n = mu.size();
        CHECK(charge_word(w) >= 0);
        CHECK(charge_word(w) <= n * (n - 1) / 2);
    }
}

TEST_CASE("polynomial ring laws and evaluation") {
    Gen g(4);
    for (int i = 0; i < kTrials; ++i) {
        const TPoly a = g.poly(5), b = g.poly(5), c = g.poly(5);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == TPoly{});
        const Integer x = g.uniform(-3, 3);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK(json(a).get<TPoly>() == a);
    }
}

TEST_CASE("unitriangular inversion") {
    Gen g(5);
    for (int i = 0; i < 40; ++i) {
        const auto idx = partitions_of(g.uniform(1, 6));
        TPolyMatrix m(idx);
        for (int r = 0; r < m.size(); ++r)
            for (int c = r; c < m.size(); ++c)
                m(r, c) = r == c ? TPoly(1) : g.poly(3);
        const TPolyMatrix inv = unitriangular_inverse(m);
        CHECK(m * inv == TPolyMatrix::identity(idx));
        CHECK(unitriangular_inverse(inv) == m);
        CHECK(unitriangular_inverse(m.transpose()) == inv.transpose());
    }
}

TEST_CASE("random ABCs: validity, statistics and serialisation") {
    Gen g(6);
    for (int i = 0; i < 60; ++i) {
        const int k = g.uniform(1, 5);
        const Partition mu = g.partition(g.uniform(1, 6), k);
        const auto all = abc_enumerate(k, mu.parts());
        REQUIRE_FALSE(all.empty());
        const Abc& a = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
        CHECK(abc_validate(a).ok);
        CHECK(bounded_from_core(a.inner, k).size() == mu.size());
        const AbcStatistics s = statistics(a);
        CHECK(s.k_charge >= 0);
        CHECK(static_cast<int>(s.e_sets.size()) == mu.first());
        for (const ESet& e : s.e_sets)
            CHECK(charge_permutation(reading_word(e)) == column_statistic(e));
        if (k == mu.size()) {
            CHECK(s.off == 0);
            CHECK(s.beta == 0);
        }
        CHECK(parse_json(json(a).dump()).get<Abc>() == a);
    }
}

TEST_CASE("ABC counts do not depend on the order of the weight") {
    Gen g(7);
    for (int i = 0; i < 40; ++i) {
        const int k = g.uniform(1, 4);
        std::vector<int> alpha = g.composition(g.uniform(1, 6), k);
        std::vector<int> shuffled = alpha;
        std::shuffle(shuffled.begin(), shuffled.end(), g.rng);
        std::map<Partition, int> a, b;
        for (const Abc& x : abc_enumerate(k, alpha))
            ++a[x.inner];
        for (const Abc& x : abc_enumerate(k, shuffled))
            ++b[x.inner];
        CHECK(a == b);
    }
}

TEST_CASE("basis changes are linear and invertible") {
    Gen g(8);
    for (int i = 0; i < 30; ++i) {
        const int n = g.uniform(1, 5);
        SymFunc f(Basis::schur, n);
        for (const Partition& p : partitions_of(n))
            if (g.uniform(0, 1))
                f.add(p, g.poly(2));
        CHECK(to_schur(to_monomial(f)) == f);
        CHECK(to_schur(to_homogeneous(f)) == f);
        CHECK(to_schur(convert(f, Basis::hall_littlewood)) == f);
        const Integer t = g.uniform(-2, 2);
        CHECK(to_monomial(f).at(t) == to_monomial(f.at(t)));
        CHECK(symfunc_from_json(json(f)) == f);
    }
}
