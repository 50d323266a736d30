#include <doctest.h>

#include "kschur/error.hpp"
#include "kschur/json_io.hpp"

using namespace kschur;

TEST_CASE("partitions and polynomials") {
    CHECK(json(Partition{6, 2, 2, 1}).dump() == "[6,2,2,1]");
    CHECK(json(Partition{}).dump() == "[]");
    CHECK(json::parse("[3,1]").get<Partition>() == Partition{3, 1});
    CHECK_THROWS_AS(json::parse("[1,3]").get<Partition>(), input_error);
    CHECK_THROWS_AS(json::parse("{}").get<Partition>(), input_error);

    CHECK(json(TPoly::t() + TPoly::t() * TPoly::t()).dump() == "[0,1,1]");
    CHECK(json(TPoly{}).dump() == "[0]");
    CHECK(json::parse("[0]").get<TPoly>().is_zero());
    CHECK(json::parse("[0,1,1]").get<TPoly>() == TPoly(std::vector<Integer>{0, 1, 1}));

    TPoly big(1);
    for (int i = 0; i < 100; ++i)
        big *= TPoly(std::vector<Integer>{1, 1});
    const json j = big;
    CHECK(j[50].is_string());
    CHECK(j.get<TPoly>() == big);
    CHECK_THROWS_AS(json::parse("[\"x\"]").get<TPoly>(), input_error);
}

TEST_CASE("ABCs round trip bit-exactly") {
    for (int k = 2; k <= 4; ++k)
        for (const Partition& mu : partitions_of(5, k))
            for (const Abc& a : abc_enumerate(k, mu.parts())) {
                const std::string text = json(a).dump();
                const Abc back = parse_json(text).get<Abc>();
                CHECK(back == a);
                CHECK(json(back).dump() == text);
            }
}

TEST_CASE("ABC schema") {
    const auto all = abc_enumerate(2, std::vector{1});
    CHECK(json(all[0]).dump() ==
          R"({"inner_shape":[1],"k":2,"rows":[{"cells":[{"col":2,"letter":1,"ribbon":0}],"length":2}],"weight":[1]})");
    json j = all[0];
    j["rows"][0]["cells"][0]["letter"] = 2;
    CHECK_THROWS_AS(j.get<Abc>(), input_error);
    json missing = all[0];
    missing.erase("k");
    CHECK_THROWS_AS(missing.get<Abc>(), input_error);
}

TEST_CASE("statistics") {
    const auto all = abc_enumerate(3, std::vector{1, 1, 1, 1, 1}, Partition{3, 1, 1, 1});
    const json j = statistics(all[1]);
    CHECK(j.dump() == R"({"beta":1,"charge_words":[5],"k_charge":3,"off":1,"words":[[2,1,5,3,4]]})");
}

TEST_CASE("symmetric functions and Kostka matrices") {
    const SymFunc f = kschur_t(Partition{1, 1}, 2);
    const json j = f;
    CHECK(j.dump() == R"({"basis":"hall_littlewood","degree":2,"terms":[{"coeff":[0,-1],"index":[2]},{"coeff":[1],"index":[1,1]}]})");
    CHECK(symfunc_from_json(j) == f);

    SymFunc ks(Basis::kschur_t, 3, 2);
    ks.add(Partition{2, 1}, TPoly::t());
    CHECK(json(ks)["k"] == 2);
    CHECK(symfunc_from_json(json(ks)) == ks);

    const auto m = kostka_matrix_k(2, 2);
    CHECK(kostka_to_json(m).dump() == R"({"degree":2,"index":[[2],[1,1]],"k":2,"matrix":[[[1],[0,1]],[[0],[1]]]})");
    const auto big = kostka_matrix_k(3, 5);
    const auto back = kostka_from_json(parse_json(kostka_to_json(big).dump()));
    CHECK(back.matrix == big.matrix);
    CHECK(back.k == 3);
    CHECK(back.n == 5);

    CHECK_THROWS_AS(parse_json("{"), input_error);
    CHECK_THROWS_AS(kostka_from_json(parse_json(R"({"k":2,"degree":2,"index":[[2],[1,1]],"matrix":[[[1]]]})")),
                    input_error);
}

TEST_CASE("chains") {
    const auto ch = bottom_strong_chain(Core(Partition{4, 2}, 6), Core(Partition{3}, 6), 5);
    REQUIRE(ch);
    CHECK(json(*ch).dump() == "[[4,2],[7,2],[8,3]]");
}
