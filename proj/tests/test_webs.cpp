#include <catch2/catch_amalgamated.hpp>

#include "superklr/webs.hpp"

using namespace superklr;

TEST_CASE("canonical word specializations") {
    // (2,0) -> F_1^(2)
    auto w1 = canonical_word({2, 0});
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].color == 1);
    CHECK(w1[0].thickness == 2);

    // (1,0) -> F_1
    auto w2 = canonical_word({1, 0});
    REQUIRE(w2.size() == 1);
    CHECK(w2[0] == Strand{1, 1});

    // (2,2,0,0,0): color pattern matches the closure words 321 / 432.
    auto w3 = canonical_word({2, 2, 0, 0, 0});
    std::vector<int> colors;
    for (auto& s : w3) {
        colors.push_back(s.color);
        CHECK(s.thickness == 2);
    }
    // Bottom-to-top letters: the 432-block then the 321-block.
    CHECK(colors == std::vector<int>{2, 3, 4, 1, 2, 3});
}

TEST_CASE("trefoil ladder matches the closure picture") {
    auto cw = compile_fform(Braid::parse("2: -1 -1 -1"));
    CHECK(cw.web.columns == 5);
    CHECK(cw.web.lambda == std::vector<int>{2, 2, 0, 0, 0});
    auto mu = cw.web.validate(cw.sites);
    CHECK(mu == std::vector<int>{0, 0, 0, 2, 2});
    CHECK(mu == cw.web.mu);
    REQUIRE(cw.sites.size() == 3);
    CHECK(cw.sites[0].col == 1);
    CHECK(cw.sites[1].col == 2);
    CHECK(cw.sites[2].col == 3);
    for (auto& s : cw.sites) {
        CHECK(s.sign == -1);
        CHECK(!s.flipped());
        CHECK(s.dq == 0);
        CHECK(s.dh == 0);
    }
    // Bottom word F_4 F_3 F_2 and top word F_3 F_2 F_1, six flat rungs total.
    CHECK(cw.web.rungs.size() == 6);
}

TEST_CASE("single positive crossing gives the three-column web") {
    auto cw = compile_fform(Braid::parse("2: 1"));
    CHECK(cw.web.columns == 3);
    REQUIRE(cw.sites.size() == 1);
    CHECK(cw.sites[0].sign == 1);
    CHECK(cw.web.validate(cw.sites) == std::vector<int>{0, 2, 2});
}

TEST_CASE("hopf web has four columns and two crossing slices") {
    auto cw = compile_fform(Braid::parse("2: 1 1"));
    CHECK(cw.web.columns == 4);
    CHECK(cw.sites.size() == 2);
    CHECK(cw.web.validate(cw.sites) == std::vector<int>{0, 0, 2, 2});
}

TEST_CASE("unknot and wider braids stay label-admissible") {
    auto u = compile_fform(Braid::parse("1:"));
    CHECK(u.web.validate(u.sites) == std::vector<int>{0, 2});

    auto w = compile_fform(Braid::parse("3: 1 -2 1 -2"));
    CHECK(!w.web.explicit_closure);
    CHECK(w.web.validate(w.sites) == w.web.mu);
    REQUIRE(w.sites.size() == 4);
    // Ladder flow conservation: total boxes preserved.
    int total = 0;
    for (int v : w.web.mu) total += v;
    CHECK(total == 6);
}
