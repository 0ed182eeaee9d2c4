#include <catch2/catch_amalgamated.hpp>

#include "superklr/snf.hpp"

using namespace superklr;

TEST_CASE("smith normal form basics") {
    IntMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 6;
    auto s = smith(a);
    CHECK(s.rank == 2);
    CHECK(s.invariant_factors == std::vector<std::int64_t>{2, 6});

    IntMat b(2, 2);
    b.at(0, 0) = 2;
    b.at(0, 1) = 4;
    b.at(1, 0) = 4;
    b.at(1, 1) = 2;
    auto sb = smith(b);
    CHECK(sb.rank == 2);
    CHECK(sb.invariant_factors == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("kernel bases are integral and exact") {
    IntMat a(1, 3);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(0, 2) = 6;
    IntMat k = kernel(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
}

TEST_CASE("integral solve") {
    IntMat a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 0;
    a.at(1, 1) = 3;
    IntMat b(2, 1);
    b.at(0, 0) = 5;
    b.at(1, 0) = 9;
    IntMat x;
    REQUIRE(solve(a, b, x));
    CHECK(a * x == b);

    IntMat b2(2, 1);
    b2.at(0, 0) = 1;
    b2.at(1, 0) = 1;
    IntMat x2;
    CHECK(!solve(a, b2, x2)); // 3 does not divide 1
}

TEST_CASE("rank over prime fields") {
    IntMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    CHECK(rank_mod_p(a, 2) == 1);
    CHECK(rank_mod_p(a, 3) == 1);
    CHECK(rank_mod_p(a, 5) == 2);
}

TEST_CASE("proportionality sign detection") {
    IntMat a(2, 2), b(2, 2);
    a.at(0, 1) = 3;
    a.at(1, 0) = -1;
    b = a * -1;
    CHECK(a.proportionality_sign(a * 1) == 1);
    CHECK(a.proportionality_sign(b) == -1);
    b.at(0, 0) = 7;
    CHECK(a.proportionality_sign(b) == 0);
}
