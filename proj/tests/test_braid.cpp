#include <catch2/catch_amalgamated.hpp>

#include "superklr/braid.hpp"

using namespace superklr;

TEST_CASE("braid parsing and writhe") {
    auto b = Braid::parse("2: -1 -1 -1");
    CHECK(b.strands == 2);
    CHECK(b.word == std::vector<int>{-1, -1, -1});
    CHECK(b.writhe() == -3);
    CHECK(b.mirror().writhe() == 3);
    CHECK_THROWS(Braid::parse("2: 2"));
    CHECK_THROWS(Braid::parse("nonsense"));
}

TEST_CASE("circle counts across the Hopf cube") {
    auto b = Braid::parse("2: 1 1");
    // Sorted multiset of circle counts over the four vertices: (2,1,1,2).
    std::vector<int> counts;
    for (std::uint32_t s = 0; s < 4; ++s) counts.push_back(Resolution(b, s).circles());
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("circle counts across the trefoil cube") {
    auto b = Braid::parse("2: -1 -1 -1");
    std::vector<int> counts;
    for (std::uint32_t s = 0; s < 8; ++s) counts.push_back(Resolution(b, s).circles());
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<int>{1, 1, 1, 2, 2, 2, 2, 3});
    // The all-cap-cup state (bit 0 for negative letters) has three circles.
    CHECK(Resolution(b, 0).circles() == 3);
    CHECK(Resolution(b, 7).circles() == 2);
}

TEST_CASE("edges change circle counts by exactly one") {
    for (const char* w : {"2: 1 1", "2: -1 -1 -1", "3: 1 -2 1 -2", "3: 1 1 2 -1 2"}) {
        auto b = Braid::parse(w);
        const int c = b.crossings();
        for (std::uint32_t s = 0; s < (1u << c); ++s) {
            Resolution ru(b, s);
            for (int j = 0; j < c; ++j) {
                if ((s >> j) & 1) continue;
                Resolution rv(b, s | (1u << j));
                CHECK(std::abs(ru.circles() - rv.circles()) == 1);
            }
        }
    }
}

TEST_CASE("empty braid closure is a split unlink") {
    auto b = Braid::parse("1:");
    CHECK(Resolution(b, 0).circles() == 1);
    auto b3 = Braid::parse("3:");
    CHECK(Resolution(b3, 0).circles() == 3);
}
