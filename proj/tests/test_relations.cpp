#include <catch2/catch_amalgamated.hpp>

#include "superklr/relations.hpp"

using namespace superklr;

TEST_CASE("relation suite passes at the default sign configuration") {
    ScalarConfig sc;
    auto rep = relation_suite(4, 6, sc);
    for (const auto& e : rep.entries) {
        INFO(e.relation << " " << e.instance << " [" << check_mode_name(e.mode) << "] "
                        << e.note);
        CHECK(e.pass);
    }
    CHECK(rep.entries.size() > 100);
    CHECK(rep.count(CheckMode::Operator) > 80);
}

TEST_CASE("relation suite passes for all 16 adjacent t sign choices") {
    for (int mask = 0; mask < 16; ++mask) {
        ScalarConfig sc;
        sc.set_t(1, 2, (mask & 1) ? -1 : 1);
        sc.set_t(2, 1, (mask & 2) ? -1 : 1);
        sc.set_t(2, 3, (mask & 4) ? -1 : 1);
        sc.set_t(3, 2, (mask & 8) ? -1 : 1);
        sc.set_t(3, 4, (mask & 1) ? -1 : 1);
        sc.set_t(4, 3, (mask & 2) ? -1 : 1);
        auto rep = relation_suite(4, 6, sc);
        INFO("sign mask " << mask);
        CHECK(rep.failures() == 0);
    }
}
