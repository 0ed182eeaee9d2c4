#include <catch2/catch_amalgamated.hpp>

#include "superklr/oracles.hpp"
#include "superklr/pd.hpp"
#include "superklr/pipeline.hpp"

using namespace superklr;

TEST_CASE("braid to PD round trip preserves the invariants") {
    for (const char* w : {"2: 1 1", "2: -1 -1 -1", "2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1 1"}) {
        auto b = Braid::parse(w);
        auto pd = braid_to_pd(b);
        auto b2 = pd_to_braid(pd);
        INFO(w << " -> " << b2.str());
        CHECK(kauffman_jones(b2) == kauffman_jones(b));
        RunConfig c1, c2;
        c1.braid = b;
        c2.braid = b2;
        CHECK(run_link(c1).homology == run_link(c2).homology);
    }
}

TEST_CASE("PD JSON parsing and validation") {
    auto pd = braid_to_pd(Braid::parse("2: 1 1"));
    auto j = pd.to_json();
    auto pd2 = PdCode::from_json(j);
    CHECK(pd2.crossings.size() == pd.crossings.size());

    nlohmann::json bad = nlohmann::json::array();
    bad.push_back({{"over", {1, 2}}, {"under", {2, 3}}, {"sign", 1}});
    CHECK_THROWS(PdCode::from_json(bad));
}

TEST_CASE("vogel moves braid a non-braided diagram") {
    // Two-component unlink drawn as a parallel-strand clasp: the eye face is
    // defective, so at least one Reidemeister II insertion is needed.
    PdCode pd;
    // e fingers over f and back; outer returns close each component.
    PdCrossing x1{/*over*/ 10, 11, /*under*/ 21, 22, -1};
    PdCrossing x2{11, 10, 20, 21, 1};
    x2.over_in = 11;
    x2.over_out = 12;
    x2.under_in = 20;
    x2.under_out = 21;
    PdCrossing x1f = x1, x2f = x2;
    x1f.over_in = 12; // close e: 12 is the outer return into x1
    pd.crossings = {x1f, x2f};
    // Fix labels so each appears once as head and once as tail:
    // e-circle: 12 -> x1 -> 11 -> x2 -> 12; f-circle: 20 -> x2 -> 21 -> x1 -> 20.
    pd.crossings[0] = {12, 11, 21, 20, -1};
    pd.crossings[1] = {11, 12, 20, 21, 1};
    pd.validate();
    auto b = pd_to_braid(pd);
    // Unlink of two components: Jones (q + 1/q)^2.
    Laurent qq = Laurent(1, 1) + Laurent(1, -1);
    CHECK(kauffman_jones(b) == qq * qq);
}
