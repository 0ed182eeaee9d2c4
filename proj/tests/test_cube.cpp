#include <catch2/catch_amalgamated.hpp>

#include "superklr/cube.hpp"
#include "superklr/homology.hpp"

using namespace superklr;

namespace {

Cube make_cube(const char* braid, std::uint64_t seed = 0, ScalarConfig sc = {}) {
    auto b = Braid::parse(braid);
    auto cw = compile_fform(b);
    CubeOptions opt;
    opt.scalars = sc;
    opt.sign_seed = seed;
    return Cube(b, cw.sites, opt);
}

HomologyTable homology_of(const char* braid, std::uint64_t seed = 0) {
    return smith_homology(make_cube(braid, seed).assemble());
}

} // namespace

TEST_CASE("unknot complex has graded dimension q + 1/q") {
    auto h = homology_of("1:");
    HomologyTable expect;
    expect.groups[{0, 1}] = {1, {}};
    expect.groups[{0, -1}] = {1, {}};
    CHECK(h == expect);
}

TEST_CASE("Reidemeister I kinks reduce to the unknot") {
    HomologyTable expect;
    expect.groups[{0, 1}] = {1, {}};
    expect.groups[{0, -1}] = {1, {}};
    CHECK(homology_of("2: 1") == expect);
    CHECK(homology_of("2: -1") == expect);
}

TEST_CASE("positive Hopf link matches the Khovanov-style table") {
    auto h = homology_of("2: 1 1");
    HomologyTable expect;
    expect.groups[{0, 0}] = {1, {}};
    expect.groups[{0, 2}] = {1, {}};
    expect.groups[{2, 4}] = {1, {}};
    expect.groups[{2, 6}] = {1, {}};
    CHECK(h == expect);
}

TEST_CASE("left trefoil reproduces the closed-form values") {
    auto h = homology_of("2: -1 -1 -1");
    // H_0 = q^-1 k + q^-3 k and H_-3 = q^-7 k + q^-9 k.
    CHECK(h.at(0, -1).free_rank == 1);
    CHECK(h.at(0, -3).free_rank == 1);
    CHECK(h.at(-3, -7).free_rank == 1);
    CHECK(h.at(-3, -9).free_rank == 1);
    CHECK(h.at(0, -1).torsion.empty());
    CHECK(h.at(-3, -7).torsion.empty());
    // Nothing outside homological degrees -3..0.
    for (auto& [hq, g] : h.groups) {
        CHECK(hq.first <= 0);
        CHECK(hq.first >= -3);
    }
}

TEST_CASE("cube invariants on small links") {
    for (const char* w : {"2: 1 1", "2: -1 -1 -1", "3: 1 -2 1 -2", "2: 1 1 1 1"}) {
        auto cube = make_cube(w);
        CHECK(cube.parity_consistent());
        CHECK(cube.structure_checks());
        auto c = cube.assemble(); // validates d^2 = 0 and q-homogeneity
        (void)c;
        // Edge maps are parity homogeneous for the declared parity.
        for (const auto& e : cube.edges()) {
            const auto& vu = cube.vertices()[e.u];
            const auto& vv = cube.vertices()[e.v];
            for (int r = 0; r < e.matrix.rows(); ++r)
                for (int col = 0; col < e.matrix.cols(); ++col)
                    if (e.matrix.at(r, col)) {
                        int pu = (std::popcount(unsigned(col)) + vu.parity_offset) & 1;
                        int pv = (std::popcount(unsigned(r)) + vv.parity_offset) & 1;
                        CHECK(((pu + e.parity) & 1) == pv);
                    }
        }
    }
}

TEST_CASE("homology is independent of the admissible sign assignment") {
    for (const char* w : {"2: -1 -1 -1", "3: 1 -2 1 -2"}) {
        auto base = homology_of(w, 0);
        auto cube = make_cube(w);
        auto seeds = cube.sign_assignment_seeds(4);
        CHECK(seeds.size() >= 3);
        for (auto s : seeds) CHECK(homology_of(w, s) == base);
    }
}

TEST_CASE("reduced splitting of the trefoil") {
    auto cube = make_cube("2: -1 -1 -1");
    auto red = cube.reduced_split();
    CHECK(red.certificate);
    auto hr = smith_homology(red.complex);
    // Reduced H_0 = q^-2.
    CHECK(hr.at(0, -2).free_rank == 1);
    // Full Poincare polynomial factors as (q + 1/q) times the reduced one.
    auto full = poincare(smith_homology(cube.assemble()), CoefficientField::rationals());
    auto reduced = poincare(hr, CoefficientField::rationals());
    Laurent qq = Laurent(1, 1) + Laurent(1, -1);
    for (auto& [h, p] : full.rows()) {
        Laurent want = qq * (reduced.rows().count(h) ? reduced.rows().at(h) : Laurent());
        CHECK(p == want);
    }
}

TEST_CASE("coherent nondefault t signs leave homology unchanged") {
    // t_ij t_ji = +1 keeps the global dot-class bookkeeping solvable.
    ScalarConfig sc;
    sc.set_t(1, 2, -1);
    sc.set_t(2, 1, -1);
    sc.set_t(1, 3, -1);
    auto cube = make_cube("2: -1 -1 -1", 0, sc);
    CHECK(cube.lambda_consistent());
    CHECK(cube.structure_checks());
    CHECK(smith_homology(cube.assemble()) == homology_of("2: -1 -1 -1"));
}

TEST_CASE("incoherent unit twists are rejected with a diagnostic") {
    // t_12 t_21 = -1 makes the deferred global tensor-sign bookkeeping
    // unsolvable on a 3-circle vertex; the cube refuses loudly.
    ScalarConfig sc;
    sc.set_t(1, 2, -1);
    CHECK_THROWS_AS(make_cube("2: -1 -1 -1", 0, sc), std::logic_error);
}
