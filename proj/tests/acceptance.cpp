// Acceptance suite: one pass/fail line per criterion, exact expectations
// pinned in code. Returns nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "superklr/link_table.hpp"
#include "superklr/oracles.hpp"
#include "superklr/pd.hpp"
#include "superklr/pipeline.hpp"

using namespace superklr;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, double seconds,
            const std::string& note = "") {
    std::printf("criterion %2d [%s] %-34s (%.1fs)%s%s\n", idx, pass ? "PASS" : "FAIL",
                name.c_str(), seconds, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RunResult run(const std::string& braid, std::uint64_t seed = 0) {
    RunConfig cfg;
    cfg.braid = Braid::parse(braid);
    cfg.link_name = braid;
    cfg.sign_seed = seed;
    return run_link(cfg);
}

HomologyTable integral(const std::string& braid, std::uint64_t seed = 0) {
    RunConfig cfg;
    cfg.braid = Braid::parse(braid);
    cfg.sign_seed = seed;
    return smith_homology(gaussian_eliminate(build_cube(cfg).assemble()));
}

} // namespace

// 1. Every relation instance passes its verification for rank <= 4,
//    |nu| <= 6, under all 16 sign choices of adjacent t pairs.
static void criterion1() {
    auto t0 = Clock::now();
    bool pass = true;
    int corrected = 0, errata = 0, total = 0;
    for (int mask = 0; mask < 16 && pass; ++mask) {
        ScalarConfig sc;
        sc.set_t(1, 2, (mask & 1) ? -1 : 1);
        sc.set_t(2, 1, (mask & 2) ? -1 : 1);
        sc.set_t(2, 3, (mask & 4) ? -1 : 1);
        sc.set_t(3, 2, (mask & 8) ? -1 : 1);
        sc.set_t(3, 4, (mask & 1) ? -1 : 1);
        sc.set_t(4, 3, (mask & 2) ? -1 : 1);
        auto rep = verify_relations(4, 6, sc);
        total = static_cast<int>(rep.entries.size());
        corrected = rep.count(CheckMode::OperatorCorrected);
        errata = rep.count(CheckMode::Errata);
        if (rep.failures() != 0) pass = false;
    }
    char note[160];
    std::snprintf(note, sizeof note,
                  "%d instances x16 sign configs; %d corrected encodings, %d documented errata "
                  "(see decisions ledger)",
                  total, corrected, errata);
    report(1, "relation suite", pass && secs(t0) < 120.0, secs(t0), note);
}

// 2. Unknot: free rank one at (0, 1) and (0, -1), nothing else.
static void criterion2() {
    auto t0 = Clock::now();
    HomologyTable expect;
    expect.groups[{0, 1}] = {1, {}};
    expect.groups[{0, -1}] = {1, {}};
    bool pass = (integral("1:") == expect) && secs(t0) < 1.0;
    report(2, "unknot q + 1/q", pass, secs(t0));
}

// 3. Twenty fixed Reidemeister pairs have identical integral homology.
static void criterion3() {
    auto t0 = Clock::now();
    const std::vector<std::pair<std::string, std::string>> pairs = {
        // RI: stabilizations, including the positive-kink configuration.
        {"1:", "2: 1"},
        {"1:", "2: -1"},
        {"2: -1 -1 -1", "3: -1 -1 -1 2"},
        {"2: -1 -1 -1", "3: -1 -1 -1 -2"},
        {"2: 1 1", "3: 1 1 2"},
        {"2: 1 1", "3: 1 1 -2"},
        {"3: 1 -2 1 -2", "4: 1 -2 1 -2 3"},
        {"2: 1 1 1", "3: 1 1 1 2"},
        // RII: inverse pairs inserted, including the RIIa configuration.
        {"2: -1 -1 -1", "2: -1 -1 1 -1 -1"},
        {"2: 1 1", "2: 1 1 1 -1"},
        {"2: 1 1", "2: 1 -1 1 1"},
        {"3: 1 -2 1 -2", "3: 1 -2 2 -2 1 -2"},
        {"3: 1 1 2", "3: 1 2 -2 1 2"},
        {"2: 1", "2: 1 1 -1"},
        // RIII: braid relation slides, plain and mixed.
        {"3: 1 2 1", "3: 2 1 2"},
        {"3: 1 2 1 -2", "3: 2 1 2 -2"},
        {"3: -1 -2 -1", "3: -2 -1 -2"},
        {"3: 1 2 1 1", "3: 2 1 2 1"},
        // Rotation (conjugation) of the braid word.
        {"2: -1 -1 -1 1", "2: 1 -1 -1 -1"},
        {"3: 1 1 2", "3: 2 1 1"},
    };
    bool pass = true;
    std::string bad;
    for (auto& [a, b] : pairs) {
        if (!(integral(a) == integral(b))) {
            pass = false;
            bad = a + " vs " + b;
            break;
        }
    }
    report(3, "Reidemeister invariance (20 pairs)", pass && secs(t0) < 300.0, secs(t0), bad);
}

// 4. Left trefoil: H_0 = q^-1 + q^-3 and H_-3 = q^-7 + q^-9, free.
static void criterion4() {
    auto t0 = Clock::now();
    auto h = integral("2: -1 -1 -1");
    auto free1 = [&](int hh, int q) {
        return h.at(hh, q).free_rank == 1 && h.at(hh, q).torsion.empty();
    };
    bool pass = free1(0, -1) && free1(0, -3) && free1(-3, -7) && free1(-3, -9);
    // H_0 and H_-3 contain nothing else.
    for (auto& [hq, g] : h.groups)
        if ((hq.first == 0 || hq.first == -3) &&
            !(hq.second == -1 || hq.second == -3 || hq.second == -7 || hq.second == -9))
            pass = false;
    report(4, "left trefoil H_0, H_-3", pass && secs(t0) < 10.0, secs(t0));
}

// 5. Euler characteristic equals the Kauffman-bracket Jones polynomial for
//    every link in the built-in table.
static void criterion5() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string bad;
    for (const auto& e : link_table()) {
        auto r = run(e.braid);
        if (!r.checks.euler_equals_jones) {
            pass = false;
            bad = e.name;
            break;
        }
    }
    report(5, "Jones = Euler on the table", pass && secs(t0) < 300.0, secs(t0), bad);
}

// 6. The rational Poincare polynomial factors as (q + 1/q) P_red with
//    P_red the reduced output.
static void criterion6() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string bad;
    for (const auto& e : link_table()) {
        auto r = run(e.braid);
        if (!r.checks.reduced_factorization) {
            pass = false;
            bad = e.name;
            break;
        }
    }
    report(6, "reduced decomposition", pass && secs(t0) < 300.0, secs(t0), bad);
}

// 7. Mod-2 agreement with even Khovanov homology, degreewise.
static void criterion7() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string bad;
    for (const auto& e : link_table()) {
        auto r = run(e.braid);
        if (!r.checks.mod2_equals_even) {
            pass = false;
            bad = e.name;
            break;
        }
    }
    report(7, "mod-2 = even Khovanov", pass, secs(t0), bad);
}

// 8. Structure identities as matrix identities on every vertex module.
static void criterion8() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string bad;
    for (const auto& e : link_table()) {
        RunConfig cfg;
        cfg.braid = e.parse();
        if (!build_cube(cfg).structure_checks()) {
            pass = false;
            bad = e.name;
            break;
        }
    }
    report(8, "mu.delta, Delta^2, X Delta + Delta X, [d,.]", pass, secs(t0), bad);
}

// 9. d^2 = 0 over Z everywhere and homology stable across at least three
//    admissible sign assignments per link.
static void criterion9() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string bad;
    for (const auto& e : link_table()) {
        RunConfig cfg;
        cfg.braid = e.parse();
        try {
            auto cube = build_cube(cfg);
            cube.assemble(); // validates d^2 = 0
            auto base = integral(e.braid, 0);
            auto seeds = cube.sign_assignment_seeds(3);
            if (cube.crossings() >= 2 && seeds.size() < 2) {
                pass = false;
                bad = e.name + " (no sign freedom)";
                break;
            }
            for (auto s : seeds)
                if (!(integral(e.braid, s) == base)) {
                    pass = false;
                    bad = e.name;
                    break;
                }
        } catch (const std::exception& ex) {
            pass = false;
            bad = e.name + std::string(": ") + ex.what();
        }
        if (!pass) break;
    }
    report(9, "d^2 = 0 and sign robustness", pass, secs(t0), bad);
}

// 10. Distinctness report against even Khovanov homology over Z for the
//     knots in the table, with universal-coefficient consistency.
static void criterion10() {
    auto t0 = Clock::now();
    bool pass = true;
    int distinct = 0;
    std::printf("--- distinctness report (exploratory) ---\n");
    for (const auto& e : knot_table()) {
        RunConfig cfg;
        cfg.braid = e.parse();
        cfg.link_name = e.name;
        auto r = run_link(cfg);
        // Universal coefficients: F_p Betti numbers from the complex match
        // the ranks predicted by the integral table.
        BigradedComplex c = gaussian_eliminate(build_cube(cfg).assemble());
        for (std::int64_t p : {2, 3}) {
            if (!(reduce_mod(c, p) == poincare(r.homology, CoefficientField::mod(p)))) {
                pass = false;
            }
        }
        if (!r.compare.equal_over_Z) ++distinct;
        std::printf("  %-18s %s\n", e.name.c_str(), r.compare.str().c_str());
    }
    char note[96];
    std::snprintf(note, sizeof note, "%d of %d knots differ from even Khovanov over Z", distinct,
                  (int)knot_table().size());
    report(10, "distinctness report generated", pass, secs(t0), note);
}

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("acceptance: %s (%d failures, %.1fs total)\n", failures ? "FAIL" : "PASS",
                failures, secs(t0));
    return failures ? 1 : 0;
}
