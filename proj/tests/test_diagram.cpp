#include <catch2/catch_amalgamated.hpp>

#include "superklr/diagram.hpp"

using namespace superklr;

namespace {

ColoredSequence simples(int n, std::initializer_list<int> colors) {
    return ColoredSequence::simple(n, std::vector<int>(colors));
}

LinearMorphism word(const ColoredSequence& src, std::initializer_list<Gen> layers) {
    return LinearMorphism(DiagramWord(src, std::vector<Gen>(layers)));
}

bool op_equal(const LinearMorphism& a, const LinearMorphism& b, const ScalarConfig& sc) {
    return semantically_equal(a, b, sc);
}

} // namespace

TEST_CASE("generator boundaries and gradings") {
    auto ii = simples(3, {2, 2});
    auto dd = ColoredSequence(3, {{2, 2}});

    Gen dot{GenKind::Dot, 0};
    CHECK(gen_degree(dot, ii) == 2);
    CHECK(gen_parity(dot, ii) == 1);

    Gen split{GenKind::SplitUp, 0};
    CHECK(gen_target(split, dd) == ii);
    CHECK(gen_degree(split, dd) == -1);
    CHECK(gen_parity(split, dd) == 1);

    Gen merge{GenKind::MergeDown, 0};
    CHECK(gen_target(merge, ii) == dd);
    CHECK(gen_degree(merge, ii) == -1);
    CHECK(gen_parity(merge, ii) == 0);

    auto ij = simples(3, {2, 3});
    Gen cross{GenKind::Cross, 0};
    CHECK(gen_target(cross, ij) == simples(3, {3, 2}));
    CHECK(gen_degree(cross, ij) == 1);
    CHECK(gen_parity(cross, ij) == 0); // p_{23} = 0
    CHECK(gen_parity(cross, simples(3, {3, 2})) == 1); // p_{32} = 1
    CHECK(gen_degree(cross, simples(3, {1, 3})) == 0);
    CHECK(gen_degree(cross, ii) == -2);
}

TEST_CASE("basic operator values") {
    ScalarConfig sc;
    auto ii = simples(2, {1, 1});
    auto one = ExteriorElement::unit(ii);
    auto x1 = ExteriorElement::generator(ii, 0);

    // Dot multiplies by the strand generator.
    CHECK(evaluate(word(ii, {{GenKind::Dot, 0}}), one, sc) == x1);
    // Doubled dot vanishes.
    CHECK(evaluate(word(ii, {{GenKind::Dot, 0}, {GenKind::Dot, 0}}), one, sc).is_zero());
    // Same-color crossing acts by r_i times the Demazure operator.
    CHECK(evaluate(word(ii, {{GenKind::Cross, 0}}), x1, sc) == one);
    // Merge-down kills the unit.
    CHECK(evaluate(word(ii, {{GenKind::MergeDown, 0}}), one, sc).is_zero());
}

TEST_CASE("nilHecke dot-crossing relations, same color") {
    ScalarConfig sc;
    sc.set_r(1, 1);
    auto ii = simples(2, {1, 1});
    auto X = word(ii, {{GenKind::Cross, 0}});
    auto id = identity_morphism(ii);

    for (int strand = 0; strand < 2; ++strand) {
        LinearMorphism lhs = compose_vertical(word(ii, {{GenKind::Dot, strand}}), X);
        lhs += compose_vertical(X, word(ii, {{GenKind::Dot, strand}}));
        CHECK(op_equal(lhs, id, sc));
    }
}

TEST_CASE("R2 relation, all color cases") {
    for (int t12 : {1, -1})
        for (int t21 : {1, -1}) {
            ScalarConfig sc;
            sc.set_t(1, 2, t12);
            sc.set_t(2, 1, t21);
            sc.set_t(1, 3, -1);

            // i = j: double crossing is zero.
            auto ii = simples(3, {1, 1});
            auto XX = word(ii, {{GenKind::Cross, 0}, {GenKind::Cross, 0}});
            CHECK(op_equal(XX, LinearMorphism(), sc));

            // |i-j| > 1: t_ij times the identity.
            auto ik = simples(3, {1, 3});
            auto XXd = word(ik, {{GenKind::Cross, 0}, {GenKind::Cross, 0}});
            CHECK(op_equal(XXd, identity_morphism(ik) * sc.t(1, 3), sc));

            // |i-j| = 1: t_ij (dot left) + t_ji (dot right).
            for (auto colors : {std::pair{1, 2}, std::pair{2, 1}}) {
                auto ij = simples(3, {colors.first, colors.second});
                auto XXa = word(ij, {{GenKind::Cross, 0}, {GenKind::Cross, 0}});
                LinearMorphism rhs = word(ij, {{GenKind::Dot, 0}}) *
                                     sc.t(colors.first, colors.second);
                rhs += word(ij, {{GenKind::Dot, 1}}) * sc.t(colors.second, colors.first);
                CHECK(op_equal(XXa, rhs, sc));
            }
        }
}

TEST_CASE("digons, dumbbell and zero pitchforks") {
    ScalarConfig sc;
    ColoredSequence dd(2, {{1, 2}});
    auto ii = simples(2, {1, 1});

    auto S = word(dd, {{GenKind::SplitUp, 0}});
    auto M = word(ii, {{GenKind::MergeDown, 0}});
    auto X = word(ii, {{GenKind::Cross, 0}});

    // Dotted digons are the identity, undotted digon is zero.
    for (int strand : {0, 1}) {
        auto digon = compose_vertical(M, compose_vertical(word(ii, {{GenKind::Dot, strand}}), S));
        CHECK(op_equal(digon, identity_morphism(dd), sc));
    }
    CHECK(op_equal(compose_vertical(M, S), LinearMorphism(), sc));

    // Merge then split equals the same-color crossing.
    CHECK(op_equal(compose_vertical(S, M), X, sc));

    // Crossing atop a split and merge atop a crossing vanish.
    CHECK(op_equal(compose_vertical(X, S), LinearMorphism(), sc));
    CHECK(op_equal(compose_vertical(M, X), LinearMorphism(), sc));
}

TEST_CASE("super interchange under evaluation") {
    ScalarConfig sc;
    // odd x odd: a dot beside a dot.
    auto i = simples(3, {1});
    auto j = simples(3, {3});
    auto dot_i = word(i, {{GenKind::Dot, 0}});
    auto dot_j = word(j, {{GenKind::Dot, 0}});
    auto normal = compose_horizontal(dot_i, dot_j);
    auto reordered = compose_horizontal_late_left(dot_i, dot_j);
    auto ctx = i.concat(j);
    for (Mono m : basis(ctx)) {
        auto x = ExteriorElement::monomial(ctx, m);
        CHECK(evaluate(normal, x, sc) == evaluate(reordered, x, sc) * -1);
    }

    // odd x odd with a splitter: split-up is odd.
    ColoredSequence dj(3, {{3, 2}});
    auto split_j = word(dj, {{GenKind::SplitUp, 0}});
    auto normal2 = compose_horizontal(dot_i, split_j);
    auto reordered2 = compose_horizontal_late_left(dot_i, split_j);
    auto ctx2 = i.concat(dj);
    for (Mono m : basis(ctx2)) {
        auto x = ExteriorElement::monomial(ctx2, m);
        CHECK(evaluate(normal2, x, sc) == evaluate(reordered2, x, sc) * -1);
    }

    // even x odd keeps the sign.
    auto jj = simples(3, {3, 3});
    auto merge_j = word(jj, {{GenKind::MergeDown, 0}});
    auto normal3 = compose_horizontal(merge_j, dot_i);
    auto reordered3 = compose_horizontal_late_left(merge_j, dot_i);
    auto ctx3 = jj.concat(i);
    for (Mono m : basis(ctx3)) {
        auto x = ExteriorElement::monomial(ctx3, m);
        CHECK(evaluate(normal3, x, sc) == evaluate(reordered3, x, sc));
    }
}

TEST_CASE("declared degree and parity shifts hold on every monomial") {
    ScalarConfig sc;
    sc.set_t(1, 2, -1);
    sc.set_t(3, 2, -1);

    std::vector<ColoredSequence> contexts = {
        simples(4, {1, 1}),  simples(4, {1, 2}),          simples(4, {2, 1}),
        simples(4, {1, 3}),  ColoredSequence(4, {{2, 2}, {3, 1}}),
        ColoredSequence(4, {{3, 1}, {2, 2}}),             ColoredSequence(4, {{1, 2}, {2, 2}}),
        ColoredSequence(4, {{2, 2}}),                     simples(4, {2, 2}),
        ColoredSequence(4, {{1, 1}, {1, 1}, {2, 2}}),
    };
    for (const auto& ctx : contexts) {
        std::vector<Gen> gens;
        for (int r = 0; r < ctx.size(); ++r) {
            if (ctx.strand(r).thickness == 1) gens.push_back({GenKind::Dot, r});
            if (ctx.strand(r).thickness == 2) gens.push_back({GenKind::SplitUp, r});
            if (r + 1 < ctx.size()) {
                gens.push_back({GenKind::Cross, r});
                if (ctx.strand(r).thickness == 1 && ctx.strand(r + 1).thickness == 1 &&
                    ctx.strand(r).color == ctx.strand(r + 1).color)
                    gens.push_back({GenKind::MergeDown, r});
            }
        }
        for (const auto& g : gens) {
            const int deg = gen_degree(g, ctx);
            const int par = gen_parity(g, ctx);
            for (Mono m : basis(ctx)) {
                auto out = apply_generator(g, ExteriorElement::monomial(ctx, m), sc);
                if (out.is_zero()) continue;
                CHECK(out.homogeneous());
                CHECK(out.qdegree() - ExteriorElement::monomial(ctx, m).qdegree() == deg);
                int in_par = mono_degree(m) + ctx.parity_offset_before(ctx.size());
                int out_par = out.degree() + out.context().parity_offset_before(out.context().size());
                CHECK(((out_par - in_par) & 1) == par);
            }
        }
    }
}

TEST_CASE("functoriality of evaluation") {
    ScalarConfig sc;
    sc.set_t(1, 2, -1);
    auto iji = simples(3, {1, 2, 1});
    auto a = word(iji, {{GenKind::Cross, 0}});
    auto b = word(simples(3, {2, 1, 1}), {{GenKind::Cross, 1}, {GenKind::MergeDown, 1}});
    auto ab = compose_vertical(b, a);
    for (Mono m : basis(iji)) {
        auto x = ExteriorElement::monomial(iji, m);
        CHECK(evaluate(ab, x, sc) == evaluate(b, evaluate(a, x, sc), sc));
    }
}
