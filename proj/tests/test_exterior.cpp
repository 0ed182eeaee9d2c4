#include <catch2/catch_amalgamated.hpp>

#include "superklr/exterior.hpp"

using namespace superklr;

namespace {

ColoredSequence simples(int n, std::initializer_list<int> colors) {
    return ColoredSequence::simple(n, std::vector<int>(colors));
}

} // namespace

TEST_CASE("supercommutative product") {
    auto ctx = simples(2, {1, 2});
    auto x1 = ExteriorElement::generator(ctx, 0);
    auto x2 = ExteriorElement::generator(ctx, 1);

    CHECK(multiply(x1, x1).is_zero());
    CHECK(multiply(x2, x1) == multiply(x1, x2) * -1);

    // (x1 + x2) ^ (x1 + x2) = 0 by bilinearity and cancellation.
    auto s = x1 + x2;
    CHECK(multiply(s, s).is_zero());

    // Associativity on a three-strand context.
    auto ctx3 = simples(3, {1, 2, 3});
    auto a = ExteriorElement::generator(ctx3, 0) + ExteriorElement::unit(ctx3);
    auto b = ExteriorElement::generator(ctx3, 1) + ExteriorElement::generator(ctx3, 2);
    auto c = ExteriorElement::generator(ctx3, 0) + ExteriorElement::generator(ctx3, 2) * 3;
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("demazure operator values") {
    auto ctx = simples(2, {1, 1});
    auto x1 = ExteriorElement::generator(ctx, 0);
    auto x2 = ExteriorElement::generator(ctx, 1);

    CHECK(demazure(0, 1, x1) == ExteriorElement::unit(ctx));
    CHECK(demazure(0, 1, ExteriorElement::unit(ctx)).is_zero());
    // d(x1 ^ x2) = x2 - x1 by the signed Leibniz rule.
    CHECK(demazure(0, 1, multiply(x1, x2)) == x2 - x1);

    CHECK_THROWS(demazure(0, 1, x1 + ExteriorElement::unit(ctx)));
}

TEST_CASE("demazure relations for d <= 6") {
    for (int d = 2; d <= 6; ++d) {
        ColoredSequence ctx = ColoredSequence::simple(d, std::vector<int>(d, 1));
        for (Mono m : basis(ctx)) {
            auto f = ExteriorElement::monomial(ctx, m);
            for (int i = 1; i < d; ++i) {
                CHECK(demazure_adjacent(i, demazure_adjacent(i, f)).is_zero());
                for (int j = 1; j < d; ++j) {
                    if (std::abs(i - j) > 1) {
                        auto lhs = demazure_adjacent(i, demazure_adjacent(j, f)) +
                                   demazure_adjacent(j, demazure_adjacent(i, f));
                        CHECK(lhs.is_zero());
                    }
                }
                if (i + 1 < d) {
                    auto lhs = demazure_adjacent(
                        i, demazure_adjacent(i + 1, demazure_adjacent(i, f)));
                    auto rhs = demazure_adjacent(
                        i + 1, demazure_adjacent(i, demazure_adjacent(i + 1, f)));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("permutation action") {
    auto ctx = simples(2, {1, 1});
    auto x1 = ExteriorElement::generator(ctx, 0);
    auto x12 = multiply(x1, ExteriorElement::generator(ctx, 1));

    CHECK(permute({1, 0}, x1) == ExteriorElement::generator(ctx, 1));
    CHECK(permute({0, 1}, x12) == x12);
    CHECK(permute({1, 0}, x12) == x12 * -1);

    // Compose permutations on all basis monomials for d <= 5.
    std::vector<int> v{2, 0, 1, 4, 3}, w{1, 3, 0, 2, 4};
    std::vector<int> wv(5);
    for (int r = 0; r < 5; ++r) wv[r] = w[v[r]];
    ColoredSequence ctx5 = ColoredSequence::simple(5, {1, 2, 3, 4, 1});
    for (Mono m : basis(ctx5)) {
        auto f = ExteriorElement::monomial(ctx5, m);
        CHECK(permute(wv, f) == permute(w, permute(v, f)));
    }
}

TEST_CASE("basis enumeration") {
    auto one = simples(3, {2});
    CHECK(basis(one).size() == 2);

    ColoredSequence dbl(3, {{2, 2}});
    CHECK(basis(dbl).size() == 2);

    ColoredSequence mixed(4, {{1, 1}, {2, 2}, {3, 1}});
    CHECK(basis(mixed).size() == 8);
}
