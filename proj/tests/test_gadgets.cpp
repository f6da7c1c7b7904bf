#include <doctest.h>

#include <vector>

#include "ev/gadgets.hpp"
#include "ev/sampling.hpp"

using namespace ev;

namespace {

GadgetParams gp(long a, long b, long c, long d) {
    return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
}

bool same(const GadgetParams& x, const GadgetParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

}  // namespace

TEST_CASE("g1_step") {
    CHECK(same(g1_step(gp(2, 3, 4, 1)), gp(14, 13, 16, 7)));
    CHECK(same(g1_step(gp(1, 1, 1, 1)), gp(2, 2, 2, 2)));
    CHECK(same(g1_step(gp(1, 1, 2, 1)), gp(3, 3, 3, 3)));
    CHECK_THROWS_AS(g1_step(gp(3, 2, 1, 1)), domain_error);  // not ordered
    CHECK_THROWS_AS(g1_step(gp(1, 2, 3, 0)), domain_error);  // d = 0
}

TEST_CASE("g2_step") {
    CHECK(same(g2_step(gp(2, 3, 4, 1)), gp(12, 13, 17, 8)));
    CHECK(same(g2_step(gp(1, 1, 1, 1)), gp(2, 2, 2, 2)));
    CHECK(same(g2_step(gp(3, 4, 2, 1)), gp(24, 25, 5, 4)));  // cd = 2 <= ab = 12
    CHECK_THROWS_AS(g2_step(gp(1, 1, 5, 1)), domain_error);  // cd > ab
}

TEST_CASE("chain_power closed form") {
    CHECK(same(chain_power(gp(1, 1, 2, 1), 2), gp(2, 4, 5, 2)));
    GadgetParams p = gp(1, 2, 3, 4);
    CHECK(same(chain_power(p, 1), p));
    auto via_compose = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::chain(3)}));
    CHECK(same(chain_power(p, 3), {via_compose.a, via_compose.b, via_compose.c, via_compose.d}));
}

TEST_CASE("chain diagonalizer identity") {
    // coloring-view matrix of f equals P diag(a+d, c-b, a-d, c+b) P^{-1}
    Sampler rng(31);
    Scalar a(rng.positive_rational()), b(rng.positive_rational()), c(rng.positive_rational()),
        d(rng.positive_rational());
    Mat4 p = chain_diagonalizer();
    Mat4 diag;
    diag.at(0, 0) = a + d;
    diag.at(1, 1) = c - b;
    diag.at(2, 2) = a - d;
    diag.at(3, 3) = c + b;
    // P^{-1} = (1/2) adj structure; verify P * diag * Pinv = half the transformed matrix
    Mat4 pinv;
    Scalar half(rational(1, 2));
    pinv.at(0, 0) = half;
    pinv.at(0, 3) = -half;
    pinv.at(1, 1) = half;
    pinv.at(1, 2) = -half;
    pinv.at(2, 1) = half;
    pinv.at(2, 2) = half;
    pinv.at(3, 0) = half;
    pinv.at(3, 3) = half;
    // check P * Pinv = I
    Mat4 ident = p * pinv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ident.at(i, j) == (i == j ? Scalar(1) : Scalar(0)));

    Mat4 lhs = p * diag * pinv;
    ConstraintFunction4 transformed =
        eight_vertex_signature(-a + b + c - d, a - b + c - d, a + b - c - d, a + b + c + d)
            .scaled(half);
    CHECK(lhs == transformed.matrix_view());
}

TEST_CASE("gadget maps equal explicit contraction on random quadruples") {
    Sampler rng(37);
    for (int i = 0; i < 25; ++i) {
        GadgetParams p = rng.ordered_params();
        auto via = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::g1()}));
        CHECK(same(g1_step(p), {via.a, via.b, via.c, via.d}));
        if (le(p.c * p.d, p.a * p.b)) {
            auto via2 = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::g2()}));
            CHECK(same(g2_step(p), {via2.a, via2.b, via2.c, via2.d}));
        }
    }
}

TEST_CASE("iterate_rounds fixed point and worked start") {
    RoundTrace fixed = iterate_rounds(gp(1, 1, 1, 1), 5);
    CHECK(fixed.gap.is_zero());
    for (const auto& r : fixed.rounds) {
        CHECK(r.alpha == Scalar(1));
        CHECK(r.gamma == Scalar(1));
    }

    GadgetParams start{Scalar(rational(6, 5)), Scalar(rational(13, 10)), Scalar(rational(3, 2)),
                       Scalar(1)};
    // intermediate after G1: (3.36, 2.95, 3.39, 2.8) as exact rationals
    GadgetParams after_g1 = g1_step(start);
    CHECK(after_g1.a == Scalar(rational(84, 25)));
    CHECK(after_g1.b == Scalar(rational(59, 20)));
    CHECK(after_g1.c == Scalar(rational(339, 100)));
    CHECK(after_g1.d == Scalar(rational(14, 5)));
    CHECK(lt(after_g1.b, after_g1.a));  // the swap fires

    RoundTrace one = iterate_rounds(start, 1);
    REQUIRE(one.rounds.size() == 1);
    CHECK(one.rounds[0].swapped_after_g1);
    CHECK(doctest::Approx(one.rounds[0].alpha.to_double()).epsilon(5e-5) == 1.0183);
    CHECK(doctest::Approx(one.rounds[0].beta.to_double()).epsilon(5e-5) == 1.0442);
    CHECK(doctest::Approx(one.rounds[0].gamma.to_double()).epsilon(5e-5) == 1.0531);
    CHECK(le(one.gap, Scalar(rational(1, 4))));

    CHECK_THROWS_AS(iterate_rounds(gp(1, 1, 2, 1), 3), domain_error);  // c > (3/2) d
}

TEST_CASE("iterate_rounds 12-round bound") {
    GadgetParams start{Scalar(rational(6, 5)), Scalar(rational(13, 10)), Scalar(rational(3, 2)),
                       Scalar(1)};
    RoundTrace t = iterate_rounds(start, 12);
    REQUIRE(t.bound_applicable);
    CHECK(t.bound == rational(1, 256));
    CHECK(le(t.gap, Scalar(t.bound)));
    for (const auto& r : t.rounds) {
        CHECK(le(Scalar(1), r.alpha));
        CHECK(le(r.alpha, r.beta));
        CHECK(le(r.beta, r.gamma));
    }
}

TEST_CASE("normalize_to_star") {
    auto sym = normalize_to_star(gp(2, 2, 2, 2));
    CHECK(satisfies_star(sym.params));
    CHECK(!sym.notice.empty());

    for (GadgetParams p : {gp(1, 1, 2, 1), gp(2, 0, 3, 1), gp(5, 4, 3, 12), gp(1, 2, 3, 4)}) {
        auto nr = normalize_to_star(p);
        CHECK(satisfies_star(nr.params));
        CHECK(nr.params.d == Scalar(1));
        auto via = eight_vertex_params(replay_recipe_signature(p, nr.recipe));
        CHECK(same(nr.params, {via.a, via.b, via.c, via.d}));
    }

    CHECK_THROWS_AS(normalize_to_star(gp(0, 0, 3, 1)), domain_error);  // two zeros
    CHECK_THROWS_AS(normalize_to_star(gp(1, 2, 3, 0)), domain_error);  // d = 0
}

TEST_CASE("normalization over a coarse grid") {
    std::vector<Rational> vals = {Rational(0), Rational(1), Rational(2), Rational(5)};
    for (auto& a : vals)
        for (auto& b : vals)
            for (auto& c : vals)
                for (auto& d : {Rational(1), Rational(2)}) {
                    int zeros = (a == 0) + (b == 0) + (c == 0);
                    if (zeros > 1) continue;
                    if (a == d && b == d && c == d) continue;
                    GadgetParams p{Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
                    NormalizeResult nr = normalize_to_star(p);
                    CHECK(satisfies_star(nr.params));
                    auto rp = eight_vertex_params(replay_recipe_signature(p, nr.recipe));
                    CHECK(same(nr.params, {rp.a, rp.b, rp.c, rp.d}));
                }
}

TEST_CASE("round trace successor bookkeeping") {
    Sampler rng(41);
    for (int i = 0; i < 5; ++i) {
        GadgetParams p = rng.star_params();
        RoundTrace t = iterate_rounds(p, 6);
        REQUIRE(t.bound_applicable);
        CHECK(t.pigeonhole_k == 1);
        CHECK(le(t.gap, Scalar(t.bound)));
        int max_count[3] = {0, 0, 0};
        for (const auto& r : t.rounds) {
            std::array<bool, 3> seen{false, false, false};
            for (int o : r.origin) seen[o] = true;
            CHECK((seen[0] && seen[1] && seen[2]));
            max_count[r.max_origin]++;
        }
        // pigeonhole: over 3(k+1) rounds one origin holds the max in >= k+1
        CHECK(std::max({max_count[0], max_count[1], max_count[2]}) >= 2);
    }
}
