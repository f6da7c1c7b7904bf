#include <doctest.h>

#include "ev/json_io.hpp"
#include "ev/sampling.hpp"

using namespace ev;

TEST_CASE("scalar json round-trips") {
    Scalar q(rational(22, 7));
    json j = scalar_to_json(q);
    CHECK(j.is_string());
    CHECK(scalar_from_json(j) == q);

    CHECK(scalar_from_json(json(3)) == Scalar(3));
    CHECK(scalar_from_json(json("3/2")) == Scalar(rational(3, 2)));
    CHECK(scalar_from_json(json("1.5")) == Scalar(rational(3, 2)));
    CHECK_FALSE(scalar_from_json(json(1.5)).is_exact());

    Scalar z = Scalar::exact(rational(1, 2), rational(-2, 3));
    CHECK(scalar_from_json(scalar_to_json(z)) == z);
}

TEST_CASE("signature json: eight_vertex shorthand and full entries") {
    auto f = eight_vertex_signature(Scalar(1), Scalar(rational(1, 2)), Scalar(3), Scalar(4));
    json j = signature_to_json(f);
    CHECK(j.contains("eight_vertex"));
    CHECK(signature_from_json(j) == f);

    Sampler rng(3);
    auto g = rng.random_signature();
    json jg = signature_to_json(g);
    if (!g.is_zero_field_even()) CHECK(jg.contains("entries"));
    CHECK(signature_from_json(jg) == g);

    CHECK(signature_from_json(json::parse(R"({"eight_vertex": [1, 1, 1, 1]})")) ==
          eight_vertex_signature(Scalar(1), Scalar(1), Scalar(1), Scalar(1)));
}

TEST_CASE("graph json") {
    Sampler rng(5);
    PortedGraph g = rng.four_regular(3);
    PortedGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count() == 3);
    REQUIRE(back.edges().size() == g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        CHECK(back.edges()[i].a == g.edges()[i].a);
        CHECK(back.edges()[i].b == g.edges()[i].b);
    }
}

TEST_CASE("matchgate json round-trips and re-evaluates identically") {
    Sampler rng(7);
    Matchgate mg = rng.random_matchgate(7, false);
    Matchgate back = matchgate_from_json(matchgate_to_json(mg));
    CHECK(matchgate_signature(back) == matchgate_signature(mg));
}

TEST_CASE("recipe json") {
    std::vector<RecipeStep> recipe = {
        RecipeStep::permute(AbcPerm::swap_bc), RecipeStep::g1(), RecipeStep::chain(4),
        RecipeStep::g2(), RecipeStep::scale(rational(1, 7))};
    json j = recipe_to_json(recipe);
    CHECK(j[0]["op"] == "permute");
    CHECK(j[2]["k"] == 4);
    auto back = recipe_from_json(j);
    REQUIRE(back.size() == recipe.size());
    GadgetParams p{Scalar(1), Scalar(2), Scalar(3), Scalar(1)};
    GadgetParams a = apply_recipe(p, recipe), b = apply_recipe(p, back);
    CHECK(a.a == b.a);
    CHECK(a.d == b.d);
}

TEST_CASE("verdict json shape") {
    Verdict v = verdict(Scalar(1), Scalar(1), Scalar(rational(3, 2)), Scalar(1));
    json j = verdict_to_json(v);
    CHECK(j["verdict"] == "PM-equivalent");
    CHECK(j["flags"]["in_SQSUM"] == true);
    CHECK(j["flags"]["in_dSUM"] == false);
    CHECK(j.contains("citations"));
    CHECK(j.contains("planar_note"));
}

TEST_CASE("tuple json") {
    json j = json::parse(R"({"tuple": [1, 1, 1, 1, 1, 1, 3, 1]})");
    GeneralSignature8 s = tuple_from_json(j, Parity::even);
    CHECK(s.d1 == Scalar(3));
    CHECK(membership(s).kind == MembershipKind::boundary);
}

TEST_CASE("normalize recipes survive the json round-trip") {
    GadgetParams p{Scalar(2), Scalar(0), Scalar(3), Scalar(1)};
    NormalizeResult nr = normalize_to_star(p);
    auto back = recipe_from_json(recipe_to_json(nr.recipe));
    GadgetParams replayed = apply_recipe(p, back);
    CHECK(replayed.a == nr.params.a);
    CHECK(replayed.b == nr.params.b);
    CHECK(replayed.c == nr.params.c);
    CHECK(replayed.d == nr.params.d);
}

TEST_CASE("trace json carries exact values and decimals") {
    GadgetParams start{Scalar(rational(6, 5)), Scalar(rational(13, 10)), Scalar(rational(3, 2)),
                       Scalar(1)};
    RoundTrace t = iterate_rounds(start, 3);
    json j = trace_to_json(t);
    CHECK(j["rounds"].size() == 3);
    CHECK(j["rounds"][0]["normalized"][0].contains("value"));
    CHECK(j["rounds"][0]["normalized"][0].contains("decimal"));
    CHECK(j["rounds"][0]["exact"] == true);
    CHECK(j.contains("bound"));
}
