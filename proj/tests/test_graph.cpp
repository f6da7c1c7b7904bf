#include <doctest.h>

#include "ev/graph.hpp"

using namespace ev;

namespace {

// two vertices joined by 4 aligned parallel edges (port i to port i)
PortedGraph bond4() {
    std::vector<GraphEdge> edges;
    for (int p = 1; p <= 4; ++p) edges.push_back({{0, p}, {1, p}});
    return PortedGraph(2, edges);
}

}  // namespace

TEST_CASE("validate_graph") {
    CHECK(bond4().valid());

    PortedGraph dup(1, {{{0, 1}, {0, 1}}, {{0, 2}, {0, 3}}});
    auto viol = validate_graph(dup);
    REQUIRE(!viol.empty());
    bool mentions_dup = false;
    for (const auto& v : viol) mentions_dup |= v.what.find("duplicate port") != std::string::npos;
    CHECK(mentions_dup);

    PortedGraph loops(1, {{{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}});
    CHECK(loops.valid());
}

TEST_CASE("z_eight_vertex on the 4-bond graph") {
    PortedGraph g = bond4();
    CHECK(z_eight_vertex(g, Scalar(1), Scalar(1), Scalar(1), Scalar(1)) == Scalar(8));
    CHECK(z_eight_vertex(g, Scalar(2), Scalar(1), Scalar(1), Scalar(1)) == Scalar(14));
    CHECK(z_eight_vertex(g, Scalar(0), Scalar(0), Scalar(0), Scalar(0)).is_zero());
    CHECK(count_even_orientations(g) == 8);  // 2^(E - V + k) = 2^(4-2+1)
}

TEST_CASE("invalid graphs are rejected by the evaluator") {
    PortedGraph bad(1, {{{0, 1}, {0, 2}}});
    CHECK_THROWS_AS(z_eight_vertex(bad, Scalar(1), Scalar(1), Scalar(1), Scalar(1)), domain_error);
}
