#include <doctest.h>

#include "ev/holant.hpp"
#include "ev/sampling.hpp"

using namespace ev;

namespace {

PortedGraph bond4() {
    std::vector<GraphEdge> edges;
    for (int p = 1; p <= 4; ++p) edges.push_back({{0, p}, {1, p}});
    return PortedGraph(2, edges);
}

ConstraintFunction4 even_ones() {
    ConstraintFunction4 f;
    for (int i : {0b0000, 0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111})
        f.at(i) = Scalar(1);
    return f;
}

}  // namespace

TEST_CASE("holant_bruteforce spec examples") {
    Mat4 m;
    m.at(0, 0) = Scalar(4);
    m.at(3, 3) = Scalar(4);
    auto inst = HolantInstance::uniform(bond4(), ConstraintFunction4::from_matrix(m));
    CHECK(holant_bruteforce(inst) == Scalar(32));

    PortedGraph loops(1, {{{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}});
    CHECK(holant_bruteforce(HolantInstance::uniform(loops, even_ones())) == Scalar(4));

    auto zero = HolantInstance::uniform(bond4(), ConstraintFunction4::zero());
    CHECK(holant_bruteforce(zero).is_zero());
}

TEST_CASE("brute-force cap points at holant_contract") {
    auto inst = HolantInstance::uniform(bond4(), even_ones());
    CHECK_THROWS_WITH_AS(holant_bruteforce(inst, 8), "assignment space exceeds brute-force cap; use holant_contract",
                         domain_error);
    CHECK(holant_contract(inst) == holant_bruteforce(inst));
}

TEST_CASE("holant_contract basics") {
    HolantInstance empty(PortedGraph(0, {}), {});
    CHECK(holant_contract(empty) == Scalar(1));

    // disconnected instance: value is the product of component values
    Sampler rng(17);
    PortedGraph g1 = rng.four_regular(2), g2 = rng.four_regular(1);
    std::vector<GraphEdge> edges = g1.edges();
    for (auto e : g2.edges())
        edges.push_back({{e.a.v + 2, e.a.p}, {e.b.v + 2, e.b.p}});
    PortedGraph both(3, edges);
    auto f = even_ones();
    Scalar v1 = holant_contract(HolantInstance::uniform(g1, f));
    Scalar v2 = holant_contract(HolantInstance::uniform(g2, f));
    CHECK(holant_contract(HolantInstance::uniform(both, f)) == v1 * v2);
}

TEST_CASE("contract agrees with brute force on random instances") {
    Sampler rng(23);
    for (int i = 0; i < 12; ++i) {
        int n = int(rng.uniform(1, 5));
        PortedGraph g = rng.four_regular(n);
        std::vector<ConstraintFunction4> fv;
        for (int v = 0; v < n; ++v) fv.push_back(rng.random_signature(3, 2));
        HolantInstance inst(g, fv);
        if (i % 2) inst.set_connectors({BinaryConnector::NEQ2});
        CHECK(holant_contract(inst) == holant_bruteforce(inst));
    }
}
