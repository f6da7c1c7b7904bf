#pragma once

#include <vector>

#include "ev/holant.hpp"

namespace ev {

// Multigraph with loops; vertices are crossing circuits, each edge is
// labeled by the 4-regular vertex it came from.
struct IsingGraph {
    struct Edge {
        int u = 0, v = 0;  // loop when u == v
        int label = -1;
    };

    int n = 0;
    std::vector<Edge> edges;

    int component_count() const;
    bool has_isolated_vertex() const;
};

// Partitions the edges of g into circuits by pairing ports (1,3) and (2,4)
// at every vertex; one Ising vertex per circuit, one edge per source vertex.
IsingGraph crossing_circuit_graph(const PortedGraph& g);

// Inverse construction: a 4-regular graph whose crossing-circuit graph is h
// (label-preserving). Loops become self-intersections, edges become
// crossings labeled 1,3 on one circuit and 2,4 on the other.
PortedGraph lift_to_four_regular(const IsingGraph& h);

// Z_Ising(h; beta) = sum over spin assignments of beta^mono.
Scalar z_ising(const IsingGraph& h, const Scalar& beta, std::uint64_t cap = kDefaultBruteforceCap);

struct IsingIdentityReport {
    Scalar holant_side;
    Scalar ising_side;
    bool equal = false;
    int circuit_count = 0;
};

// Checks Holant(g; [[w,0,0,0],[0,0,z,0],[0,z,0,0],[0,0,0,w]])
//        = z^{|V|} * Z_Ising(crossing_circuit_graph(g); w/z).
// Requires z != 0 (z = 0 is the trivially solvable case).
IsingIdentityReport verify_ising_identity(const PortedGraph& g, const Scalar& w, const Scalar& z);

// True when phi is a label-preserving isomorphism exists between
// crossing_circuit_graph(lift_to_four_regular(h)) and h.
bool crossing_circuit_roundtrip_ok(const IsingGraph& h);

}  // namespace ev
