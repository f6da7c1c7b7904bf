#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ev/signature.hpp"

namespace ev {

struct PortRef {
    int v = 0;
    int p = 1;  // port in 1..4

    bool operator==(const PortRef& o) const { return v == o.v && p == o.p; }
};

struct GraphEdge {
    PortRef a, b;  // loops allowed (a.v == b.v, a.p != b.p)
};

struct GraphViolation {
    std::string what;
};

// 4-regular multigraph with port-labeled endpoints. Every (vertex, port)
// pair is used by exactly one edge endpoint; |E| = 2n.
class PortedGraph {
public:
    PortedGraph() = default;
    PortedGraph(int n, std::vector<GraphEdge> edges) : n_(n), edges_(std::move(edges)) {}

    int vertex_count() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::vector<GraphViolation> validate() const;
    bool valid() const { return validate().empty(); }
    void require_valid() const;

    // edge index occupying (v, p); -1 if unused. Only meaningful on valid graphs.
    int edge_at(int v, int p) const;
    int component_count() const;

private:
    int n_ = 0;
    std::vector<GraphEdge> edges_;
};

std::vector<GraphViolation> validate_graph(const PortedGraph& g);

inline constexpr std::uint64_t kDefaultBruteforceCap = std::uint64_t(1) << 24;

// Z_EightVertex(G; a,b,c,d): sum over even orientations of per-vertex weights.
// A local pattern x1x2x3x4 (xi = 1 iff the edge at port i points away) is
// weighted by the corresponding entry of eight_vertex_signature(a,b,c,d).
Scalar z_eight_vertex(const PortedGraph& g, const Scalar& a, const Scalar& b,
                      const Scalar& c, const Scalar& d,
                      std::uint64_t cap = kDefaultBruteforceCap);

// Number of even orientations, by enumeration.
std::uint64_t count_even_orientations(const PortedGraph& g);

}  // namespace ev
