#pragma once

#include <optional>
#include <vector>

#include "ev/graph.hpp"

namespace ev {

// A ported graph plus a per-vertex 4-ary function. When edge functions are
// present (the edge-vertex incidence view), every edge carries a binary
// function of its two half-edge values; otherwise each edge carries a single
// shared 0/1 value.
class HolantInstance {
public:
    HolantInstance(PortedGraph g, std::vector<ConstraintFunction4> per_vertex)
        : g_(std::move(g)), fv_(std::move(per_vertex)) {}

    static HolantInstance uniform(PortedGraph g, const ConstraintFunction4& f);

    const PortedGraph& graph() const { return g_; }
    const std::vector<ConstraintFunction4>& vertex_functions() const { return fv_; }

    bool has_edge_functions() const { return ef_.has_value(); }
    const std::vector<EdgeFunction2>& edge_functions() const { return *ef_; }
    void set_edge_functions(std::vector<EdgeFunction2> fns);
    void set_connectors(BinaryConnector conn);  // same connector on every edge

    void require_valid() const;

private:
    PortedGraph g_;
    std::vector<ConstraintFunction4> fv_;
    std::optional<std::vector<EdgeFunction2>> ef_;
};

Scalar holant_bruteforce(const HolantInstance& inst, std::uint64_t cap = kDefaultBruteforceCap);

// Same value as holant_bruteforce, via greedy tensor contraction.
Scalar holant_contract(const HolantInstance& inst);

}  // namespace ev
