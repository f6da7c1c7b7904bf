#include "ev/graph.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace ev {

std::vector<GraphViolation> PortedGraph::validate() const {
    std::vector<GraphViolation> out;
    if (n_ < 0) out.push_back({"negative vertex count"});
    std::vector<int> seen(std::max(0, n_) * 4, 0);
    auto touch = [&](const PortRef& r) {
        std::ostringstream os;
        if (r.v < 0 || r.v >= n_) {
            os << "vertex " << r.v << " out of range";
            out.push_back({os.str()});
            return;
        }
        if (r.p < 1 || r.p > 4) {
            os << "port " << r.p << " out of range at vertex " << r.v;
            out.push_back({os.str()});
            return;
        }
        if (++seen[r.v * 4 + (r.p - 1)] == 2) {
            os << "duplicate port: vertex " << r.v << " port " << r.p;
            out.push_back({os.str()});
        }
    };
    for (const auto& e : edges_) {
        touch(e.a);
        touch(e.b);
        if (e.a.v == e.b.v && e.a.p == e.b.p) out.push_back({"edge endpoints coincide"});
    }
    for (int v = 0; v < n_; ++v)
        for (int p = 0; p < 4; ++p)
            if (seen[v * 4 + p] == 0) {
                std::ostringstream os;
                os << "unused port: vertex " << v << " port " << (p + 1);
                out.push_back({os.str()});
            }
    if (int(edges_.size()) != 2 * n_ && out.empty()) out.push_back({"edge count is not 2n"});
    return out;
}

void PortedGraph::require_valid() const {
    auto v = validate();
    if (!v.empty()) throw domain_error("invalid graph: " + v.front().what);
}

int PortedGraph::edge_at(int v, int p) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if ((edges_[i].a.v == v && edges_[i].a.p == p) || (edges_[i].b.v == v && edges_[i].b.p == p))
            return int(i);
    return -1;
}

int PortedGraph::component_count() const {
    if (n_ == 0) return 0;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges_) parent[find(e.a.v)] = find(e.b.v);
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if (find(v) == v) ++k;
    return k;
}

std::vector<GraphViolation> validate_graph(const PortedGraph& g) { return g.validate(); }

Scalar z_eight_vertex(const PortedGraph& g, const Scalar& a, const Scalar& b,
                      const Scalar& c, const Scalar& d, std::uint64_t cap) {
    g.require_valid();
    const auto& edges = g.edges();
    size_t m = edges.size();
    if (m >= 63 || (std::uint64_t(1) << m) > cap)
        throw domain_error("orientation enumeration exceeds brute-force cap; no contraction path for orientations");

    ConstraintFunction4 f = eight_vertex_signature(a, b, c, d);
    int n = g.vertex_count();
    bool exact = a.is_exact() && b.is_exact() && c.is_exact() && d.is_exact();
    Scalar total = exact ? Scalar(0) : Scalar::flt(0.0);

    std::vector<int> pattern(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::fill(pattern.begin(), pattern.end(), 0);
        // bit = 1: oriented from endpoint a to endpoint b
        for (size_t i = 0; i < m; ++i) {
            int bit = int((mask >> i) & 1);
            const auto& e = edges[i];
            if (bit) pattern[e.a.v] |= 1 << (4 - e.a.p);  // outgoing at a-side port
            else pattern[e.b.v] |= 1 << (4 - e.b.p);
        }
        Scalar w(1);
        bool dead = false;
        for (int v = 0; v < n && !dead; ++v) {
            const Scalar& pv = f.at(pattern[v]);
            if (pv.is_zero()) dead = true;
            else w *= pv;
        }
        if (!dead) total += w;
    }
    return total;
}

std::uint64_t count_even_orientations(const PortedGraph& g) {
    g.require_valid();
    const auto& edges = g.edges();
    size_t m = edges.size();
    if (m >= 30) throw domain_error("graph too large for orientation enumeration");
    int n = g.vertex_count();
    std::uint64_t count = 0;
    std::vector<int> deg(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (size_t i = 0; i < m; ++i) {
            int bit = int((mask >> i) & 1);
            deg[bit ? edges[i].a.v : edges[i].b.v] ^= 1;
        }
        bool even = true;
        for (int v = 0; v < n; ++v) even &= (deg[v] == 0);
        if (even) ++count;
    }
    return count;
}

}  // namespace ev
