#include "ev/ising.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ev {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Strand node ids: 2v for ports {1,3} of v, 2v+1 for ports {2,4}.
inline int strand_node(const PortRef& r) { return 2 * r.v + ((r.p == 1 || r.p == 3) ? 0 : 1); }

// Connected components of the strand graph; returns (component id per strand, count).
std::pair<std::vector<int>, int> circuit_components(const PortedGraph& g) {
    UnionFind uf(2 * g.vertex_count());
    for (const auto& e : g.edges()) uf.unite(strand_node(e.a), strand_node(e.b));
    std::vector<int> comp(2 * g.vertex_count(), -1);
    int next = 0;
    std::map<int, int> remap;
    for (int s = 0; s < 2 * g.vertex_count(); ++s) {
        int root = uf.find(s);
        auto it = remap.find(root);
        if (it == remap.end()) it = remap.emplace(root, next++).first;
        comp[s] = it->second;
    }
    return {comp, next};
}

}  // namespace

int IsingGraph::component_count() const {
    if (n == 0) return 0;
    UnionFind uf(n);
    for (const auto& e : edges) uf.unite(e.u, e.v);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (uf.find(v) == v) ++k;
    return k;
}

bool IsingGraph::has_isolated_vertex() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    return std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

IsingGraph crossing_circuit_graph(const PortedGraph& g) {
    g.require_valid();
    auto [comp, count] = circuit_components(g);
    IsingGraph h;
    h.n = count;
    for (int v = 0; v < g.vertex_count(); ++v)
        h.edges.push_back({comp[2 * v], comp[2 * v + 1], v});
    return h;
}

PortedGraph lift_to_four_regular(const IsingGraph& h) {
    if (h.has_isolated_vertex()) throw domain_error("isolated vertex has no crossing-circuit preimage");
    // One 4-regular vertex per Ising edge; its ports 1,3 carry the circuit of
    // edge endpoint u, ports 2,4 the circuit of endpoint v (second visit for loops).
    struct Visit {
        int x;       // crossing vertex = Ising edge index
        int in, out; // entry/exit ports
    };
    std::vector<std::vector<Visit>> circuit(h.n);
    for (size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        circuit[e.u].push_back({int(i), 1, 3});
        circuit[e.v].push_back({int(i), 2, 4});
    }
    std::vector<GraphEdge> edges;
    for (int u = 0; u < h.n; ++u) {
        const auto& vs = circuit[u];
        for (size_t j = 0; j < vs.size(); ++j) {
            const Visit& cur = vs[j];
            const Visit& nxt = vs[(j + 1) % vs.size()];
            edges.push_back({{cur.x, cur.out}, {nxt.x, nxt.in}});
        }
    }
    PortedGraph g(int(h.edges.size()), std::move(edges));
    g.require_valid();
    return g;
}

Scalar z_ising(const IsingGraph& h, const Scalar& beta, std::uint64_t cap) {
    if (h.n >= 63 || (std::uint64_t(1) << h.n) > cap)
        throw domain_error("spin space exceeds brute-force cap");
    size_t m = h.edges.size();
    std::vector<std::uint64_t> by_mono(m + 1, 0);
    for (std::uint64_t sigma = 0; sigma < (std::uint64_t(1) << h.n); ++sigma) {
        size_t mono = 0;
        for (const auto& e : h.edges)
            if (((sigma >> e.u) & 1) == ((sigma >> e.v) & 1)) ++mono;
        by_mono[mono]++;
    }
    Scalar total(0);
    Scalar pw(1);
    for (size_t k = 0; k <= m; ++k) {
        if (by_mono[k] != 0) total += pw * Scalar(Rational(long(by_mono[k])));
        pw *= beta;
    }
    return total;
}

IsingIdentityReport verify_ising_identity(const PortedGraph& g, const Scalar& w, const Scalar& z) {
    g.require_valid();
    if (z.is_zero())
        throw domain_error("z = 0 is the trivially solvable case; the identity needs z != 0");

    Mat4 m;
    m.at(0, 0) = w;
    m.at(3, 3) = w;
    m.at(1, 2) = z;
    m.at(2, 1) = z;
    auto inst = HolantInstance::uniform(g, ConstraintFunction4::from_matrix(m));
    Scalar lhs = g.edges().size() <= 20 ? holant_bruteforce(inst) : holant_contract(inst);

    IsingGraph ccg = crossing_circuit_graph(g);
    Scalar zi = z_ising(ccg, w / z);
    Scalar zpow(1);
    for (int i = 0; i < g.vertex_count(); ++i) zpow *= z;
    Scalar rhs = zpow * zi;

    return {lhs, rhs, lhs == rhs, ccg.n};
}

bool crossing_circuit_roundtrip_ok(const IsingGraph& h) {
    PortedGraph g = lift_to_four_regular(h);
    auto [comp, count] = circuit_components(g);
    if (count != h.n) return false;
    // Crossing vertex i came from Ising edge i; its strand {1,3} lay on the
    // circuit of h.edges[i].u and strand {2,4} on that of h.edges[i].v.
    std::vector<int> fwd(h.n, -1);
    auto bind = [&](int from, int to) {
        if (fwd[from] == -1) fwd[from] = to;
        return fwd[from] == to;
    };
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (!bind(h.edges[i].u, comp[2 * int(i)])) return false;
        if (!bind(h.edges[i].v, comp[2 * int(i) + 1])) return false;
    }
    std::vector<int> hit(count, 0);
    for (int v = 0; v < h.n; ++v) {
        if (fwd[v] == -1) return false;  // unreachable: no isolated vertices
        if (hit[fwd[v]]++) return false;
    }
    return true;
}

}  // namespace ev
