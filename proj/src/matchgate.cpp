#include "ev/matchgate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ev {

void Matchgate::require_valid() const {
    if (n_ <= 0) throw domain_error("matchgate needs at least one vertex");
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw domain_error("matchgate edge endpoint out of range");
        if (!e.w.nonnegative_real()) throw domain_error("matchgate edge weights must be nonnegative");
    }
    for (int v : dangling_) {
        if (v < 0 || v >= n_) throw domain_error("dangling port attached out of range");
    }
}

Matchgate Matchgate::k4(const std::array<Scalar, 6>& w) {
    std::vector<Edge> edges = {
        {0, 1, w[0]}, {2, 3, w[1]}, {0, 3, w[2]}, {1, 2, w[3]}, {0, 2, w[4]}, {1, 3, w[5]},
    };
    return Matchgate(4, std::move(edges), {0, 1, 2, 3});
}

namespace {

struct Adjacency {
    // per vertex: (neighbor, edge index); loops excluded (never matchable)
    std::vector<std::vector<std::pair<int, int>>> adj;

    explicit Adjacency(const Matchgate& mg) : adj(mg.vertex_count()) {
        const auto& es = mg.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            if (es[i].u == es[i].v) continue;
            adj[es[i].u].push_back({es[i].v, int(i)});
            adj[es[i].v].push_back({es[i].u, int(i)});
        }
    }
};

// Sums weight products of perfect matchings of the internal graph over the
// vertices not in `covered`.
Scalar matching_sum(const Matchgate& mg, const Adjacency& adj, unsigned covered) {
    int n = mg.vertex_count();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (!((covered >> v) & 1)) {
            u = v;
            break;
        }
    if (u < 0) return Scalar(1);
    Scalar total(0);
    for (auto [w, ei] : adj.adj[u]) {
        if ((covered >> w) & 1) continue;
        if (mg.edges()[ei].w.is_zero()) continue;
        Scalar sub = matching_sum(mg, adj, covered | (1u << u) | (1u << w));
        if (!sub.is_zero()) total += mg.edges()[ei].w * sub;
    }
    return total;
}

// Enumerates the matchings themselves (as sorted internal edge-index sets).
void enumerate_matchings(const Matchgate& mg, const Adjacency& adj, unsigned covered,
                         std::vector<int>& picked, std::vector<std::vector<int>>& out) {
    int n = mg.vertex_count();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (!((covered >> v) & 1)) {
            u = v;
            break;
        }
    if (u < 0) {
        out.push_back(picked);
        return;
    }
    for (auto [w, ei] : adj.adj[u]) {
        if ((covered >> w) & 1) continue;
        picked.push_back(ei);
        enumerate_matchings(mg, adj, covered | (1u << u) | (1u << w), picked, out);
        picked.pop_back();
    }
}

}  // namespace

ConstraintFunction4 matchgate_signature(const Matchgate& mg) {
    mg.require_valid();
    if (mg.vertex_count() > kMatchgateVertexCap)
        throw domain_error("matchgate too large for enumeration");
    Adjacency adj(mg);
    ConstraintFunction4 f;
    for (int pat = 0; pat < 16; ++pat) {
        unsigned covered = 0;
        bool double_covered = false;
        for (int port = 0; port < 4; ++port)
            if ((pat >> (3 - port)) & 1) {
                unsigned bit = 1u << mg.dangling()[port];
                if (covered & bit) double_covered = true;  // two dangling edges on one vertex
                covered |= bit;
            }
        f.at(pat) = double_covered ? Scalar(0) : matching_sum(mg, adj, covered);
    }
    return f;
}

Matchgate flip_port(const Matchgate& mg, int port) {
    mg.require_valid();
    if (port < 1 || port > 4) throw domain_error("port out of range");
    int x = mg.vertex_count();
    auto edges = mg.edges();
    auto dang = mg.dangling();
    edges.push_back({dang[port - 1], x, Scalar(1)});
    dang[port - 1] = x;
    return Matchgate(x + 1, std::move(edges), dang);
}

Matchgate attach_port_scaler(const Matchgate& mg, int port, const Scalar& s, const Scalar& t) {
    mg.require_valid();
    if (port < 1 || port > 4) throw domain_error("port out of range");
    if (!s.nonnegative_real() || !t.nonnegative_real())
        throw domain_error("scaler weights must be nonnegative");
    int x = mg.vertex_count(), y = x + 1;
    auto edges = mg.edges();
    auto dang = mg.dangling();
    edges.push_back({dang[port - 1], x, s});
    edges.push_back({x, y, t});
    dang[port - 1] = y;
    return Matchgate(y + 1, std::move(edges), dang);
}

ConstraintFunction4 GeneralSignature8::to_signature() const {
    ConstraintFunction4 f;
    if (parity == Parity::even) {
        f.at(0b0000) = d1;
        f.at(0b0011) = a1;
        f.at(0b0110) = b1;
        f.at(0b0101) = c1;
        f.at(0b1010) = c2;
        f.at(0b1001) = b2;
        f.at(0b1100) = a2;
        f.at(0b1111) = d2;
    } else {
        // S^O shape: M = [[0,d1,a1,0],[b1,0,0,c1],[c2,0,0,b2],[0,a2,d2,0]]
        f.at(0b0010) = d1;
        f.at(0b0001) = a1;
        f.at(0b0100) = b1;
        f.at(0b0111) = c1;
        f.at(0b1000) = c2;
        f.at(0b1011) = b2;
        f.at(0b1110) = a2;
        f.at(0b1101) = d2;
    }
    return f;
}

GeneralSignature8 GeneralSignature8::from_signature(const ConstraintFunction4& f) {
    Parity p = f.parity();
    GeneralSignature8 s;
    if (p == Parity::even || p == Parity::zero) {
        s.parity = Parity::even;
        s.d1 = f.at(0b0000);
        s.a1 = f.at(0b0011);
        s.b1 = f.at(0b0110);
        s.c1 = f.at(0b0101);
        s.c2 = f.at(0b1010);
        s.b2 = f.at(0b1001);
        s.a2 = f.at(0b1100);
        s.d2 = f.at(0b1111);
    } else if (p == Parity::odd) {
        s.parity = Parity::odd;
        s.d1 = f.at(0b0010);
        s.a1 = f.at(0b0001);
        s.b1 = f.at(0b0100);
        s.c1 = f.at(0b0111);
        s.c2 = f.at(0b1000);
        s.b2 = f.at(0b1011);
        s.a2 = f.at(0b1110);
        s.d2 = f.at(0b1101);
    } else {
        throw domain_error("signature has mixed parity");
    }
    return s;
}

Membership membership(const GeneralSignature8& s) {
    for (const Scalar& e : s.entries())
        if (!e.nonnegative_real()) throw domain_error("membership requires nonnegative entries");
    std::array<Scalar, 4> prod = {s.prod_d(), s.prod_a(), s.prod_b(), s.prod_c()};
    Membership m;
    Scalar sum = prod[0] + prod[1] + prod[2] + prod[3];
    bool any_tight = false, any_violated = false;
    for (int i = 0; i < 4; ++i) {
        m.slack[i] = sum - prod[i] - prod[i];  // (sum of others) - prod_i
        bool exact = m.slack[i].is_exact();
        if (exact ? m.slack[i].is_zero()
                  : approx_equal(prod[i].to_double(), (sum - prod[i]).to_double(), float_tolerance()))
            m.tight[i] = any_tight = true;
        else if (lt(m.slack[i], Scalar(0)))
            m.violated[i] = any_violated = true;
    }
    m.kind = any_violated ? MembershipKind::outside
                          : (any_tight ? MembershipKind::boundary : MembershipKind::interior);
    return m;
}

InjectionReport check_injection_mu(const Matchgate& mg) {
    mg.require_valid();
    if (mg.vertex_count() > kMatchgateVertexCap)
        throw domain_error("matchgate too large for enumeration");
    Adjacency adj(mg);
    const auto& dang = mg.dangling();

    auto collect = [&](unsigned pat) {
        unsigned covered = 0;
        std::vector<std::vector<int>> out;
        for (int port = 0; port < 4; ++port)
            if ((pat >> (3 - port)) & 1) {
                unsigned bit = 1u << dang[port];
                if (covered & bit) return out;  // double-covered vertex: no matchings
                covered |= bit;
            }
        std::vector<int> picked;
        enumerate_matchings(mg, adj, covered, picked, out);
        for (auto& m : out) std::sort(m.begin(), m.end());
        return out;
    };

    // Dangling edges get ids m, m+1, m+2, m+3 after the internal edges.
    int m = int(mg.edges().size());
    auto with_dangling = [&](std::vector<int> match, std::initializer_list<int> ports) {
        for (int p : ports) match.push_back(m + p);
        std::sort(match.begin(), match.end());
        return match;
    };

    auto m12 = collect(0b1100), m34 = collect(0b0011);
    auto weight_of = [&](const std::vector<int>& match) {
        Scalar w(1);
        for (int ei : match)
            if (ei < m) w *= mg.edges()[ei].w;
        return w;
    };

    InjectionReport rep;
    if (m12.empty() || m34.empty()) {
        rep.vacuous = true;
        rep.injective = rep.weight_preserving = rep.inequality_holds = true;
        return rep;
    }

    // endpoint lookup: dangling edge m+p has single endpoint dang[p]
    auto endpoints = [&](int ei) -> std::pair<int, int> {
        if (ei < m) return {mg.edges()[ei].u, mg.edges()[ei].v};
        return {dang[ei - m], -1};
    };

    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    rep.injective = true;
    rep.weight_preserving = true;
    for (const auto& raw1 : m12)
        for (const auto& raw2 : m34) {
            auto m1 = with_dangling(raw1, {0, 1});
            auto m2 = with_dangling(raw2, {2, 3});
            // symmetric difference
            std::vector<int> sym;
            std::set_symmetric_difference(m1.begin(), m1.end(), m2.begin(), m2.end(),
                                          std::back_inserter(sym));
            // walk the path from dangling port 1
            std::map<int, std::vector<int>> incident;
            for (int ei : sym) {
                auto [u, v] = endpoints(ei);
                incident[u].push_back(ei);
                if (v >= 0) incident[v].push_back(ei);
            }
            std::set<int> path;
            int cur_edge = m + 0;
            int cur_vertex = dang[0];
            path.insert(cur_edge);
            while (true) {
                int next_edge = -1;
                for (int ei : incident[cur_vertex])
                    if (ei != cur_edge && !path.count(ei)) {
                        next_edge = ei;
                        break;
                    }
                if (next_edge < 0) break;
                path.insert(next_edge);
                auto [u, v] = endpoints(next_edge);
                if (v < 0) break;  // reached another dangling edge
                cur_vertex = (u == cur_vertex) ? v : u;
                cur_edge = next_edge;
            }
            auto xor_with_path = [&](const std::vector<int>& match) {
                std::vector<int> out;
                for (int ei : match)
                    if (!path.count(ei)) out.push_back(ei);
                for (int ei : path)
                    if (!std::binary_search(match.begin(), match.end(), ei)) out.push_back(ei);
                std::sort(out.begin(), out.end());
                return out;
            };
            auto m3 = xor_with_path(m1), m4 = xor_with_path(m2);
            if (!images.insert({m3, m4}).second) rep.injective = false;
            if (!(weight_of(m1) * weight_of(m2) == weight_of(m3) * weight_of(m4)))
                rep.weight_preserving = false;
            rep.pairs++;
        }

    ConstraintFunction4 f = matchgate_signature(mg);
    Scalar lhs = f.at(0b0011) * f.at(0b1100);
    Scalar rhs = f.at(0b0110) * f.at(0b1001) + f.at(0b0101) * f.at(0b1010) +
                 f.at(0b0000) * f.at(0b1111);
    rep.inequality_holds = le(lhs, rhs) || lhs == rhs;
    return rep;
}

}  // namespace ev
