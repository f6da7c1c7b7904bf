#include "ev/holant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ev {

HolantInstance HolantInstance::uniform(PortedGraph g, const ConstraintFunction4& f) {
    std::vector<ConstraintFunction4> fv(g.vertex_count(), f);
    return HolantInstance(std::move(g), std::move(fv));
}

void HolantInstance::set_edge_functions(std::vector<EdgeFunction2> fns) {
    if (fns.size() != g_.edges().size()) throw domain_error("edge function count mismatch");
    ef_ = std::move(fns);
}

void HolantInstance::set_connectors(BinaryConnector conn) {
    ef_ = std::vector<EdgeFunction2>(g_.edges().size(), conn.function());
}

void HolantInstance::require_valid() const {
    g_.require_valid();
    if (int(fv_.size()) != g_.vertex_count())
        throw domain_error("invalid instance: assignment must cover every vertex");
}

Scalar holant_bruteforce(const HolantInstance& inst, std::uint64_t cap) {
    inst.require_valid();
    const auto& g = inst.graph();
    const auto& edges = g.edges();
    bool incidence = inst.has_edge_functions();
    size_t bits = incidence ? 2 * edges.size() : edges.size();
    if (bits >= 63 || (std::uint64_t(1) << bits) > cap)
        throw domain_error("assignment space exceeds brute-force cap; use holant_contract");

    int n = g.vertex_count();
    // mask bit feeding each (vertex, port); in the shared-edge view both
    // endpoints of edge i read bit i
    std::vector<std::array<int, 4>> port_bit(n, {0, 0, 0, 0});
    for (size_t i = 0; i < edges.size(); ++i) {
        port_bit[edges[i].a.v][edges[i].a.p - 1] = incidence ? int(2 * i) : int(i);
        port_bit[edges[i].b.v][edges[i].b.p - 1] = incidence ? int(2 * i + 1) : int(i);
    }
    Scalar total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
        Scalar w(1);
        bool dead = false;
        if (incidence) {
            for (size_t i = 0; i < edges.size() && !dead; ++i) {
                const Scalar& ew = inst.edge_functions()[i].at(int((mask >> (2 * i)) & 1),
                                                               int((mask >> (2 * i + 1)) & 1));
                if (ew.is_zero()) dead = true;
                else w *= ew;
            }
        }
        for (int v = 0; v < n && !dead; ++v) {
            int pat = 0;
            for (int p = 0; p < 4; ++p) pat |= int((mask >> port_bit[v][p]) & 1) << (3 - p);
            const Scalar& fw = inst.vertex_functions()[v].at(pat);
            if (fw.is_zero()) dead = true;
            else w *= fw;
        }
        if (!dead) total += w;
    }
    return total;
}

namespace {

// Dense tensor over 0/1 variables. vars are sorted ascending; vars[k]
// corresponds to bit k of the data index.
struct Tensor {
    std::vector<int> vars;
    std::vector<Scalar> data;

    size_t size() const { return data.size(); }
};

Tensor make_scalar_tensor(Scalar s) {
    Tensor t;
    t.data = {std::move(s)};
    return t;
}

Tensor multiply(const Tensor& x, const Tensor& y) {
    Tensor out;
    std::set_union(x.vars.begin(), x.vars.end(), y.vars.begin(), y.vars.end(),
                   std::back_inserter(out.vars));
    if (out.vars.size() > 26) throw domain_error("contraction intermediate too large");
    out.data.assign(size_t(1) << out.vars.size(), Scalar(0));

    auto proj = [&](const std::vector<int>& sub) {
        std::vector<int> pos(sub.size());
        for (size_t i = 0; i < sub.size(); ++i)
            pos[i] = int(std::lower_bound(out.vars.begin(), out.vars.end(), sub[i]) - out.vars.begin());
        return pos;
    };
    auto px = proj(x.vars), py = proj(y.vars);
    for (size_t idx = 0; idx < out.data.size(); ++idx) {
        size_t ix = 0, iy = 0;
        for (size_t k = 0; k < px.size(); ++k) ix |= ((idx >> px[k]) & 1) << k;
        for (size_t k = 0; k < py.size(); ++k) iy |= ((idx >> py[k]) & 1) << k;
        if (x.data[ix].is_zero() || y.data[iy].is_zero()) continue;
        out.data[idx] = x.data[ix] * y.data[iy];
    }
    return out;
}

Tensor sum_out(const Tensor& t, int var) {
    auto it = std::lower_bound(t.vars.begin(), t.vars.end(), var);
    if (it == t.vars.end() || *it != var) return t;
    int k = int(it - t.vars.begin());
    Tensor out;
    out.vars = t.vars;
    out.vars.erase(out.vars.begin() + k);
    out.data.assign(size_t(1) << out.vars.size(), Scalar(0));
    for (size_t idx = 0; idx < t.data.size(); ++idx) {
        size_t low = idx & ((size_t(1) << k) - 1);
        size_t high = (idx >> (k + 1)) << k;
        out.data[high | low] += t.data[idx];
    }
    return out;
}

}  // namespace

Scalar holant_contract(const HolantInstance& inst) {
    inst.require_valid();
    const auto& g = inst.graph();
    const auto& edges = g.edges();
    bool incidence = inst.has_edge_functions();

    // Variable ids: edge i -> i (shared view) or half-edges 2i, 2i+1.
    std::vector<Tensor> pool;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int var_of_port[5] = {-1, -1, -1, -1, -1};
        for (size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].a.v == v) var_of_port[edges[i].a.p] = incidence ? int(2 * i) : int(i);
            if (edges[i].b.v == v) var_of_port[edges[i].b.p] = incidence ? int(2 * i + 1) : int(i);
        }
        // Distinct variables, in sorted order; a loop in the shared view binds
        // two ports to one variable.
        std::vector<int> vars;
        for (int p = 1; p <= 4; ++p) vars.push_back(var_of_port[p]);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

        Tensor t;
        t.vars = vars;
        t.data.assign(size_t(1) << vars.size(), Scalar(0));
        for (size_t idx = 0; idx < t.data.size(); ++idx) {
            int pat = 0;
            for (int p = 1; p <= 4; ++p) {
                int k = int(std::lower_bound(vars.begin(), vars.end(), var_of_port[p]) - vars.begin());
                pat |= int((idx >> k) & 1) << (4 - p);
            }
            t.data[idx] = inst.vertex_functions()[v].at(pat);
        }
        pool.push_back(std::move(t));
    }
    if (incidence) {
        for (size_t i = 0; i < edges.size(); ++i) {
            Tensor t;
            t.vars = {int(2 * i), int(2 * i + 1)};
            const auto& f = inst.edge_functions()[i];
            t.data = {f.at(0, 0), f.at(1, 0), f.at(0, 1), f.at(1, 1)};
            pool.push_back(std::move(t));
        }
    }

    // Greedy elimination: repeatedly sum out the variable whose merged tensor
    // has the smallest rank.
    std::set<int> alive;
    for (const auto& t : pool) alive.insert(t.vars.begin(), t.vars.end());
    while (!alive.empty()) {
        int best_var = -1;
        size_t best_rank = SIZE_MAX;
        for (int var : alive) {
            std::set<int> merged;
            for (const auto& t : pool)
                if (std::binary_search(t.vars.begin(), t.vars.end(), var))
                    merged.insert(t.vars.begin(), t.vars.end());
            if (merged.size() < best_rank) {
                best_rank = merged.size();
                best_var = var;
            }
        }
        Tensor acc = make_scalar_tensor(Scalar(1));
        std::vector<Tensor> rest;
        for (auto& t : pool) {
            if (std::binary_search(t.vars.begin(), t.vars.end(), best_var)) acc = multiply(acc, t);
            else rest.push_back(std::move(t));
        }
        acc = sum_out(acc, best_var);
        rest.push_back(std::move(acc));
        pool = std::move(rest);
        alive.erase(best_var);
    }

    Scalar total(1);
    for (const auto& t : pool) total *= t.data[0];
    return total;
}

}  // namespace ev
