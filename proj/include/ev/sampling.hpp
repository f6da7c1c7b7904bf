#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "ev/gadgets.hpp"
#include "ev/graph.hpp"
#include "ev/ising.hpp"
#include "ev/matchgate.hpp"

// Deterministic samplers for the randomized verification suites.

namespace ev {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rational positive_rational(long max_num = 12, long max_den = 6) {
        return rational(uniform(1, max_num), uniform(1, max_den));
    }

    Rational nonneg_rational(long max_num = 12, long max_den = 6) {
        return rational(uniform(0, max_num), uniform(1, max_den));
    }

    Rational signed_rational(long max_num = 12, long max_den = 6) {
        return rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Scalar gaussian_rational(long max_num = 6, long max_den = 4) {
        return Scalar::exact(rational(uniform(-max_num, max_num), uniform(1, max_den)),
                             rational(uniform(-max_num, max_num), uniform(1, max_den)));
    }

    // Random 4-regular multigraph: a uniform perfect matching of the 4n ports.
    PortedGraph four_regular(int n) {
        std::vector<PortRef> ports;
        for (int v = 0; v < n; ++v)
            for (int p = 1; p <= 4; ++p) ports.push_back({v, p});
        std::shuffle(ports.begin(), ports.end(), eng_);
        std::vector<GraphEdge> edges;
        for (size_t i = 0; i + 1 < ports.size(); i += 2) edges.push_back({ports[i], ports[i + 1]});
        return PortedGraph(n, std::move(edges));
    }

    // Random multigraph without isolated vertices (loops and multiedges allowed).
    IsingGraph multigraph(int max_n, int max_edges) {
        IsingGraph h;
        h.n = int(uniform(1, max_n));
        int m = int(uniform(std::max(1, (h.n + 1) / 2), max_edges));
        for (int i = 0; i < m; ++i)
            h.edges.push_back({int(uniform(0, h.n - 1)), int(uniform(0, h.n - 1)), i});
        // repair isolated vertices by attaching them somewhere
        std::vector<int> deg(h.n, 0);
        for (auto& e : h.edges) {
            deg[e.u]++;
            deg[e.v]++;
        }
        for (int v = 0; v < h.n; ++v)
            if (deg[v] == 0) {
                h.edges.push_back({v, int(uniform(0, h.n - 1)), int(h.edges.size())});
                deg[v]++;
            }
        return h;
    }

    ConstraintFunction4 random_signature(long max_num = 6, long max_den = 4) {
        std::array<Scalar, 16> e;
        for (auto& s : e) s = Scalar(signed_rational(max_num, max_den));
        return ConstraintFunction4(e);
    }

    // 0 < d <= a <= b <= c, small rationals.
    GadgetParams ordered_params() {
        std::array<Rational, 4> v = {positive_rational(), positive_rational(), positive_rational(),
                                     positive_rational()};
        std::sort(v.begin(), v.end());
        return {Scalar(v[1]), Scalar(v[2]), Scalar(v[3]), Scalar(v[0])};
    }

    // 1 <= d <= a <= b <= c <= (3/2) d, denominators kept small.
    GadgetParams star_params(long grid = 16) {
        Rational d(1);
        std::array<Rational, 3> v;
        for (auto& x : v) x = Rational(1) + rational(uniform(0, grid), 2 * grid);
        std::sort(v.begin(), v.end());
        return {Scalar(v[0]), Scalar(v[1]), Scalar(v[2]), Scalar(d)};
    }

    // Inputs accepted by normalize_to_star: d > 0, at most one zero among a,b,c,
    // not all four equal. Coarse grid keeps chain lengths small.
    GadgetParams normalizable_params() {
        while (true) {
            Rational a = rational(uniform(1, 24), 4), b = rational(uniform(1, 24), 4),
                     c = rational(uniform(1, 24), 4), d = rational(uniform(1, 24), 4);
            long mode = uniform(0, 9);
            if (mode == 0) a = 0;
            else if (mode == 1) b = 0;
            else if (mode == 9) {
                // exercise the squaring branch: d dominates
                d = std::max(std::max(a, b), c) * uniform(2, 4);
            }
            if (a == d && b == d && c == d) continue;
            return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
        }
    }

    Matchgate random_matchgate(int max_vertices = 10, bool allow_zero_weights = true) {
        int n = int(uniform(4, max_vertices));
        int m = int(uniform(n / 2, 2 * n));
        std::vector<Matchgate::Edge> edges;
        for (int i = 0; i < m; ++i) {
            int u = int(uniform(0, n - 1)), v = int(uniform(0, n - 1));
            Rational w = allow_zero_weights && uniform(0, 9) == 0 ? Rational(0)
                                                                  : positive_rational(8, 4);
            edges.push_back({u, v, Scalar(w)});
        }
        std::array<int, 4> dang;
        for (auto& dpt : dang) dpt = int(uniform(0, n - 1));
        if (uniform(0, 3) != 0) {
            // mostly distinct attachments
            std::vector<int> vs(n);
            std::iota(vs.begin(), vs.end(), 0);
            std::shuffle(vs.begin(), vs.end(), eng_);
            dang = {vs[0], vs[1], vs[2], vs[3]};
        }
        return Matchgate(n, std::move(edges), dang);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace ev
