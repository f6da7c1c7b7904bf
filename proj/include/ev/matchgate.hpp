#pragma once

#include <array>
#include <string>
#include <vector>

#include "ev/signature.hpp"

namespace ev {

// Weighted graph with nonnegative internal edge weights and 4 ordered
// dangling ports attached to distinct vertices (each dangling edge weight 1).
class Matchgate {
public:
    struct Edge {
        int u = 0, v = 0;
        Scalar w;
    };

    Matchgate() = default;
    Matchgate(int n, std::vector<Edge> edges, std::array<int, 4> dangling)
        : n_(n), edges_(std::move(edges)), dangling_(dangling) {}

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::array<int, 4>& dangling() const { return dangling_; }

    void require_valid() const;

    // All-ones K4 with one dangling port per vertex.
    static Matchgate k4(const std::array<Scalar, 6>& w);  // w12,w34,w14,w23,w13,w24

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::array<int, 4> dangling_{0, 1, 2, 3};
};

inline constexpr int kMatchgateVertexCap = 24;

// Perfect-matching signature: entry at a dangling bit-pattern is the weighted
// sum over perfect matchings consistent with it; the empty product is 1.
ConstraintFunction4 matchgate_signature(const Matchgate& mg);

// Re-attaches the dangling port through a fresh weight-1 edge;
// f'(..., b, ...) = f(..., 1-b, ...), parity flips.
Matchgate flip_port(const Matchgate& mg, int port);

// Inserts a 2-vertex chain (weights s, then t) in front of a port:
// entries with that port bit 1 are multiplied by s, bit 0 by t.
Matchgate attach_port_scaler(const Matchgate& mg, int port, const Scalar& s, const Scalar& t);

// The (a1,a2,b1,b2,c1,c2,d1,d2) tuple housing the S^E / S^O parameters.
struct GeneralSignature8 {
    Scalar a1, a2, b1, b2, c1, c2, d1, d2;
    Parity parity = Parity::even;

    std::array<Scalar, 8> entries() const { return {a1, a2, b1, b2, c1, c2, d1, d2}; }
    Scalar prod_a() const { return a1 * a2; }
    Scalar prod_b() const { return b1 * b2; }
    Scalar prod_c() const { return c1 * c2; }
    Scalar prod_d() const { return d1 * d2; }

    ConstraintFunction4 to_signature() const;
    static GeneralSignature8 from_signature(const ConstraintFunction4& f);  // even or odd support
};

enum class MembershipKind { interior, boundary, outside };

struct Membership {
    MembershipKind kind = MembershipKind::interior;
    // Slack of each product inequality, order d, a, b, c:
    // slack_x = (sum of the other three products) - prod_x.
    std::array<Scalar, 4> slack;
    std::array<bool, 4> tight{false, false, false, false};     // boundary facets
    std::array<bool, 4> violated{false, false, false, false};  // outside facets

    bool inside() const { return kind != MembershipKind::outside; }
};

Membership membership(const GeneralSignature8& s);

struct InjectionReport {
    std::uint64_t pairs = 0;
    bool injective = false;
    bool weight_preserving = false;
    bool inequality_holds = false;  // f(0011)f(1100) <= f(0110)f(1001)+f(0101)f(1010)+f(0000)f(1111)
    bool vacuous = false;
};

// Enumerates M_{i1,i2} x M_{i3,i4}, builds the path map mu through dangling
// port 1, and verifies injectivity and weight preservation.
InjectionReport check_injection_mu(const Matchgate& mg);

// The arity-2 disequality gate: one vertex, two dangling edges.
struct Matchgate2 {
    int vertices = 1;
    // signature over (b1, b2): 1 iff exactly one dangling edge is matched
    std::array<Scalar, 4> signature() const {
        return {Scalar(0), Scalar(1), Scalar(1), Scalar(0)};
    }
};
inline Matchgate2 neq2_gate() { return {}; }

}  // namespace ev
