#pragma once

#include <optional>

#include "ev/matchgate.hpp"

namespace ev {

struct Vec3 {
    Scalar x, y, z;
};

// u = v + w with v on the open positive simplex x+y+z = 1 and w in the open
// triangle-inequality cone; margin is the smallest slack across the strict
// constraints (0 on the boundary of the closures).
struct DecompositionResult {
    Vec3 v, w;
    Scalar margin;
};

// Closed-form ray decomposition inside the tetrahedron, 2D linear feasibility
// (halfplane intersection, vertex centroid) outside it. Throws
// domain_error("not in Minkowski region") outside closure(U).
DecompositionResult decompose_minkowski(const Vec3& u);

// Intermediate values of the K6 interior solve, kept for inspection.
struct K6SolveState {
    Scalar A, B, C, D;
    Scalar A1, B1, C1;  // A', B', C'
    Scalar R, S, T;
    Scalar X, Y, Z;
    double o1 = 0, o2 = 0, o3 = 0;
    double p[4] = {0, 0, 0, 0};
    double q[4] = {1, 1, 1, 1};
    double r1 = 0, r2 = 0, s1 = 0, s2 = 0, t1 = 0, t2 = 0;
    double scale_c = 0;
};

struct SynthesisResult {
    Matchgate gate;
    ConstraintFunction4 realized;
    Scalar scale;     // realized = scale * target, entrywise
    double residual;  // max relative entry error against scale * target
    std::optional<K6SolveState> k6;
    std::string route;  // "k4", "k6", "k6-degenerate", "zero"
};

// Builds a matchgate whose signature is a positive multiple of the target
// (pair ratios included). Boundary and zero-product families go through the
// K4 with port flips (exact weights); the strict interior uses the K6.
SynthesisResult synthesize_even(const GeneralSignature8& s);
// Even synthesis of the rehoused tuple followed by flip_port(1).
SynthesisResult synthesize_odd(const GeneralSignature8& s);

}  // namespace ev
