#pragma once

#include <string>
#include <vector>

#include "ev/signature.hpp"

namespace ev {

// Zero-field eight-vertex parameter quadruple flowing through the gadget maps.
struct GadgetParams {
    Scalar a, b, c, d;

    bool all_exact() const { return a.is_exact() && b.is_exact() && c.is_exact() && d.is_exact(); }
    GadgetParams scaled(const Scalar& s) const { return {a * s, b * s, c * s, d * s}; }
    ConstraintFunction4 signature() const { return eight_vertex_signature(a, b, c, d); }
};

// 0 < d <= a <= b <= c
bool satisfies_ordering(const GadgetParams& p);
// 0 < d <= a <= b <= c <= (3/2) d
bool satisfies_star(const GadgetParams& p);

// G1: (a(b+c), bc+d^2, a^2+bc, (b+c)d). Requires 0 < d <= a <= b <= c.
GadgetParams g1_step(const GadgetParams& p);
// G2: (2ab, a^2+b^2, c^2+d^2, 2cd). Requires positivity, d <= min(a,b,c), cd <= ab.
GadgetParams g2_step(const GadgetParams& p);
// Closed-form k-fold NEQ2-chain composition.
GadgetParams chain_power(const GadgetParams& p, long k);

// The diagonalizer of the chain construction, M_colored(f) = P diag P^{-1}.
Mat4 chain_diagonalizer();

struct RoundRecord {
    // Normalized triple (a/d, b/d, c/d), sorted ascending, at the END of the round.
    Scalar alpha, beta, gamma;
    bool exact = true;
    // Which original value (0=a,1=b,2=c) each slot descends from.
    std::array<int, 3> origin;
    bool swapped_after_g1 = false;
    AbcPerm sort_perm = AbcPerm::identity;
    // Origin index that occupied the max slot at the START of the round.
    int max_origin = 0;
};

struct RoundTrace {
    GadgetParams start;
    std::vector<RoundRecord> rounds;
    GadgetParams final_params;  // normalized, d = 1
    Scalar gap;                 // max(a,b,c)/d - 1 at the end
    // For rounds = 3(k+1): the pigeonhole bound 2^{-2^k}; otherwise 0 rounds -> gap itself.
    Rational bound;
    bool bound_applicable = false;
    long pigeonhole_k = -1;
};

// Runs `rounds` rounds of (G1; swap a1,b1 if needed; G2; re-sort), tracking
// normalized triples and origins. Requires 1 <= d <= a <= b <= c <= (3/2)d
// after normalization by d. Exact-mode denominators quadruple per round, so
// once they pass ~2^16 bits the remaining rounds run in float (flagged per
// round in the trace).
RoundTrace iterate_rounds(const GadgetParams& p, long rounds);

// Construction recipes: executable both on parameter quadruples and, for
// verification, on explicit signatures through compose_pair.
struct RecipeStep {
    enum class Op { permute, g1, g2, chain, scale } op;
    AbcPerm perm = AbcPerm::identity;  // permute
    long k = 0;                        // chain
    Rational factor;                   // scale

    static RecipeStep permute(AbcPerm p) { return {Op::permute, p, 0, Rational(0)}; }
    static RecipeStep g1() { return {Op::g1, AbcPerm::identity, 0, Rational(0)}; }
    static RecipeStep g2() { return {Op::g2, AbcPerm::identity, 0, Rational(0)}; }
    static RecipeStep chain(long k) { return {Op::chain, AbcPerm::identity, k, Rational(0)}; }
    static RecipeStep scale(Rational f) { return {Op::scale, AbcPerm::identity, 0, std::move(f)}; }
};

GadgetParams apply_step(const GadgetParams& p, const RecipeStep& step);
GadgetParams apply_recipe(GadgetParams p, const std::vector<RecipeStep>& recipe);

// Replays a recipe on the explicit signature through compose_pair / permute_abc;
// chains use square-and-multiply over compose_pair.
ConstraintFunction4 replay_recipe_signature(const GadgetParams& start,
                                            const std::vector<RecipeStep>& recipe);

struct NormalizeResult {
    GadgetParams params;  // 1 <= d <= a <= b <= c <= (3/2) d, with d = 1
    std::vector<RecipeStep> recipe;
    std::string notice;  // set for the exactly-tractable symmetric point
};

// Normalization to the star condition. Preconditions: d > 0
// and at most one of a,b,c zero. The fully symmetric point a=b=c=d already
// satisfies the condition and comes back with a "tractable" notice.
NormalizeResult normalize_to_star(const GadgetParams& p);

}  // namespace ev
