#include "ev/gadgets.hpp"

#include <algorithm>
#include <sstream>

namespace ev {

namespace {

Scalar pow_scalar(const Scalar& s, long k) {
    Scalar acc(1), base = s;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        if (e > 1) base *= base;
    }
    return acc;
}

// Comparison with float-mode slack for assertions that are exact in exact mode.
bool le_tol(const Scalar& x, const Scalar& y) {
    if (x.is_exact() && y.is_exact()) return le(x, y);
    double a = x.to_double(), b = y.to_double();
    return a <= b + 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

void require_real_params(const GadgetParams& p) {
    for (const Scalar* s : {&p.a, &p.b, &p.c, &p.d})
        if (!s->is_real()) throw domain_error("gadget parameters must be real");
}

[[noreturn]] void bullet_failure(const char* what) {
    throw std::logic_error(std::string("gadget-map invariant failed: ") + what);
}

// Raw parameter maps, used without precondition checks by recipes.
GadgetParams g1_map(const GadgetParams& p) {
    return {p.a * (p.b + p.c), p.b * p.c + p.d * p.d, p.a * p.a + p.b * p.c, (p.b + p.c) * p.d};
}

GadgetParams g2_map(const GadgetParams& p) {
    Scalar two(2);
    return {two * p.a * p.b, p.a * p.a + p.b * p.b, p.c * p.c + p.d * p.d, two * p.c * p.d};
}

GadgetParams chain_map(const GadgetParams& p, long k) {
    if (k < 1) throw domain_error("chain power requires k >= 1");
    Scalar half = Scalar(rational(1, 2));
    Scalar ad_p = pow_scalar(p.a + p.d, k), ad_m = pow_scalar(p.a - p.d, k);
    Scalar bc_p = pow_scalar(p.b + p.c, k), bc_m = pow_scalar(p.c - p.b, k);
    return {(ad_p + ad_m) * half, (bc_p - bc_m) * half, (bc_p + bc_m) * half, (ad_p - ad_m) * half};
}

GadgetParams permute_params(const GadgetParams& p, AbcPerm perm) {
    auto src = abc_perm_slot_source(perm);
    const Scalar* slots[3] = {&p.a, &p.b, &p.c};
    return {*slots[src[0]], *slots[src[1]], *slots[src[2]], p.d};
}

// Sorts (a,b,c) ascending; returns the permutation applied.
AbcPerm sort_abc(GadgetParams& p, std::array<int, 3>* origin = nullptr) {
    struct Slot {
        const Scalar* v;
        int idx;
    };
    std::array<Slot, 3> s = {Slot{&p.a, 0}, Slot{&p.b, 1}, Slot{&p.c, 2}};
    std::stable_sort(s.begin(), s.end(), [](const Slot& x, const Slot& y) { return lt(*x.v, *y.v); });
    std::array<int, 3> source = {s[0].idx, s[1].idx, s[2].idx};
    for (AbcPerm perm : {AbcPerm::identity, AbcPerm::swap_ab, AbcPerm::swap_ac, AbcPerm::swap_bc,
                         AbcPerm::cycle_abc, AbcPerm::cycle_acb}) {
        if (abc_perm_slot_source(perm) == source) {
            p = permute_params(p, perm);
            if (origin) {
                std::array<int, 3> o = *origin;
                *origin = {o[source[0]], o[source[1]], o[source[2]]};
            }
            return perm;
        }
    }
    bullet_failure("sort permutation lookup");
}

}  // namespace

bool satisfies_ordering(const GadgetParams& p) {
    require_real_params(p);
    return lt(Scalar(0), p.d) && le_tol(p.d, p.a) && le_tol(p.a, p.b) && le_tol(p.b, p.c);
}

bool satisfies_star(const GadgetParams& p) {
    return satisfies_ordering(p) && le_tol(p.c * Scalar(2), p.d * Scalar(3));
}

GadgetParams g1_step(const GadgetParams& p) {
    if (!satisfies_ordering(p)) throw domain_error("g1_step requires 0 < d <= a <= b <= c");
    GadgetParams q = g1_map(p);
    // All of these follow from the input ordering.
    for (const Scalar* s : {&q.a, &q.b, &q.c})
        if (!le_tol(q.d, *s) || !lt(Scalar(0), q.d)) bullet_failure("g1: 0 < d1 <= a1,b1,c1");
    if (!le_tol(q.a, q.c) || !le_tol(q.b, q.c) || !le_tol(q.d, q.c)) bullet_failure("g1: c1 is max");
    if (!le_tol(q.c * q.d, q.a * q.b)) bullet_failure("g1: c1 d1 <= a1 b1");
    if (!(q.a * p.d == p.a * q.d)) bullet_failure("g1: a1/d1 = a/d");
    if (!le_tol(q.b * p.d, p.b * q.d)) bullet_failure("g1: b1/d1 <= b/d");
    if (!le_tol(q.c * p.d, p.c * q.d)) bullet_failure("g1: c1/d1 <= c/d");
    return q;
}

GadgetParams g2_step(const GadgetParams& p) {
    require_real_params(p);
    if (!lt(Scalar(0), p.d) || !lt(Scalar(0), p.a) || !lt(Scalar(0), p.b) || !lt(Scalar(0), p.c))
        throw domain_error("g2_step requires positive parameters");
    if (!le_tol(p.d, p.a) || !le_tol(p.d, p.b) || !le_tol(p.d, p.c))
        throw domain_error("g2_step requires d <= a, b, c");
    if (!le_tol(p.c * p.d, p.a * p.b)) throw domain_error("g2_step requires cd <= ab");
    GadgetParams q = g2_map(p);
    for (const Scalar* s : {&q.a, &q.b, &q.c})
        if (!le_tol(q.d, *s)) bullet_failure("g2: d2 <= a2,b2,c2");
    // (c2 - d2)/d2 <= ((c - d)/d)^2  <=>  (c2 - d2) d^2 <= (c - d)^2 d2
    Scalar lhs = (q.c - q.d) * p.d * p.d;
    Scalar rhs = (p.c - p.d) * (p.c - p.d) * q.d;
    if (!le_tol(lhs, rhs)) bullet_failure("g2: quadratic gap contraction");
    return q;
}

GadgetParams chain_power(const GadgetParams& p, long k) { return chain_map(p, k); }

Mat4 chain_diagonalizer() {
    Mat4 p;
    p.at(0, 0) = Scalar(1);
    p.at(0, 3) = Scalar(1);
    p.at(1, 1) = Scalar(1);
    p.at(1, 2) = Scalar(1);
    p.at(2, 1) = Scalar(-1);
    p.at(2, 2) = Scalar(1);
    p.at(3, 0) = Scalar(-1);
    p.at(3, 3) = Scalar(1);
    return p;
}

RoundTrace iterate_rounds(const GadgetParams& p, long rounds) {
    require_real_params(p);
    if (!lt(Scalar(0), p.d)) throw domain_error("iterate_rounds requires d > 0");
    GadgetParams cur = p.scaled(p.d.inverse());
    if (!satisfies_star(cur))
        throw domain_error("iterate_rounds requires 1 <= d <= a <= b <= c <= (3/2)d after normalization");

    RoundTrace trace;
    trace.start = p;
    std::array<int, 3> origin = {0, 1, 2};
    constexpr size_t kExactBitBudget = size_t(1) << 16;

    for (long r = 0; r < rounds; ++r) {
        if (cur.all_exact()) {
            size_t bits = 0;
            for (const Scalar* s : {&cur.a, &cur.b, &cur.c}) {
                const Rational& q = s->to_rational();
                bits += mpz_sizeinbase(q.get_num().get_mpz_t(), 2);
                bits += mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
            }
            if (bits > kExactBitBudget)
                cur = {Scalar::flt(cur.a.to_double()), Scalar::flt(cur.b.to_double()),
                       Scalar::flt(cur.c.to_double()), Scalar::flt(cur.d.to_double())};
        }
        RoundRecord rec;
        rec.exact = cur.all_exact();
        rec.max_origin = origin[2];
        std::array<Scalar, 3> start_norm = {cur.a, cur.b, cur.c};  // d = 1 here
        Scalar gap_start = cur.c - Scalar(1);

        GadgetParams q1 = g1_step(cur);
        std::array<int, 3> org = origin;
        if (lt(q1.b, q1.a)) {
            std::swap(q1.a, q1.b);
            std::swap(org[0], org[1]);
            rec.swapped_after_g1 = true;
        }
        GadgetParams q2 = g2_step(q1);

        // Round-level contraction and per-value monotonicity of the
        // normalized successors.
        if (!le_tol(q2.c - q2.d, gap_start * gap_start * q2.d))
            bullet_failure("round: c*/d* - 1 <= (c/d - 1)^2");
        const Scalar* vals[3] = {&q2.a, &q2.b, &q2.c};
        for (int i = 0; i < 3; ++i)
            if (!le_tol(*vals[i], start_norm[size_t(std::find(origin.begin(), origin.end(), org[i]) - origin.begin())] * q2.d))
                bullet_failure("round: normalized successor may not increase");

        cur = q2;
        origin = org;
        rec.sort_perm = sort_abc(cur, &origin);
        cur = cur.scaled(cur.d.inverse());
        for (const Scalar* s : {&cur.a, &cur.b, &cur.c})
            if (!le_tol(Scalar(1), *s)) bullet_failure("round: recorded triple entries >= 1");
        rec.alpha = cur.a;
        rec.beta = cur.b;
        rec.gamma = cur.c;
        rec.origin = origin;
        trace.rounds.push_back(rec);
    }

    trace.final_params = cur;
    trace.gap = cur.c - Scalar(1);
    if (rounds >= 3 && rounds % 3 == 0) {
        long k = rounds / 3 - 1;
        if (k <= 20) {
            mpz_class denom;
            mpz_ui_pow_ui(denom.get_mpz_t(), 2, 1ul << unsigned(k));
            trace.bound = Rational(1) / Rational(denom);
            trace.bound_applicable = true;
            trace.pigeonhole_k = k;
        }
    }
    return trace;
}

GadgetParams apply_step(const GadgetParams& p, const RecipeStep& step) {
    switch (step.op) {
        case RecipeStep::Op::permute: return permute_params(p, step.perm);
        case RecipeStep::Op::g1: return g1_map(p);
        case RecipeStep::Op::g2: return g2_map(p);
        case RecipeStep::Op::chain: return chain_map(p, step.k);
        case RecipeStep::Op::scale: return p.scaled(Scalar(step.factor));
    }
    throw domain_error("unknown recipe step");
}

GadgetParams apply_recipe(GadgetParams p, const std::vector<RecipeStep>& recipe) {
    for (const auto& s : recipe) p = apply_step(p, s);
    return p;
}

namespace {

ConstraintFunction4 chain_signature(const ConstraintFunction4& f, long k) {
    // square-and-multiply over the associative NEQ2 chain composition
    ConstraintFunction4 acc;
    bool have = false;
    ConstraintFunction4 base = f;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) {
            acc = have ? compose_pair(acc, {BinaryConnector::NEQ2}, base) : base;
            have = true;
        }
        if (e > 1) base = compose_pair(base, {BinaryConnector::NEQ2}, base);
    }
    return acc;
}

}  // namespace

ConstraintFunction4 replay_recipe_signature(const GadgetParams& start,
                                            const std::vector<RecipeStep>& recipe) {
    ConstraintFunction4 f = start.signature();
    BinaryConnector neq{BinaryConnector::NEQ2};
    for (const auto& s : recipe) {
        switch (s.op) {
            case RecipeStep::Op::permute:
                f = permute_abc(f, s.perm);
                break;
            case RecipeStep::Op::g1: {
                ConstraintFunction4 f1 = permute_abc(f, AbcPerm::swap_ab);
                ConstraintFunction4 f2 = permute_abc(f, AbcPerm::cycle_abc);
                f = permute_abc(compose_pair(f1, neq, f2), AbcPerm::swap_ab);
                break;
            }
            case RecipeStep::Op::g2: {
                ConstraintFunction4 f2 = permute_abc(f, AbcPerm::swap_ac);
                f = permute_abc(compose_pair(f2, neq, f2), AbcPerm::cycle_acb);
                break;
            }
            case RecipeStep::Op::chain:
                f = chain_signature(f, s.k);
                break;
            case RecipeStep::Op::scale:
                f = f.scaled(Scalar(s.factor));
                break;
        }
    }
    return f;
}

namespace {

struct PipelineBuilder {
    GadgetParams cur;
    std::vector<RecipeStep> recipe;

    void emit(const RecipeStep& s) {
        cur = apply_step(cur, s);
        recipe.push_back(s);
    }
    void rescale() {
        if (!(cur.d == Scalar(1))) emit(RecipeStep::scale(Rational(1) / cur.d.to_rational()));
    }
    void sort_emit() {
        GadgetParams sorted = cur;
        AbcPerm perm = sort_abc(sorted);
        if (perm != AbcPerm::identity) emit(RecipeStep::permute(perm));
    }
};

bool chain_predicate(const GadgetParams& p, long k) {
    GadgetParams q = chain_map(p, k);
    return le(q.a * q.a + q.d * q.d, Scalar(2) * q.b * q.c);
}

}  // namespace

NormalizeResult normalize_to_star(const GadgetParams& p) {
    require_real_params(p);
    if (!lt(Scalar(0), p.d)) throw domain_error("normalize_to_star requires d > 0");
    int zeros = 0;
    for (const Scalar* s : {&p.a, &p.b, &p.c}) {
        if (!s->nonnegative_real()) throw domain_error("normalize_to_star requires nonnegative parameters");
        if (s->is_zero()) ++zeros;
    }
    if (zeros > 1) throw domain_error("normalize_to_star: at most one of a, b, c may be zero");

    PipelineBuilder pb{p, {}};
    if (!pb.cur.all_exact())
        throw domain_error("normalize_to_star requires exact parameters");
    pb.rescale();

    if (p.a == p.d && p.b == p.d && p.c == p.d)
        return {pb.cur, pb.recipe, "tractable: a = b = c = d is exactly solvable and already in star form"};

    // Fix a zero among a,b,c by moving it to the b slot and applying G1:
    // (a, 0, c, d) -> (ac, d^2, a^2, cd), all positive.
    if (zeros == 1) {
        if (pb.cur.a.is_zero()) pb.emit(RecipeStep::permute(AbcPerm::swap_ab));
        else if (pb.cur.c.is_zero()) pb.emit(RecipeStep::permute(AbcPerm::swap_bc));
        pb.emit(RecipeStep::g1());
        pb.rescale();
    }

    bool symmetric = pb.cur.a == pb.cur.d && pb.cur.b == pb.cur.d && pb.cur.c == pb.cur.d;
    if (!symmetric) {
        // Establish a + d < b + c. Ascending order maximizes b + c, so if it
        // fails there, all three pairings fail and we square first.
        pb.sort_emit();
        Scalar d = pb.cur.d;
        if (!lt(pb.cur.a + d, pb.cur.b + pb.cur.c)) {
            // Pick the pairing maximizing (x-d)^2 + (y-z)^2; it is nonzero
            // since a = b = c = d was excluded.
            const std::array<AbcPerm, 3> cands = {AbcPerm::identity, AbcPerm::swap_ab, AbcPerm::swap_ac};
            AbcPerm best = AbcPerm::identity;
            Scalar best_sep(-1);
            for (AbcPerm cand : cands) {
                GadgetParams q = permute_params(pb.cur, cand);
                Scalar sep = (q.a - q.d) * (q.a - q.d) + (q.b - q.c) * (q.b - q.c);
                if (lt(best_sep, sep)) {
                    best_sep = sep;
                    best = cand;
                }
            }
            if (best != AbcPerm::identity) pb.emit(RecipeStep::permute(best));
            pb.emit(RecipeStep::chain(2));
            pb.emit(RecipeStep::permute(AbcPerm::swap_ab));
            pb.rescale();
            if (!lt(pb.cur.a + pb.cur.d, pb.cur.b + pb.cur.c))
                bullet_failure("squaring did not establish a + d < b + c");
        }
        if (lt(pb.cur.c, pb.cur.b)) pb.emit(RecipeStep::permute(AbcPerm::swap_bc));

        // Smallest k with a'^2 + d'^2 <= 2 b'c'; the predicate is monotone in k.
        long k = 1;
        if (!chain_predicate(pb.cur, 1)) {
            long lo = 1, hi = 2;
            while (!chain_predicate(pb.cur, hi)) {
                lo = hi;
                hi *= 2;
                if (hi > (1l << 20)) throw domain_error("chain length exceeds cap 2^20");
            }
            while (lo + 1 < hi) {
                long mid = lo + (hi - lo) / 2;
                if (chain_predicate(pb.cur, mid)) hi = mid;
                else lo = mid;
            }
            k = hi;
        }
        if (k > 1) {
            pb.emit(RecipeStep::chain(k));
            pb.rescale();
        }

        // f' directly if 0 < d <= a,b,c holds after sorting; otherwise the
        // f'' combination, which the k-rule makes valid unconditionally.
        bool fprime_ok = le(pb.cur.d, pb.cur.a) && le(pb.cur.d, pb.cur.b) && le(pb.cur.d, pb.cur.c);
        if (fprime_ok) {
            pb.sort_emit();
        } else {
            pb.emit(RecipeStep::chain(2));
            pb.rescale();
            pb.sort_emit();
            if (!satisfies_ordering(pb.cur)) bullet_failure("f'' combination failed the ordering");
        }
    }

    // Shrink c toward d with G2; re-establish cd <= ab with a G1 round when needed.
    int guard = 0;
    while (lt(pb.cur.d * Scalar(3), pb.cur.c * Scalar(2))) {
        if (++guard > 10000) bullet_failure("G2 stage did not converge");
        if (!le(pb.cur.c * pb.cur.d, pb.cur.a * pb.cur.b)) {
            pb.emit(RecipeStep::g1());
            if (lt(pb.cur.b, pb.cur.a)) pb.emit(RecipeStep::permute(AbcPerm::swap_ab));
            pb.rescale();
            if (!le(pb.cur.c * pb.cur.d, pb.cur.a * pb.cur.b))
                bullet_failure("G1 round did not restore cd <= ab");
        }
        pb.emit(RecipeStep::g2());
        pb.sort_emit();
        pb.rescale();
    }

    if (!satisfies_star(pb.cur)) bullet_failure("normalization postcondition");
    return {pb.cur, pb.recipe, ""};
}

}  // namespace ev
