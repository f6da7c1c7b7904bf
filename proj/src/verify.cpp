#include "ev/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "ev/classify.hpp"
#include "ev/holant.hpp"
#include "ev/ising.hpp"
#include "ev/sampling.hpp"
#include "ev/synthesize.hpp"

namespace ev {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream detail;
    long count = 0;

    void expect(bool cond, const std::string& what) {
        ++count;
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

CheckResult timed(const std::string& name, double budget_seconds,
                  const std::function<void(Checker&)>& body) {
    Checker ch;
    auto t0 = Clock::now();
    try {
        body(ch);
    } catch (const std::exception& e) {
        ch.ok = false;
        ch.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    CheckResult r{name, ch.ok, ch.detail.str(), secs};
    if (r.pass && budget_seconds > 0 && secs > budget_seconds) {
        r.pass = false;
        r.detail = "time budget exceeded";
    }
    if (r.pass && r.detail.empty()) {
        std::ostringstream os;
        os << ch.count << " checks";
        r.detail = os.str();
    }
    return r;
}

Scalar pow2(int n) {
    Scalar s(1);
    for (int i = 0; i < n; ++i) s *= Scalar(2);
    return s;
}

ConstraintFunction4 unhalved_transformed(const Scalar& a, const Scalar& b, const Scalar& c,
                                         const Scalar& d) {
    return eight_vertex_signature(-a + b + c - d, a - b + c - d, a + b - c - d, a + b + c + d);
}

GadgetParams to_float(const GadgetParams& p) {
    return {Scalar::flt(p.a.to_double()), Scalar::flt(p.b.to_double()),
            Scalar::flt(p.c.to_double()), Scalar::flt(p.d.to_double())};
}

// ---- criterion bodies -------------------------------------------------

void crit_holographic(Checker& ch, Sampler& rng, int instances) {
    for (int i = 0; i < instances; ++i) {
        int n = int(rng.uniform(1, 6));
        PortedGraph g = rng.four_regular(n);
        Scalar a(rng.nonneg_rational(8, 4)), b(rng.nonneg_rational(8, 4)),
            c(rng.nonneg_rational(8, 4)), d(rng.nonneg_rational(8, 4));
        Scalar lhs = pow2(n) * z_eight_vertex(g, a, b, c, d);
        Scalar rhs = holant_bruteforce(HolantInstance::uniform(g, unhalved_transformed(a, b, c, d)));
        ch.expect(lhs == rhs, "2^V z != transformed holant");
    }
}

void crit_ising(Checker& ch, Sampler& rng, int identities, int roundtrips) {
    for (int i = 0; i < identities; ++i) {
        int n = int(rng.uniform(1, 6));
        PortedGraph g = rng.four_regular(n);
        Scalar w(rng.signed_rational(9, 4));
        Rational zr = rng.signed_rational(9, 4);
        if (zr == 0) zr = 1;
        auto rep = verify_ising_identity(g, w, Scalar(zr));
        ch.expect(rep.equal, "ising identity mismatch");
    }
    for (int i = 0; i < roundtrips; ++i) {
        IsingGraph h = rng.multigraph(5, 8);
        ch.expect(crossing_circuit_roundtrip_ok(h), "crossing-circuit roundtrip failed");
    }
}

void crit_gadget_semantics(Checker& ch, Sampler& rng, int per_op) {
    for (int i = 0; i < per_op; ++i) {
        GadgetParams p = rng.ordered_params();
        GadgetParams q = g1_step(p);
        auto rp = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::g1()}));
        ch.expect(q.a == rp.a && q.b == rp.b && q.c == rp.c && q.d == rp.d,
                  "g1 formula != contraction");
    }
    for (int i = 0; i < per_op;) {
        GadgetParams p = rng.ordered_params();
        if (!le(p.c * p.d, p.a * p.b)) continue;
        GadgetParams q = g2_step(p);
        auto rp = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::g2()}));
        ch.expect(q.a == rp.a && q.b == rp.b && q.c == rp.c && q.d == rp.d,
                  "g2 formula != contraction");
        ++i;
    }
    for (int i = 0; i < per_op; ++i) {
        GadgetParams p = {Scalar(rng.nonneg_rational(6, 3)), Scalar(rng.nonneg_rational(6, 3)),
                          Scalar(rng.nonneg_rational(6, 3)), Scalar(rng.nonneg_rational(6, 3))};
        long k = rng.uniform(1, 6);
        GadgetParams q = chain_power(p, k);
        auto rp = eight_vertex_params(replay_recipe_signature(p, {RecipeStep::chain(k)}));
        ch.expect(q.a == rp.a && q.b == rp.b && q.c == rp.c && q.d == rp.d,
                  "chain closed form != contraction");
    }
}

void crit_convergence(Checker& ch, Sampler& rng, int starts) {
    for (int i = 0; i < starts; ++i) {
        GadgetParams p = rng.star_params();
        for (long k = 1; k <= 4; ++k) {
            RoundTrace t = iterate_rounds(k <= 2 ? p : to_float(p), 3 * (k + 1));
            ch.expect(t.bound_applicable && le(t.gap, Scalar(t.bound)),
                      "gap above pigeonhole bound");
        }
    }
    // the worked start, in exact arithmetic
    GadgetParams spot{Scalar(rational(6, 5)), Scalar(rational(13, 10)), Scalar(rational(3, 2)),
                      Scalar(1)};
    RoundTrace t = iterate_rounds(spot, 12);
    ch.expect(t.bound_applicable && le(t.gap, Scalar(t.bound)), "worked start exceeds 2^-8");
    ch.expect(t.bound == rational(1, 256), "bound for 12 rounds is 2^-8");
}

void crit_normalize(Checker& ch, Sampler& rng, int inputs) {
    for (int i = 0; i < inputs; ++i) {
        GadgetParams p = rng.normalizable_params();
        NormalizeResult nr = normalize_to_star(p);
        ch.expect(satisfies_star(nr.params) && nr.params.d == Scalar(1), "postcondition failed");
        auto rp = eight_vertex_params(replay_recipe_signature(p, nr.recipe));
        ch.expect(rp.a == nr.params.a && rp.b == nr.params.b && rp.c == nr.params.c &&
                      rp.d == nr.params.d,
                  "recipe replay mismatch");
    }
}

void crit_necessity(Checker& ch, Sampler& rng, int gates, int injections) {
    for (int i = 0; i < gates; ++i) {
        Matchgate mg = rng.random_matchgate(10);
        ConstraintFunction4 f = matchgate_signature(mg);
        Parity par = f.parity();
        ch.expect(par != Parity::mixed, "matchgate signature with mixed parity");
        if (par == Parity::zero) continue;
        Membership mem = membership(GeneralSignature8::from_signature(f));
        ch.expect(mem.kind != MembershipKind::outside, "product inequality violated");
        for (const Scalar& s : mem.slack) ch.expect(!lt(s, Scalar(0)), "negative slack");
    }
    int done = 0;
    while (done < injections) {
        Matchgate mg = rng.random_matchgate(9, false);
        auto rep = check_injection_mu(mg);
        ch.expect(rep.injective, "mu not injective");
        ch.expect(rep.weight_preserving, "mu not weight preserving");
        ch.expect(rep.inequality_holds, "tightness inequality failed");
        ++done;
    }
}

GeneralSignature8 odd_from_even(const GeneralSignature8& e) {
    return {e.b2, e.b1, e.a2, e.a1, e.d2, e.d1, e.c2, e.c1, Parity::odd};
}

GeneralSignature8 sample_even_tuple(Sampler& rng, int stratum) {
    auto pos = [&] { return Scalar(rng.positive_rational(6, 3)); };
    while (true) {
        GeneralSignature8 s;
        s.parity = Parity::even;
        switch (stratum) {
            case 0: {  // strict interior, all positive
                s = {pos(), pos(), pos(), pos(), pos(), pos(), pos(), pos(), Parity::even};
                break;
            }
            case 1: case 2: case 3: case 4: {  // boundary facet d/a/b/c
                s = {pos(), pos(), pos(), pos(), pos(), pos(), pos(), pos(), Parity::even};
                Scalar pa = s.prod_a(), pb = s.prod_b(), pc = s.prod_c();
                if (stratum == 1) s.d2 = (pa + pb + pc) / s.d1;
                else if (stratum == 2) s.a2 = (s.prod_b() + s.prod_c() + s.prod_d()) / s.a1;
                else if (stratum == 3) s.b2 = (s.prod_a() + s.prod_c() + s.prod_d()) / s.b1;
                else s.c2 = (s.prod_a() + s.prod_b() + s.prod_d()) / s.c1;
                break;
            }
            case 5: {  // one zero product, strict inside
                s = {pos(), pos(), pos(), pos(), pos(), pos(), pos(), pos(), Parity::even};
                int which = int(rng.uniform(0, 3));
                int how = int(rng.uniform(0, 2));
                Scalar z0(0);
                auto zero_pair = [&](Scalar& x1, Scalar& x2) {
                    if (how == 0) x1 = z0;
                    else if (how == 1) x2 = z0;
                    else x1 = x2 = z0;
                };
                if (which == 0) zero_pair(s.a1, s.a2);
                else if (which == 1) zero_pair(s.b1, s.b2);
                else if (which == 2) zero_pair(s.c1, s.c2);
                else zero_pair(s.d1, s.d2);
                break;
            }
            default: {  // all products zero: at most one nonzero entry per pair
                auto pair_case = [&](Scalar& x1, Scalar& x2) {
                    long how = rng.uniform(0, 2);
                    x1 = how == 0 ? pos() : Scalar(0);
                    x2 = how == 1 ? pos() : Scalar(0);
                };
                pair_case(s.a1, s.a2);
                pair_case(s.b1, s.b2);
                pair_case(s.c1, s.c2);
                pair_case(s.d1, s.d2);
                break;
            }
        }
        Membership mem = membership(s);
        if (mem.kind == MembershipKind::outside) continue;
        if (stratum == 0 && mem.kind != MembershipKind::interior) continue;
        if (stratum == 5 && mem.kind != MembershipKind::interior) continue;
        bool any = false;
        for (const Scalar& e : s.entries()) any |= !e.is_zero();
        if (!any) continue;
        return s;
    }
}

void crit_sufficiency(Checker& ch, Sampler& rng, int even_total, int odd_total) {
    for (int i = 0; i < even_total; ++i) {
        int stratum = i % 7;
        GeneralSignature8 s = sample_even_tuple(rng, stratum);
        SynthesisResult res = synthesize_even(s);  // throws if residual > 1e-6
        ch.expect(res.residual <= 1e-6, "round-trip residual too large");
    }
    for (int i = 0; i < odd_total; ++i) {
        GeneralSignature8 s = odd_from_even(sample_even_tuple(rng, i % 7));
        SynthesisResult res = synthesize_odd(s);
        ch.expect(res.residual <= 1e-6, "odd round-trip residual too large");
    }
    // out-of-region rejection, products (d,a,b,c) = (4,1,1,1)
    GeneralSignature8 bad{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                          Scalar(1), Scalar(1), Scalar(4), Scalar(1), Parity::even};
    bool threw = false;
    try {
        synthesize_even(bad);
    } catch (const domain_error&) {
        threw = true;
    }
    ch.expect(threw, "out-of-region even tuple accepted");
    threw = false;
    try {
        synthesize_odd(odd_from_even(bad));
    } catch (const domain_error&) {
        threw = true;
    }
    ch.expect(threw, "out-of-region odd tuple accepted");
}

void crit_geometry(Checker& ch, Sampler& rng, int points) {
    int collected = 0;
    while (collected < points) {
        Rational x = rng.nonneg_rational(24, 8), y = rng.nonneg_rational(24, 8),
                 z = rng.nonneg_rational(24, 8);
        long mode = rng.uniform(0, 9);
        if (mode == 0) {
            Rational s = x + y + z;
            if (s == 0) continue;
            x /= s; y /= s; z /= s;  // bottom facet
        } else if (mode == 1 && y + z >= 1) {
            x = y + z - 1;  // tetrahedron facet -x+y+z = 1
        }
        if (x > y + z + 1 || y > x + z + 1 || z > x + y + 1 || x + y + z < 1) continue;
        auto dec = decompose_minkowski({Scalar(x), Scalar(y), Scalar(z)});
        Scalar sum_v = dec.v.x + dec.v.y + dec.v.z;
        ch.expect(sum_v == Scalar(1), "v off the simplex");
        ch.expect(dec.v.x + dec.w.x == Scalar(x) && dec.v.y + dec.w.y == Scalar(y) &&
                      dec.v.z + dec.w.z == Scalar(z),
                  "v + w != u");
        ch.expect(!lt(dec.margin, Scalar(0)), "negative margin");
        bool strict_interior = x > 0 && y > 0 && z > 0 && x < y + z + 1 && y < x + z + 1 &&
                               z < x + y + 1 && x + y + z > 1;
        if (strict_interior) ch.expect(lt(Scalar(0), dec.margin), "interior point with zero margin");
        ++collected;
    }
    // outside must be rejected
    bool threw = false;
    try {
        decompose_minkowski({Scalar(5), Scalar(1), Scalar(1)});
    } catch (const domain_error&) {
        threw = true;
    }
    ch.expect(threw, "outside point accepted");
}

void crit_classifier(Checker& ch, Sampler& rng, int samples) {
    auto kind_of = [](long a, long b, long c2, long d, long den = 1) {
        return verdict(Scalar(rational(a, den)), Scalar(rational(b, den)), Scalar(rational(c2, den)),
                       Scalar(rational(d, den)))
            .kind;
    };
    ch.expect(kind_of(1, 1, 1, 1) == VerdictKind::exactly_tractable, "(1,1,1,1)");
    ch.expect(kind_of(11, 11, 11, 10, 10) == VerdictKind::fpras, "(1.1,1.1,1.1,1)");
    ch.expect(kind_of(10, 10, 15, 10, 10) == VerdictKind::pm_equivalent, "(1,1,1.5,1)");
    Verdict open_v = verdict(Scalar(1), Scalar(1), Scalar(1), Scalar(2));
    ch.expect(open_v.kind == VerdictKind::open_in_do && open_v.lower_bound == "PM-hard",
              "(1,1,1,2)");
    ch.expect(kind_of(1, 1, 1, 4) == VerdictKind::np_hard, "(1,1,1,4)");

    const AbcPerm perms[6] = {AbcPerm::identity, AbcPerm::swap_ab, AbcPerm::swap_ac,
                              AbcPerm::swap_bc, AbcPerm::cycle_abc, AbcPerm::cycle_acb};
    for (int i = 0; i < samples; ++i) {
        Scalar a(rng.nonneg_rational(8, 3)), b(rng.nonneg_rational(8, 3)),
            c(rng.nonneg_rational(8, 3)), d(rng.nonneg_rational(8, 3));
        RegionFlags f = region_flags(a, b, c, d);
        ch.expect(!f.in_dsum || f.in_do, "d-SUM not inside DO");
        ch.expect(!f.in_sqsum || f.in_do, "SQ-SUM not inside DO");
        VerdictKind base = verdict(a, b, c, d).kind;
        GadgetParams pp = apply_step(GadgetParams{a, b, c, d},
                                     RecipeStep::permute(perms[rng.uniform(0, 5)]));
        ch.expect(verdict(pp.a, pp.b, pp.c, pp.d).kind == base, "permutation changed verdict");
        Scalar lam(rng.positive_rational(6, 3));
        ch.expect(verdict(a * lam, b * lam, c * lam, d * lam).kind == base,
                  "scaling changed verdict");
    }
}

// ---- extra per-module invariants (cli verify) --------------------------

void inv_holographic_bipartite(Checker& ch, Sampler& rng, int instances) {
    for (int i = 0; i < instances; ++i) {
        int n = int(rng.uniform(1, 3));
        PortedGraph g = rng.four_regular(n);
        std::vector<ConstraintFunction4> fv;
        for (int v = 0; v < n; ++v) fv.push_back(rng.random_signature(3, 2));
        std::vector<EdgeFunction2> ef;
        for (size_t e = 0; e < g.edges().size(); ++e) {
            EdgeFunction2 fn;
            for (int k = 0; k < 4; ++k) fn.m[k] = Scalar(rng.signed_rational(3, 2));
            ef.push_back(fn);
        }
        HolantInstance inst(g, fv);
        inst.set_edge_functions(ef);
        Scalar base = holant_bruteforce(inst);

        Transform2 t = Transform2::z();
        if (rng.uniform(0, 1) == 0) {
            while (true) {
                std::array<Scalar, 4> m = {rng.gaussian_rational(3, 2), rng.gaussian_rational(3, 2),
                                           rng.gaussian_rational(3, 2), rng.gaussian_rational(3, 2)};
                Transform2 cand(m);
                if (cand.invertible()) {
                    t = cand;
                    break;
                }
            }
        }
        Transform2 tinv = t.inverse();
        std::vector<ConstraintFunction4> fv2;
        for (const auto& f : fv) fv2.push_back(apply_holographic(t, f));
        std::vector<EdgeFunction2> ef2;
        for (const auto& fn : ef) ef2.push_back(transform_edge_function(fn, tinv));
        HolantInstance inst2(g, fv2);
        inst2.set_edge_functions(ef2);
        ch.expect(holant_bruteforce(inst2) == base, "holographic transform changed the Holant");
    }
}

// Z_EightVertex(G) equals the Holant of the edge-vertex incidence view with
// a disequality on every edge.
void inv_incidence_view(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        int n = int(rng.uniform(1, 4));
        PortedGraph g = rng.four_regular(n);
        Scalar a(rng.nonneg_rational(6, 3)), b(rng.nonneg_rational(6, 3)),
            c(rng.nonneg_rational(6, 3)), d(rng.nonneg_rational(6, 3));
        auto inst = HolantInstance::uniform(g, eight_vertex_signature(a, b, c, d));
        inst.set_connectors({BinaryConnector::NEQ2});
        ch.expect(holant_bruteforce(inst) == z_eight_vertex(g, a, b, c, d),
                  "orientation sum != incidence-view Holant");
    }
}

// Holant(G; Z^{tensor 4} f) itself equals the orientation partition function.
void inv_halved_transform(Checker& ch, Sampler& rng, int cases) {
    Transform2 z = Transform2::z();
    for (int i = 0; i < cases; ++i) {
        int n = int(rng.uniform(1, 4));
        PortedGraph g = rng.four_regular(n);
        Scalar a(rng.nonneg_rational(6, 3)), b(rng.nonneg_rational(6, 3)),
            c(rng.nonneg_rational(6, 3)), d(rng.nonneg_rational(6, 3));
        ConstraintFunction4 tf = apply_holographic(z, eight_vertex_signature(a, b, c, d));
        ch.expect(holant_bruteforce(HolantInstance::uniform(g, tf)) ==
                      z_eight_vertex(g, a, b, c, d),
                  "Holant of the transformed signature != Z");
    }
}

// Rebuild each recorded round from the trace bookkeeping and replay it as an
// explicit gadget composition.
void inv_round_replay(Checker& ch, Sampler& rng, int starts) {
    for (int i = 0; i < starts; ++i) {
        GadgetParams p = rng.star_params();
        RoundTrace t = iterate_rounds(p, 3);
        std::vector<RecipeStep> recipe = {RecipeStep::scale(Rational(1) / p.d.to_rational())};
        for (const auto& r : t.rounds) {
            recipe.push_back(RecipeStep::g1());
            if (r.swapped_after_g1) recipe.push_back(RecipeStep::permute(AbcPerm::swap_ab));
            recipe.push_back(RecipeStep::g2());
            if (r.sort_perm != AbcPerm::identity) recipe.push_back(RecipeStep::permute(r.sort_perm));
            GadgetParams q = apply_recipe(p, recipe);
            recipe.push_back(RecipeStep::scale(Rational(1) / q.d.to_rational()));
        }
        GadgetParams via_params = apply_recipe(p, recipe);
        auto via_graph = eight_vertex_params(replay_recipe_signature(p, recipe));
        ch.expect(via_params.a == t.final_params.a && via_params.b == t.final_params.b &&
                      via_params.c == t.final_params.c && via_params.d == t.final_params.d,
                  "trace does not reconstruct the round schedule");
        ch.expect(via_graph.a == t.final_params.a && via_graph.b == t.final_params.b &&
                      via_graph.c == t.final_params.c && via_graph.d == t.final_params.d,
                  "explicit composition disagrees with the round schedule");
    }
}

void inv_compose_chain(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        ConstraintFunction4 f1 = rng.random_signature(4, 3), f2 = rng.random_signature(4, 3);
        BinaryConnector conn{rng.uniform(0, 1) ? BinaryConnector::NEQ2 : BinaryConnector::EQ2};
        EdgeFunction2 cf = conn.function();
        ConstraintFunction4 got = compose_pair(f1, conn, f2);
        // explicit contraction of the 2-chain gadget
        for (int y = 0; y < 16; ++y) {
            int y1 = (y >> 3) & 1, y2 = (y >> 2) & 1, y3 = (y >> 1) & 1, y4 = y & 1;
            Scalar acc(0);
            for (int x3 = 0; x3 < 2; ++x3)
                for (int x4 = 0; x4 < 2; ++x4)
                    for (int u1 = 0; u1 < 2; ++u1)
                        for (int u2 = 0; u2 < 2; ++u2) {
                            const Scalar& cw1 = cf.at(x4, u1);
                            const Scalar& cw2 = cf.at(x3, u2);
                            if (cw1.is_zero() || cw2.is_zero()) continue;
                            acc += f1.at(y1, y2, x3, x4) * cw1 * cw2 * f2.at(u1, u2, y3, y4);
                        }
            if (!(got.at(y) == acc)) {
                ch.expect(false, "compose_pair != explicit 2-chain contraction");
                return;
            }
        }
        ch.expect(true, "");
    }
}

void inv_matrix_roundtrip(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        ConstraintFunction4 f = rng.random_signature(5, 3);
        ch.expect(ConstraintFunction4::from_matrix(f.matrix_view()) == f, "M-view roundtrip");
    }
}

void inv_z_transform_shape(Checker& ch, Sampler& rng, int cases) {
    Transform2 z = Transform2::z();
    for (int i = 0; i < cases; ++i) {
        Scalar a(rng.nonneg_rational()), b(rng.nonneg_rational()), c(rng.nonneg_rational()),
            d(rng.nonneg_rational());
        ConstraintFunction4 g = apply_holographic(z, eight_vertex_signature(a, b, c, d));
        ConstraintFunction4 expect =
            unhalved_transformed(a, b, c, d).scaled(Scalar(rational(1, 2)));
        ch.expect(g == expect, "Z-transform does not match the block form");
        for (int e = 0; e < 16; ++e)
            ch.expect(g.at(e).is_exact() && g.at(e).exact_value().is_real(),
                      "Z-transform produced a non-real entry");
    }
}

void inv_orientation_counts(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        int n = int(rng.uniform(1, 5));
        PortedGraph g = rng.four_regular(n);
        std::uint64_t cnt = count_even_orientations(g);
        Scalar z = z_eight_vertex(g, Scalar(1), Scalar(1), Scalar(1), Scalar(1));
        ch.expect(z == Scalar(Rational(long(cnt))), "z(1,1,1,1) != even orientation count");
        int k = g.component_count();
        std::uint64_t expect = std::uint64_t(1) << (g.edges().size() - n + k);
        ch.expect(cnt == expect, "even orientation count != 2^(E-V+k)");
    }
}

void inv_contract_vs_brute(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        bool incidence = rng.uniform(0, 2) == 0;
        int n = int(rng.uniform(1, incidence ? 4 : 8));
        PortedGraph g = rng.four_regular(n);
        std::vector<ConstraintFunction4> fv;
        for (int v = 0; v < n; ++v) fv.push_back(rng.random_signature(3, 2));
        HolantInstance inst(g, fv);
        if (incidence) inst.set_connectors({BinaryConnector::NEQ2});
        ch.expect(holant_contract(inst) == holant_bruteforce(inst), "contract != brute force");
    }
    // empty graph and disconnected multiplicativity
    HolantInstance empty(PortedGraph(0, {}), {});
    ch.expect(holant_contract(empty) == Scalar(1), "empty graph contract != 1");
}

void inv_arrow_reversal(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        Scalar a(rng.nonneg_rational()), b(rng.nonneg_rational()), c(rng.nonneg_rational()),
            d(rng.nonneg_rational());
        ConstraintFunction4 f = eight_vertex_signature(a, b, c, d);
        for (int e = 0; e < 16; ++e)
            ch.expect(f.at(e) == f.at(15 - e), "eight-vertex weights not reversal symmetric");
        // reversing all arrows = swapping both endpoints of every edge
        int n = int(rng.uniform(1, 4));
        PortedGraph g = rng.four_regular(n);
        std::vector<GraphEdge> rev;
        for (auto e : g.edges()) rev.push_back({e.b, e.a});
        PortedGraph gr(n, rev);
        ch.expect(z_eight_vertex(g, a, b, c, d) == z_eight_vertex(gr, a, b, c, d),
                  "arrow reversal changed the partition function");
    }
}

void inv_g2_contraction(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases;) {
        GadgetParams p = rng.ordered_params();
        if (!le(p.c * p.d, p.a * p.b)) continue;
        GadgetParams q = g2_step(p);
        Scalar lhs = (q.c - q.d) * p.d * p.d;
        Scalar rhs = (p.c - p.d) * (p.c - p.d) * q.d;
        ch.expect(!lt(q.c, q.d) && le(lhs, rhs), "g2 contraction property");
        ++i;
    }
}

void inv_port_gadgets(Checker& ch, Sampler& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        Matchgate mg = rng.random_matchgate(8, false);
        ConstraintFunction4 f = matchgate_signature(mg);
        int port = int(rng.uniform(1, 4));
        ConstraintFunction4 g = matchgate_signature(flip_port(mg, port));
        for (int e = 0; e < 16; ++e)
            ch.expect(g.at(e) == f.at(e ^ (1 << (4 - port))), "flip_port entry map");
        Scalar s(rng.nonneg_rational(5, 3)), t(rng.nonneg_rational(5, 3));
        ConstraintFunction4 h = matchgate_signature(attach_port_scaler(mg, port, s, t));
        for (int e = 0; e < 16; ++e) {
            bool bit = (e >> (4 - port)) & 1;
            ch.expect(h.at(e) == f.at(e) * (bit ? s : t), "attach_port_scaler entry map");
        }
        // scaling all four ports multiplies every pair product by prod(s_i t_i)
        Matchgate all = mg;
        Scalar factor(1);
        for (int pt = 1; pt <= 4; ++pt) {
            Scalar si(rng.positive_rational(4, 2)), ti(rng.positive_rational(4, 2));
            all = attach_port_scaler(all, pt, si, ti);
            factor *= si * ti;
        }
        GeneralSignature8 before = GeneralSignature8::from_signature(f);
        ConstraintFunction4 fa = matchgate_signature(all);
        GeneralSignature8 after = GeneralSignature8::from_signature(fa);
        ch.expect(after.prod_a() == before.prod_a() * factor &&
                      after.prod_b() == before.prod_b() * factor &&
                      after.prod_c() == before.prod_c() * factor &&
                      after.prod_d() == before.prod_d() * factor,
                  "port scalers do not scale products uniformly");
    }
}

}  // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Sampler rng(seed);
    out.push_back(timed("1 holographic identity (2^V Z = transformed Holant)", 10,
                        [&](Checker& ch) { crit_holographic(ch, rng, 200); }));
    out.push_back(timed("2 ising equivalence and crossing-circuit roundtrip", 10,
                        [&](Checker& ch) { crit_ising(ch, rng, 200, 100); }));
    out.push_back(timed("3 gadget maps match explicit contraction", 5,
                        [&](Checker& ch) { crit_gadget_semantics(ch, rng, 100); }));
    out.push_back(timed("4 convergence bound 2^-2^k after 3(k+1) rounds", 5,
                        [&](Checker& ch) { crit_convergence(ch, rng, 50); }));
    out.push_back(timed("5 star normalization postcondition and recipe replay", 10,
                        [&](Checker& ch) { crit_normalize(ch, rng, 100); }));
    out.push_back(timed("6 matchgate necessity (parity, products, injection)", 60,
                        [&](Checker& ch) { crit_necessity(ch, rng, 1000, 100); }));
    out.push_back(timed("7 matchgate sufficiency round-trips", 60,
                        [&](Checker& ch) { crit_sufficiency(ch, rng, 1000, 200); }));
    out.push_back(timed("8 Minkowski decomposition on closure(U)", 5,
                        [&](Checker& ch) { crit_geometry(ch, rng, 10000); }));
    out.push_back(timed("9 classifier verdicts and invariances", 5,
                        [&](Checker& ch) { crit_classifier(ch, rng, 100000); }));
    return out;
}

std::vector<CheckResult> run_verification(std::uint64_t seed, bool quick) {
    int scale = quick ? 10 : 1;
    Sampler rng(seed);
    std::vector<CheckResult> out;
    out.push_back(timed("holographic identity", 0,
                        [&](Checker& ch) { crit_holographic(ch, rng, 200 / scale); }));
    out.push_back(timed("ising equivalence + roundtrip", 0,
                        [&](Checker& ch) { crit_ising(ch, rng, 200 / scale, 100 / scale); }));
    out.push_back(timed("gadget maps vs contraction", 0,
                        [&](Checker& ch) { crit_gadget_semantics(ch, rng, 100 / scale); }));
    out.push_back(timed("convergence bound", 0,
                        [&](Checker& ch) { crit_convergence(ch, rng, 50 / scale); }));
    out.push_back(timed("star normalization + replay", 0,
                        [&](Checker& ch) { crit_normalize(ch, rng, 100 / scale); }));
    out.push_back(timed("matchgate necessity", 0,
                        [&](Checker& ch) { crit_necessity(ch, rng, 1000 / scale, 100 / scale); }));
    out.push_back(timed("matchgate sufficiency", 0,
                        [&](Checker& ch) { crit_sufficiency(ch, rng, 1000 / scale, 200 / scale); }));
    out.push_back(timed("Minkowski decomposition", 0,
                        [&](Checker& ch) { crit_geometry(ch, rng, 10000 / scale); }));
    out.push_back(timed("classifier verdicts + invariances", 0,
                        [&](Checker& ch) { crit_classifier(ch, rng, 100000 / scale); }));
    out.push_back(timed("holographic transform invariance (bipartite)", 0,
                        [&](Checker& ch) { inv_holographic_bipartite(ch, rng, 25 / scale + 3); }));
    out.push_back(timed("incidence view (neq2 | f) equals the orientation sum", 0,
                        [&](Checker& ch) { inv_incidence_view(ch, rng, 30 / scale + 2); }));
    out.push_back(timed("Holant of the Z-transformed signature equals Z", 0,
                        [&](Checker& ch) { inv_halved_transform(ch, rng, 30 / scale + 2); }));
    out.push_back(timed("round schedule as explicit gadget composition", 0,
                        [&](Checker& ch) { inv_round_replay(ch, rng, 10 / scale + 2); }));
    out.push_back(timed("compose_pair vs 2-chain contraction", 0,
                        [&](Checker& ch) { inv_compose_chain(ch, rng, 100 / scale); }));
    out.push_back(timed("matrix view roundtrip", 0,
                        [&](Checker& ch) { inv_matrix_roundtrip(ch, rng, 200 / scale); }));
    out.push_back(timed("Z-transform block shape", 0,
                        [&](Checker& ch) { inv_z_transform_shape(ch, rng, 100 / scale); }));
    out.push_back(timed("even-orientation counts", 0,
                        [&](Checker& ch) { inv_orientation_counts(ch, rng, 50 / scale + 2); }));
    out.push_back(timed("holant_contract vs brute force", 0,
                        [&](Checker& ch) { inv_contract_vs_brute(ch, rng, 40 / scale + 2); }));
    out.push_back(timed("arrow reversal symmetry", 0,
                        [&](Checker& ch) { inv_arrow_reversal(ch, rng, 30 / scale + 2); }));
    out.push_back(timed("g2 quadratic gap contraction", 0,
                        [&](Checker& ch) { inv_g2_contraction(ch, rng, 100 / scale); }));
    out.push_back(timed("port gadget entry maps", 0,
                        [&](Checker& ch) { inv_port_gadgets(ch, rng, 40 / scale + 2); }));
    return out;
}

}  // namespace ev
