#include "ev/synthesize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace ev {

namespace {

Rational as_rational(const Scalar& s) {
    if (s.is_exact()) return s.to_rational();
    Rational q(s.to_double());  // exact binary expansion of the double
    q.canonicalize();
    return q;
}

struct HalfPlane {
    Rational a, b, c;  // a v1 + b v2 <= c
};

using Poly = std::vector<std::pair<Rational, Rational>>;

Poly clip(const Poly& poly, const HalfPlane& h) {
    Poly out;
    size_t n = poly.size();
    auto val = [&](const std::pair<Rational, Rational>& p) -> Rational {
        return h.a * p.first + h.b * p.second - h.c;
    };
    for (size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        Rational vp = val(p), vq = val(q);
        if (vp <= 0) out.push_back(p);
        if ((vp < 0 && vq > 0) || (vp > 0 && vq < 0)) {
            Rational t = vp / (vp - vq);
            out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
        }
    }
    return out;
}

}  // namespace

DecompositionResult decompose_minkowski(const Vec3& u) {
    bool exact = u.x.is_exact() && u.y.is_exact() && u.z.is_exact();
    Rational x = as_rational(u.x), y = as_rational(u.y), z = as_rational(u.z);

    // closure(U)
    if (x < 0 || y < 0 || z < 0 || x > y + z + 1 || y > x + z + 1 || z > x + y + 1 || x + y + z < 1)
        throw domain_error("not in Minkowski region");

    Rational v1, v2, v3;
    if (-x + y + z <= 1 && x - y + z <= 1 && x + y - z <= 1) {
        // tetrahedron: rays from the simplex in direction (1,1,1)
        Rational lam = (x + y + z - 1) / 3;
        v1 = x - lam;
        v2 = y - lam;
        v3 = z - lam;
    } else {
        // 2-variable feasibility for v = (v1, v2, 1 - v1 - v2)
        std::vector<HalfPlane> hs = {
            {-1, 0, 0},                    // v1 >= 0
            {0, -1, 0},                    // v2 >= 0
            {1, 1, 1},                     // v3 >= 0
            {1, 0, x},                     // w1 >= 0
            {0, 1, y},                     // w2 >= 0
            {-1, -1, z - 1},               // w3 >= 0
            {-2, 0, y + z - x - 1},        // w2 + w3 >= w1
            {0, -2, x + z - y - 1},        // w1 + w3 >= w2
            {2, 2, x + y - z + 1},         // w1 + w2 >= w3
        };
        Rational big = x + y + z + 2;
        Poly poly = {{-big, -big}, {big, -big}, {big, big}, {-big, big}};
        for (const auto& h : hs) {
            poly = clip(poly, h);
            if (poly.empty()) throw std::logic_error("Minkowski feasibility polygon vanished");
        }
        Poly distinct;
        for (const auto& p : poly)
            if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
        Rational cx(0), cy(0);
        for (const auto& p : distinct) {
            cx += p.first;
            cy += p.second;
        }
        v1 = cx / long(distinct.size());
        v2 = cy / long(distinct.size());
        v3 = 1 - v1 - v2;
    }

    Rational w1 = x - v1, w2 = y - v2, w3 = z - v3;
    Rational slacks[9] = {v1, v2, v3, w1, w2, w3, w2 + w3 - w1, w1 + w3 - w2, w1 + w2 - w3};
    Rational margin = slacks[0];
    for (const Rational& s : slacks) {
        if (s < 0) throw std::logic_error("Minkowski decomposition violated a constraint");
        margin = std::min(margin, s);
    }

    auto pack = [&](const Rational& q) { return exact ? Scalar(q) : Scalar::flt(q.get_d()); };
    return {{pack(v1), pack(v2), pack(v3)}, {pack(w1), pack(w2), pack(w3)}, pack(margin)};
}

namespace {

// Entry positions of the even tuple in (a1,a2,b1,b2,c1,c2,d1,d2) order.
constexpr int kEvenPos[8] = {0b0011, 0b1100, 0b0110, 0b1001, 0b0101, 0b1010, 0b0000, 0b1111};

GeneralSignature8 transform_tuple(const GeneralSignature8& s, int posmask) {
    ConstraintFunction4 f = s.to_signature();
    ConstraintFunction4 g;
    for (int e = 0; e < 16; ++e) g.at(e) = f.at(e ^ posmask);
    return GeneralSignature8::from_signature(g);
}

std::vector<int> ports_of_mask(int posmask) {
    std::vector<int> ports;
    for (int port = 1; port <= 4; ++port)
        if ((posmask >> (4 - port)) & 1) ports.push_back(port);
    return ports;
}

Matchgate zero_gate() {
    return Matchgate(5, {}, {0, 1, 2, 3});
}

struct CoreResult {
    Matchgate gate;
    std::optional<K6SolveState> k6;
    std::string route;
};

// d-boundary K4: weights are the entries divided by d2.
CoreResult k4_core(const GeneralSignature8& t) {
    Scalar inv = t.d2.inverse();
    std::array<Scalar, 6> w = {t.a1 * inv, t.a2 * inv, t.b1 * inv, t.b2 * inv, t.c1 * inv, t.c2 * inv};
    return {Matchgate::k4(w), std::nullopt, "k4"};
}

double positive_root_o(double target) {
    // o + 1/o = target, branch o >= 1
    return (target + std::sqrt(std::max(0.0, target * target - 4.0))) / 2.0;
}

CoreResult k6_core(const GeneralSignature8& t, bool degenerate_d) {
    Scalar pa = t.prod_a(), pb = t.prod_b(), pc = t.prod_c(), pd = t.prod_d();
    Scalar half(rational(1, 2));
    K6SolveState st;
    st.A = (pb + pc + pd - pa) * half;
    st.B = (pa + pc + pd - pb) * half;
    st.C = (pa + pb + pd - pc) * half;
    st.D = (pa + pb + pc - pd) * half;

    Scalar w56(1);
    if (degenerate_d) {
        // r = s = t = 0 forces (A',B',C') = (A,B,C); D = A + B + C holds since pd = 0.
        st.X = st.Y = st.Z = Scalar(0);
        st.R = st.S = st.T = Scalar(0);
        st.A1 = st.A;
        st.B1 = st.B;
        st.C1 = st.C;
        if (t.d2.is_zero()) w56 = Scalar(0);
    } else {
        Scalar dinv = st.D.inverse();
        auto dec = decompose_minkowski({st.A * dinv, st.B * dinv, st.C * dinv});
        st.A1 = dec.v.x * st.D;
        st.B1 = dec.v.y * st.D;
        st.C1 = dec.v.z * st.D;
        st.X = dec.w.x * st.D;
        st.Y = dec.w.y * st.D;
        st.Z = dec.w.z * st.D;
        st.R = (st.Y + st.Z - st.X) * half;
        st.S = (st.X + st.Z - st.Y) * half;
        st.T = (st.X + st.Y - st.Z) * half;
    }

    // scale so that min(cA', cB', cC') >= 2
    double a1 = st.A1.to_double(), b1 = st.B1.to_double(), c1 = st.C1.to_double();
    double c_scale = std::max({2.0 / a1, 2.0 / b1, 2.0 / c1});
    st.scale_c = c_scale;
    double Ap = c_scale * a1, Bp = c_scale * b1, Cp = c_scale * c1;
    st.o3 = positive_root_o(Ap);
    st.o1 = positive_root_o(Bp);
    st.o2 = positive_root_o(Cp);
    st.p[0] = std::sqrt(st.o2 * st.o3 / st.o1);
    st.p[1] = std::sqrt(st.o3 * st.o1 / st.o2);
    st.p[2] = std::sqrt(st.o1 * st.o2 / st.o3);
    st.p[3] = 1.0 / (st.p[0] * st.p[1] * st.p[2]);
    double sum_p = st.p[0] + st.p[1] + st.p[2] + st.p[3];
    auto quad_root = [&](double rhs) {
        if (rhs <= 0) return 0.0;
        return (-sum_p + std::sqrt(sum_p * sum_p + 4.0 * rhs)) / 2.0;
    };
    double R = c_scale * st.R.to_double(), S = c_scale * st.S.to_double(), T = c_scale * st.T.to_double();
    st.r1 = st.r2 = quad_root(R);
    st.s1 = st.s2 = quad_root(S);
    st.t1 = st.t2 = quad_root(T);

    std::vector<Matchgate::Edge> edges;
    auto add = [&](int u, int v, double w) {
        if (w != 0.0) edges.push_back({u, v, Scalar::flt(w)});
    };
    add(0, 1, st.r1);
    add(2, 3, st.r2);
    add(0, 3, st.s1);
    add(1, 2, st.s2);
    add(0, 2, st.t1);
    add(1, 3, st.t2);
    for (int i = 0; i < 4; ++i) {
        add(i, 4, st.p[i]);
        add(i, 5, st.q[i]);
    }
    if (!w56.is_zero()) edges.push_back({4, 5, Scalar(1)});
    Matchgate gate(6, std::move(edges), {0, 1, 2, 3});
    return {std::move(gate), st, degenerate_d ? "k6-degenerate" : "k6"};
}

// Pair-ratio correction through port scalers, log-space Hadamard solve.
Matchgate fix_pair_ratios(Matchgate gate, const GeneralSignature8& target) {
    ConstraintFunction4 rf = matchgate_signature(gate);
    GeneralSignature8 r = GeneralSignature8::from_signature(rf);
    // the K6 solve must already realize the four products up to one factor c
    {
        double c_ref = 0;
        Scalar tprod[4] = {target.prod_a(), target.prod_b(), target.prod_c(), target.prod_d()};
        Scalar rprod[4] = {r.prod_a(), r.prod_b(), r.prod_c(), r.prod_d()};
        for (int i = 0; i < 4; ++i) {
            double t = tprod[i].to_double(), rr = rprod[i].to_double();
            if (t == 0.0) {
                if (std::abs(rr) > 1e-9) throw std::logic_error("K6 realized a zero product as nonzero");
                continue;
            }
            double ratio = rr / t;
            if (c_ref == 0) c_ref = ratio;
            else if (!approx_equal(ratio, c_ref, 1e-6))
                throw std::logic_error("K6 products not proportional to the target products");
        }
    }
    auto ratio_log = [](const Scalar& t1, const Scalar& t2, const Scalar& r1, const Scalar& r2) {
        return std::log((t2.to_double() / t1.to_double()) / (r2.to_double() / r1.to_double()));
    };
    double Ld;
    if (!target.d1.is_zero()) {
        Ld = ratio_log(target.d1, target.d2, r.d1, r.d2);
    } else if (!target.d2.is_zero()) {
        // product constraint: prod(v_i) = c * d2^2 with realized products = c * target products
        double c_est = r.prod_a().to_double() / target.prod_a().to_double();
        Ld = std::log(c_est * target.d2.to_double() * target.d2.to_double());
    } else {
        Ld = 0.0;
    }
    double La = ratio_log(target.a1, target.a2, r.a1, r.a2);
    double Lb = ratio_log(target.b1, target.b2, r.b1, r.b2);
    double Lc = ratio_log(target.c1, target.c2, r.c1, r.c2);
    // rows: d:(1,1,1,1) a:(1,1,-1,-1) b:(1,-1,-1,1) c:(1,-1,1,-1)
    double u1 = (Ld + La + Lb + Lc) / 4.0;
    double u2 = (Ld + La - Lb - Lc) / 4.0;
    double u3 = (Ld - La - Lb + Lc) / 4.0;
    double u4 = (Ld - La + Lb - Lc) / 4.0;
    double v[4] = {std::exp(u1), std::exp(u2), std::exp(u3), std::exp(u4)};
    for (int port = 1; port <= 4; ++port)
        if (std::abs(v[port - 1] - 1.0) > 1e-15)
            gate = attach_port_scaler(gate, port, Scalar::flt(v[port - 1]), Scalar(1));
    return gate;
}

SynthesisResult finalize(Matchgate gate, const ConstraintFunction4& target,
                         std::optional<K6SolveState> k6, std::string route) {
    ConstraintFunction4 realized = matchgate_signature(gate);

    // scale and residual against the entry of largest target magnitude
    int ref = -1;
    double best = 0.0;
    for (int e = 0; e < 16; ++e) {
        double m = std::abs(target.at(e).to_complex());
        if (m > best) {
            best = m;
            ref = e;
        }
    }
    Scalar scale(1);
    double residual = 0.0;
    if (ref >= 0) {
        scale = realized.at(ref) / target.at(ref);
        bool all_exact = scale.is_exact();
        for (int e = 0; e < 16 && all_exact; ++e)
            all_exact = realized.at(e).is_exact() && target.at(e).is_exact();
        if (all_exact) {
            for (int e = 0; e < 16; ++e)
                if (!(realized.at(e) == target.at(e) * scale)) {
                    residual = 1.0;
                    break;
                }
        } else {
            double lam = scale.to_double();
            for (int e = 0; e < 16; ++e) {
                double err = std::abs(realized.at(e).to_double() - lam * target.at(e).to_double());
                residual = std::max(residual, err / std::max(1e-300, std::abs(lam) * best));
            }
        }
    }
    if (residual > 1e-6) {
        std::ostringstream os;
        os << "synthesis round-trip verification failure; residual = " << residual;
        throw domain_error(os.str());
    }
    return {std::move(gate), std::move(realized), std::move(scale), residual, std::move(k6), std::move(route)};
}

}  // namespace

SynthesisResult synthesize_even(const GeneralSignature8& s) {
    if (s.parity != Parity::even) throw domain_error("parity mismatch: expected an even tuple");
    Membership mem = membership(s);
    if (mem.kind == MembershipKind::outside) {
        std::string which;
        const char* names = "dabc";
        for (int i = 0; i < 4; ++i)
            if (mem.violated[i]) which += names[i];
        throw domain_error("outside the matchgate region (violated: " + which + ")");
    }

    bool all_entries_zero = true;
    for (const Scalar& e : s.entries()) all_entries_zero &= e.is_zero();
    if (all_entries_zero) return finalize(zero_gate(), s.to_signature(), std::nullopt, "zero");

    Scalar prods[4] = {s.prod_d(), s.prod_a(), s.prod_b(), s.prod_c()};
    bool all_products_zero = true;
    for (const Scalar& p : prods) all_products_zero &= p.is_zero();

    int posmask = 0;
    bool k4_route = false;
    if (all_products_zero) {
        // move any nonzero entry to the f(1111) slot; 0 = 0 is a d-boundary
        for (int i = 0; i < 8; ++i)
            if (!s.entries()[i].is_zero()) {
                posmask = kEvenPos[i] ^ 0b1111;
                break;
            }
        k4_route = true;
    } else if (mem.kind == MembershipKind::boundary) {
        static constexpr int facet_mask[4] = {0b0000, 0b1100, 0b1001, 0b1010};  // d, a, b, c
        for (int i = 0; i < 4; ++i)
            if (mem.tight[i]) {
                posmask = facet_mask[i];
                break;
            }
        k4_route = true;
    } else {
        // strict interior; at most one product is zero
        static constexpr int facet_mask[4] = {0b0000, 0b1100, 0b1001, 0b1010};
        for (int i = 0; i < 4; ++i)
            if (prods[i].is_zero()) {
                posmask = facet_mask[i];
                break;
            }
    }

    GeneralSignature8 t = posmask ? transform_tuple(s, posmask) : s;
    CoreResult core{Matchgate{}, std::nullopt, ""};
    if (k4_route) {
        if (t.d2.is_zero()) {
            posmask ^= 0b1111;  // orient so the nonzero side of the d pair is d2
            t = transform_tuple(s, posmask);
        }
        core = k4_core(t);
    } else if (t.prod_d().is_zero()) {
        if (t.d2.is_zero() && !t.d1.is_zero()) {
            posmask ^= 0b1111;
            t = transform_tuple(s, posmask);
        }
        core = k6_core(t, true);
        core.gate = fix_pair_ratios(std::move(core.gate), t);
    } else {
        core = k6_core(t, false);
        core.gate = fix_pair_ratios(std::move(core.gate), t);
    }

    Matchgate gate = std::move(core.gate);
    for (int port : ports_of_mask(posmask)) gate = flip_port(gate, port);
    return finalize(std::move(gate), s.to_signature(), std::move(core.k6), std::move(core.route));
}

SynthesisResult synthesize_odd(const GeneralSignature8& s) {
    if (s.parity != Parity::odd) throw domain_error("parity mismatch: expected an odd tuple");
    // Flipping port 1 rehouses the S^O parameters into the even positions as
    // (a1,a2,b1,b2,c1,c2,d1,d2) -> (b2,b1,a2,a1,d2,d1,c2,c1).
    GeneralSignature8 even{s.b2, s.b1, s.a2, s.a1, s.d2, s.d1, s.c2, s.c1, Parity::even};
    SynthesisResult inner = synthesize_even(even);
    Matchgate gate = flip_port(inner.gate, 1);
    return finalize(std::move(gate), s.to_signature(), std::move(inner.k6),
                    inner.route + "+flip1");
}

}  // namespace ev
