#include "ev/signature.hpp"

#include <bit>

namespace ev {

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::mixed: return "mixed";
        case Parity::zero: return "zero";
    }
    return "?";
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = Scalar(1);
    return r;
}

Mat4 Mat4::antidiag() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.at(i, 3 - i) = Scalar(1);
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool Mat4::operator==(const Mat4& o) const {
    for (int i = 0; i < 16; ++i)
        if (!(m[i] == o.m[i])) return false;
    return true;
}

namespace {
// entry index <-> matrix position under r = 2*x1+x2, c = 2*x4+x3
inline int entry_index(int r, int c) {
    int x1 = r >> 1, x2 = r & 1, x4 = c >> 1, x3 = c & 1;
    return x1 * 8 + x2 * 4 + x3 * 2 + x4;
}
}  // namespace

ConstraintFunction4 ConstraintFunction4::from_matrix(const Mat4& m) {
    ConstraintFunction4 f;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) f.e_[entry_index(r, c)] = m.at(r, c);
    return f;
}

ConstraintFunction4 ConstraintFunction4::equality4() {
    ConstraintFunction4 f;
    f.e_[0] = Scalar(1);
    f.e_[15] = Scalar(1);
    return f;
}

Mat4 ConstraintFunction4::matrix_view() const {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = e_[entry_index(r, c)];
    return m;
}

Parity ConstraintFunction4::parity() const { return parity_check(*this); }

bool ConstraintFunction4::is_zero_field_even() const {
    if (parity() == Parity::mixed || parity() == Parity::odd) return false;
    return e_[0b0000] == e_[0b1111] && e_[0b0011] == e_[0b1100] &&
           e_[0b0110] == e_[0b1001] && e_[0b0101] == e_[0b1010];
}

ConstraintFunction4 ConstraintFunction4::scaled(const Scalar& s) const {
    ConstraintFunction4 f;
    for (int i = 0; i < 16; ++i) f.e_[i] = e_[i] * s;
    return f;
}

bool ConstraintFunction4::operator==(const ConstraintFunction4& o) const {
    for (int i = 0; i < 16; ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

ConstraintFunction4 eight_vertex_signature(const Scalar& a, const Scalar& b,
                                           const Scalar& c, const Scalar& d) {
    ConstraintFunction4 f;
    f.at(0b0000) = d;
    f.at(0b1111) = d;
    f.at(0b0011) = a;
    f.at(0b1100) = a;
    f.at(0b0110) = b;
    f.at(0b1001) = b;
    f.at(0b0101) = c;
    f.at(0b1010) = c;
    return f;
}

EightVertexParams eight_vertex_params(const ConstraintFunction4& f) {
    if (!f.is_zero_field_even()) throw domain_error("not a zero-field even signature");
    return {f.at(0b0011), f.at(0b0110), f.at(0b0101), f.at(0b0000)};
}

Parity parity_check(const ConstraintFunction4& f) {
    bool even = false, odd = false;
    for (int i = 0; i < 16; ++i) {
        if (f.at(i).is_zero()) continue;
        if (std::popcount(unsigned(i)) % 2 == 0) even = true;
        else odd = true;
    }
    if (even && odd) return Parity::mixed;
    if (even) return Parity::even;
    if (odd) return Parity::odd;
    return Parity::zero;
}

const char* abc_perm_name(AbcPerm p) {
    switch (p) {
        case AbcPerm::identity: return "identity";
        case AbcPerm::swap_ab: return "swap_ab";
        case AbcPerm::swap_ac: return "swap_ac";
        case AbcPerm::swap_bc: return "swap_bc";
        case AbcPerm::cycle_abc: return "cycle_abc";
        case AbcPerm::cycle_acb: return "cycle_acb";
    }
    return "?";
}

AbcPerm parse_abc_perm(const std::string& name) {
    for (AbcPerm p : {AbcPerm::identity, AbcPerm::swap_ab, AbcPerm::swap_ac, AbcPerm::swap_bc,
                      AbcPerm::cycle_abc, AbcPerm::cycle_acb})
        if (name == abc_perm_name(p)) return p;
    throw domain_error("unknown permutation: " + name);
}

std::array<int, 3> abc_perm_slot_source(AbcPerm p) {
    // cycle_abc sends the value of a to slot b (and b to c, c to a).
    switch (p) {
        case AbcPerm::identity: return {0, 1, 2};
        case AbcPerm::swap_ab: return {1, 0, 2};
        case AbcPerm::swap_ac: return {2, 1, 0};
        case AbcPerm::swap_bc: return {0, 2, 1};
        case AbcPerm::cycle_abc: return {2, 0, 1};
        case AbcPerm::cycle_acb: return {1, 2, 0};
    }
    return {0, 1, 2};
}

AbcPerm inverse_perm(AbcPerm p) {
    if (p == AbcPerm::cycle_abc) return AbcPerm::cycle_acb;
    if (p == AbcPerm::cycle_acb) return AbcPerm::cycle_abc;
    return p;  // transpositions and identity are involutions
}

namespace {
// Argument relabelings realizing each a,b,c permutation, fixed canonically
// and verified entry-wise in tests:
//   swap x2,x4 -> a<->b;  swap x2,x3 -> a<->c;  swap x1,x2 -> b<->c.
// arg_perm[i] = which input argument feeds position i of f.
std::array<int, 4> arg_perm_for(AbcPerm p) {
    switch (p) {
        case AbcPerm::identity: return {0, 1, 2, 3};
        case AbcPerm::swap_ab: return {0, 3, 2, 1};
        case AbcPerm::swap_ac: return {0, 2, 1, 3};
        case AbcPerm::swap_bc: return {1, 0, 2, 3};
        case AbcPerm::cycle_abc: return {3, 0, 2, 1};  // swap_bc composed with swap_ab
        case AbcPerm::cycle_acb: return {1, 3, 2, 0};  // swap_ab composed with swap_bc
    }
    return {0, 1, 2, 3};
}
}  // namespace

ConstraintFunction4 permute_abc(const ConstraintFunction4& f, AbcPerm perm) {
    if (!f.is_zero_field_even()) throw domain_error("permute_abc requires a zero-field even signature");
    auto ap = arg_perm_for(perm);
    ConstraintFunction4 g;
    for (int y = 0; y < 16; ++y) {
        int bits[4] = {(y >> 3) & 1, (y >> 2) & 1, (y >> 1) & 1, y & 1};
        int src = bits[ap[0]] * 8 + bits[ap[1]] * 4 + bits[ap[2]] * 2 + bits[ap[3]];
        g.at(y) = f.at(src);
    }
    return g;
}

Transform2::Transform2(std::array<Scalar, 4> m, Rational prefactor_num, Rational prefactor_sqrt)
    : m_(std::move(m)), pre_num_(std::move(prefactor_num)), pre_sqrt_(std::move(prefactor_sqrt)) {
    if (pre_sqrt_ <= 0) throw domain_error("prefactor sqrt argument must be positive");
}

Transform2 Transform2::identity() {
    return Transform2({Scalar(1), Scalar(0), Scalar(0), Scalar(1)});
}

Transform2 Transform2::z() {
    return Transform2({Scalar::exact(1), Scalar::exact(1), Scalar::exact(0, 1), Scalar::exact(0, -1)},
                      Rational(1), rational(1, 2));
}

Transform2 Transform2::z_inv() {
    return Transform2({Scalar::exact(1), Scalar::exact(0, -1), Scalar::exact(1), Scalar::exact(0, 1)},
                      Rational(1), rational(1, 2));
}

Scalar Transform2::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

bool Transform2::invertible() const { return !det().is_zero() && pre_num_ != 0; }

Transform2 Transform2::inverse() const {
    if (!invertible()) throw domain_error("non-invertible transform");
    Scalar dinv = det().inverse();
    std::array<Scalar, 4> adj = {m_[3] * dinv, -m_[1] * dinv, -m_[2] * dinv, m_[0] * dinv};
    // 1 / (num * sqrt(s)) = (1/(num*s)) * sqrt(s)
    return Transform2(std::move(adj), Rational(1) / (pre_num_ * pre_sqrt_), pre_sqrt_);
}

Scalar Transform2::prefactor_power(int k) const {
    if (k % 2 != 0) throw domain_error("prefactor power requires even arity");
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= pre_num_;
    for (int i = 0; i < k / 2; ++i) r *= pre_sqrt_;
    return Scalar(r);
}

ConstraintFunction4 apply_holographic(const Transform2& t, const ConstraintFunction4& f) {
    if (!t.invertible()) throw domain_error("non-invertible transform");
    // Apply the 2x2 matrix along each of the four axes in turn.
    std::array<Scalar, 16> cur = f.entries();
    for (int axis = 0; axis < 4; ++axis) {
        int stride = 1 << (3 - axis);
        std::array<Scalar, 16> next{};
        for (int idx = 0; idx < 16; ++idx) {
            int bit = (idx / stride) & 1;
            int base = idx - bit * stride;
            next[idx] = t.at(bit, 0) * cur[base] + t.at(bit, 1) * cur[base + stride];
        }
        cur = next;
    }
    Scalar pre = t.prefactor_power(4);
    ConstraintFunction4 g(cur);
    return g.scaled(pre);
}

EdgeFunction2 EdgeFunction2::eq2() {
    EdgeFunction2 g;
    g.m = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    return g;
}

EdgeFunction2 EdgeFunction2::neq2() {
    EdgeFunction2 g;
    g.m = {Scalar(0), Scalar(1), Scalar(1), Scalar(0)};
    return g;
}

EdgeFunction2 transform_edge_function(const EdgeFunction2& g, const Transform2& t_inv) {
    // g'(u1,u2) = sum_v g(v1,v2) T^{-1}[v1][u1] T^{-1}[v2][u2]
    EdgeFunction2 out;
    for (int u = 0; u < 4; ++u) {
        int u1 = u >> 1, u2 = u & 1;
        Scalar acc(0);
        for (int v = 0; v < 4; ++v) {
            int v1 = v >> 1, v2 = v & 1;
            acc += g.m[v] * t_inv.at(v1, u1) * t_inv.at(v2, u2);
        }
        out.m[u] = acc * t_inv.prefactor_power(2);
    }
    return out;
}

ConstraintFunction4 compose_pair(const ConstraintFunction4& f1, BinaryConnector conn,
                                 const ConstraintFunction4& f2) {
    Mat4 g = f1.matrix_view() * conn.lifted() * f2.matrix_view();
    return ConstraintFunction4::from_matrix(g);
}

}  // namespace ev
