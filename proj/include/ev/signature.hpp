#pragma once

#include <array>
#include <optional>

#include "ev/scalar.hpp"

namespace ev {

enum class Parity { even, odd, mixed, zero };
const char* parity_name(Parity p);

// 4x4 matrix of scalars. Used as the constraint-matrix view of a 4-ary
// function: row r = 2*x1 + x2, column c = 2*x4 + x3.
struct Mat4 {
    std::array<Scalar, 16> m{};

    Scalar& at(int r, int c) { return m[r * 4 + c]; }
    const Scalar& at(int r, int c) const { return m[r * 4 + c]; }

    static Mat4 identity();
    static Mat4 antidiag();  // the matrix N
    Mat4 operator*(const Mat4& o) const;
    bool operator==(const Mat4& o) const;
};

// 4-ary constraint function. Entries indexed by the bit-string x1x2x3x4
// read as a 4-bit integer with x1 the high bit.
class ConstraintFunction4 {
public:
    ConstraintFunction4() = default;
    explicit ConstraintFunction4(std::array<Scalar, 16> entries) : e_(std::move(entries)) {}

    static ConstraintFunction4 zero() { return ConstraintFunction4(); }
    static ConstraintFunction4 from_matrix(const Mat4& m);
    static ConstraintFunction4 equality4();  // (=4): 1 on 0000 and 1111

    const Scalar& at(int idx) const { return e_[idx]; }
    Scalar& at(int idx) { return e_[idx]; }
    const Scalar& at(int x1, int x2, int x3, int x4) const {
        return e_[x1 * 8 + x2 * 4 + x3 * 2 + x4];
    }
    const std::array<Scalar, 16>& entries() const { return e_; }

    Mat4 matrix_view() const;
    Parity parity() const;
    bool is_zero_field_even() const;  // eight-vertex shape: M = [[d,0,0,a],[0,b,c,0],[0,c,b,0],[a,0,0,d]]

    ConstraintFunction4 scaled(const Scalar& s) const;
    bool operator==(const ConstraintFunction4& o) const;

private:
    std::array<Scalar, 16> e_{};
};

struct EightVertexParams {
    Scalar a, b, c, d;
};

// f with M(f) = [[d,0,0,a],[0,b,c,0],[0,c,b,0],[a,0,0,d]].
ConstraintFunction4 eight_vertex_signature(const Scalar& a, const Scalar& b,
                                           const Scalar& c, const Scalar& d);
// Inverse of the above; throws if f is not of zero-field even form.
EightVertexParams eight_vertex_params(const ConstraintFunction4& f);

Parity parity_check(const ConstraintFunction4& f);

// Permutations of the roles of a, b, c, realized as argument relabelings.
enum class AbcPerm { identity, swap_ab, swap_ac, swap_bc, cycle_abc, cycle_acb };
const char* abc_perm_name(AbcPerm p);
AbcPerm parse_abc_perm(const std::string& name);
AbcPerm inverse_perm(AbcPerm p);
// slot_source[i]: which old slot (0=a,1=b,2=c) the new slot i takes its value from.
std::array<int, 3> abc_perm_slot_source(AbcPerm p);

// Relabels arguments so that the eight-vertex parameters a,b,c are permuted
// and d is fixed. Throws if f is not of zero-field even form.
ConstraintFunction4 permute_abc(const ConstraintFunction4& f, AbcPerm perm);

// Invertible 2x2 transform with an optional irrational prefactor
// num * sqrt(sq). Tensor powers of even arity keep exact mode exact,
// since the prefactor enters as num^d * sq^(d/2).
class Transform2 {
public:
    Transform2(std::array<Scalar, 4> m, Rational prefactor_num = Rational(1),
               Rational prefactor_sqrt = Rational(1));

    static Transform2 identity();
    static Transform2 z();      // (1/sqrt 2) [[1,1],[i,-i]]
    static Transform2 z_inv();  // (1/sqrt 2) [[1,-i],[1,i]]

    const Scalar& at(int r, int c) const { return m_[r * 2 + c]; }
    Scalar det() const;
    bool invertible() const;
    Transform2 inverse() const;

    // prefactor^k for even k, as an exact-friendly scalar.
    Scalar prefactor_power(int k) const;

private:
    std::array<Scalar, 4> m_;
    Rational pre_num_, pre_sqrt_;
};

// T^{tensor 4} f. Throws domain_error("non-invertible transform") on singular T.
ConstraintFunction4 apply_holographic(const Transform2& t, const ConstraintFunction4& f);

// Binary edge function as a 2x2 matrix g(x,y) = m[2x+y].
struct EdgeFunction2 {
    std::array<Scalar, 4> m{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};

    const Scalar& at(int x, int y) const { return m[2 * x + y]; }
    static EdgeFunction2 eq2();
    static EdgeFunction2 neq2();
};

// g' = g (T^{-1})^{tensor 2}, the contravariant side of a holographic transform.
EdgeFunction2 transform_edge_function(const EdgeFunction2& g, const Transform2& t_inv);

struct BinaryConnector {
    enum Kind { EQ2, NEQ2 } kind = NEQ2;

    EdgeFunction2 function() const { return kind == EQ2 ? EdgeFunction2::eq2() : EdgeFunction2::neq2(); }
    // The connector lifted to a 2-edge bundle: EQ2 -> I, NEQ2 -> N.
    Mat4 lifted() const { return kind == EQ2 ? Mat4::identity() : Mat4::antidiag(); }
};

// Chains f1 and f2 through two connector vertices: M(g) = M(f1) * C * M(f2).
ConstraintFunction4 compose_pair(const ConstraintFunction4& f1, BinaryConnector conn,
                                 const ConstraintFunction4& f2);

}  // namespace ev
