#include <doctest.h>

#include "ev/sampling.hpp"
#include "ev/signature.hpp"

using namespace ev;

namespace {

Mat4 mat(std::array<long, 16> v) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.m[i] = Scalar(v[i]);
    return m;
}

}  // namespace

TEST_CASE("eight_vertex_signature matrix form") {
    auto f = eight_vertex_signature(Scalar(1), Scalar(2), Scalar(3), Scalar(4));
    CHECK(f.matrix_view() == mat({4, 0, 0, 1, 0, 2, 3, 0, 0, 3, 2, 0, 1, 0, 0, 4}));
    CHECK(f.parity() == Parity::even);

    auto zero = eight_vertex_signature(Scalar(0), Scalar(0), Scalar(0), Scalar(0));
    CHECK(zero.parity() == Parity::zero);

    auto ones = eight_vertex_signature(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
    int nonzero = 0;
    for (int i = 0; i < 16; ++i)
        if (!ones.at(i).is_zero()) ++nonzero;
    CHECK(nonzero == 8);
}

TEST_CASE("matrix view round-trips with the flat entry list") {
    Sampler rng(7);
    for (int i = 0; i < 20; ++i) {
        auto f = rng.random_signature();
        CHECK(ConstraintFunction4::from_matrix(f.matrix_view()) == f);
    }
}

TEST_CASE("apply_holographic identity and Z examples") {
    auto f = eight_vertex_signature(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
    CHECK(apply_holographic(Transform2::identity(), f) == f);

    auto g = apply_holographic(Transform2::z(), f);
    CHECK(g.matrix_view() == mat({2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2}));

    auto h = apply_holographic(Transform2::z(),
                               eight_vertex_signature(Scalar(1), Scalar(2), Scalar(3), Scalar(4)));
    CHECK(h.matrix_view() == mat({5, 0, 0, 0, 0, -1, -2, 0, 0, -2, -1, 0, 0, 0, 0, 5}));
}

TEST_CASE("apply_holographic equals the explicit 16x16 Kronecker contraction") {
    Sampler rng(11);
    for (int iter = 0; iter < 10; ++iter) {
        Transform2 t = Transform2::identity();
        while (true) {
            std::array<Scalar, 4> m = {rng.gaussian_rational(), rng.gaussian_rational(),
                                       rng.gaussian_rational(), rng.gaussian_rational()};
            Transform2 cand(m);
            if (cand.invertible()) {
                t = cand;
                break;
            }
        }
        auto f = rng.random_signature();
        auto got = apply_holographic(t, f);
        // oracle: assemble T^{(x) 4} as a dense 16x16 matrix, then mat-vec
        for (int y = 0; y < 16; ++y) {
            Scalar acc(0);
            for (int x = 0; x < 16; ++x) {
                Scalar coef(1);
                for (int axis = 0; axis < 4; ++axis)
                    coef *= t.at((y >> (3 - axis)) & 1, (x >> (3 - axis)) & 1);
                acc += coef * f.at(x);
            }
            CHECK(got.at(y) == acc);
        }
    }
}

TEST_CASE("inverse Z transform turns equality into the even-parity function") {
    ConstraintFunction4 g = apply_holographic(Transform2::z_inv(), ConstraintFunction4::equality4());
    for (int i = 0; i < 16; ++i) {
        bool even = __builtin_popcount(unsigned(i)) % 2 == 0;
        CHECK(g.at(i) == (even ? Scalar(rational(1, 2)) : Scalar(0)));
    }
}

TEST_CASE("singular transforms are rejected") {
    Transform2 s({Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
    CHECK_FALSE(s.invertible());
    auto f = eight_vertex_signature(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
    CHECK_THROWS_WITH_AS(apply_holographic(s, f), "non-invertible transform", domain_error);
}

TEST_CASE("Z inverse matches and neq2 transforms to eq2") {
    Transform2 z = Transform2::z(), zi = Transform2::z_inv();
    // Z * Z^-1 = I entrywise with the prefactors multiplied out
    Scalar pre = Scalar(z.prefactor_power(2));
    std::array<Scalar, 4> prod;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            prod[2 * r + c] = (z.at(r, 0) * zi.at(0, c) + z.at(r, 1) * zi.at(1, c)) * pre;
    CHECK(prod[0] == Scalar(1));
    CHECK(prod[1].is_zero());
    CHECK(prod[2].is_zero());
    CHECK(prod[3] == Scalar(1));

    EdgeFunction2 eq = transform_edge_function(EdgeFunction2::neq2(), zi);
    CHECK(eq.at(0, 0) == Scalar(1));
    CHECK(eq.at(1, 1) == Scalar(1));
    CHECK(eq.at(0, 1).is_zero());
    CHECK(eq.at(1, 0).is_zero());
}

TEST_CASE("compose_pair examples") {
    auto ones = eight_vertex_signature(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
    auto twos = eight_vertex_signature(Scalar(2), Scalar(2), Scalar(2), Scalar(2));
    CHECK(compose_pair(ones, {BinaryConnector::NEQ2}, ones) == twos);

    Sampler rng(3);
    auto f1 = rng.random_signature();
    CHECK(compose_pair(f1, {BinaryConnector::EQ2}, ConstraintFunction4::from_matrix(Mat4::identity())) == f1);
}

TEST_CASE("permute_abc relabelings") {
    auto f = eight_vertex_signature(Scalar(1), Scalar(2), Scalar(3), Scalar(4));
    auto swapped = permute_abc(f, AbcPerm::swap_bc);
    CHECK(eight_vertex_params(swapped).b == Scalar(3));
    CHECK(eight_vertex_params(swapped).c == Scalar(2));
    CHECK(permute_abc(f, AbcPerm::identity) == f);

    auto cycled = permute_abc(f, AbcPerm::cycle_abc);
    auto p = eight_vertex_params(cycled);
    CHECK(p.a == Scalar(3));
    CHECK(p.b == Scalar(1));
    CHECK(p.c == Scalar(2));
    CHECK(p.d == Scalar(4));

    // each relabeling realizes exactly the slot permutation it names
    Sampler rng(5);
    for (AbcPerm perm : {AbcPerm::identity, AbcPerm::swap_ab, AbcPerm::swap_ac, AbcPerm::swap_bc,
                         AbcPerm::cycle_abc, AbcPerm::cycle_acb}) {
        Scalar vals[3] = {Scalar(rng.positive_rational()), Scalar(rng.positive_rational()),
                          Scalar(rng.positive_rational())};
        Scalar d(rng.positive_rational());
        auto g = eight_vertex_signature(vals[0], vals[1], vals[2], d);
        auto src = abc_perm_slot_source(perm);
        auto q = eight_vertex_params(permute_abc(g, perm));
        CHECK(q.a == vals[src[0]]);
        CHECK(q.b == vals[src[1]]);
        CHECK(q.c == vals[src[2]]);
        CHECK(q.d == d);
    }

    ConstraintFunction4 not_ev;
    not_ev.at(0b0001) = Scalar(1);
    CHECK_THROWS_AS(permute_abc(not_ev, AbcPerm::swap_ab), domain_error);
}

TEST_CASE("parity classification") {
    CHECK(parity_check(eight_vertex_signature(Scalar(1), Scalar(2), Scalar(3), Scalar(4))) ==
          Parity::even);
    ConstraintFunction4 exact_one;
    for (int i : {0b1000, 0b0100, 0b0010, 0b0001}) exact_one.at(i) = Scalar(1);
    CHECK(parity_check(exact_one) == Parity::odd);
    ConstraintFunction4 all_ones;
    for (int i = 0; i < 16; ++i) all_ones.at(i) = Scalar(1);
    CHECK(parity_check(all_ones) == Parity::mixed);
    CHECK(parity_check(ConstraintFunction4::zero()) == Parity::zero);
}
