#include <doctest.h>

#include "ev/matchgate.hpp"
#include "ev/sampling.hpp"

using namespace ev;

namespace {

Matchgate k4_ones() {
    return Matchgate::k4({Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
}

Mat4 mat(std::array<long, 16> v) {
    Mat4 m;
    for (int i = 0; i < 16; ++i) m.m[i] = Scalar(v[i]);
    return m;
}

}  // namespace

TEST_CASE("matchgate signatures by perfect-matching enumeration") {
    CHECK(matchgate_signature(k4_ones()).matrix_view() ==
          mat({3, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1}));

    Matchgate pin(1, {}, {0, 0, 0, 0});
    ConstraintFunction4 exact_one = matchgate_signature(pin);
    for (int i = 0; i < 16; ++i) {
        bool weight1 = __builtin_popcount(unsigned(i)) == 1;
        CHECK(exact_one.at(i) == (weight1 ? Scalar(1) : Scalar(0)));
    }

    Scalar w(rational(5, 3));
    Matchgate two(2, {{0, 1, w}}, {0, 0, 1, 1});
    CHECK(matchgate_signature(two).matrix_view() ==
          ConstraintFunction4::from_matrix([&] {
              Mat4 m;
              m.at(0, 0) = w;
              m.at(1, 1) = Scalar(1);
              m.at(1, 2) = Scalar(1);
              m.at(2, 1) = Scalar(1);
              m.at(2, 2) = Scalar(1);
              return m;
          }()).matrix_view());
}

TEST_CASE("flip_port semantics") {
    Matchgate g = k4_ones();
    ConstraintFunction4 f = matchgate_signature(g);
    CHECK(f.parity() == Parity::even);
    Matchgate flipped = flip_port(g, 2);
    ConstraintFunction4 f2 = matchgate_signature(flipped);
    CHECK(f2.parity() == Parity::odd);
    for (int e = 0; e < 16; ++e) CHECK(f2.at(e) == f.at(e ^ 0b0100));
    CHECK(matchgate_signature(flip_port(flipped, 2)) == f);

    Scalar w(rational(5, 3));
    Matchgate two(2, {{0, 1, w}}, {0, 0, 1, 1});
    ConstraintFunction4 g1 = matchgate_signature(flip_port(two, 1));
    ConstraintFunction4 base = matchgate_signature(two);
    for (int e = 0; e < 16; ++e) CHECK(g1.at(e) == base.at(e ^ 0b1000));
}

TEST_CASE("attach_port_scaler semantics") {
    Matchgate g = k4_ones();
    ConstraintFunction4 f = matchgate_signature(g);
    CHECK(matchgate_signature(attach_port_scaler(g, 3, Scalar(1), Scalar(1))) == f);

    ConstraintFunction4 doubled = matchgate_signature(attach_port_scaler(g, 1, Scalar(2), Scalar(1)));
    CHECK(doubled.matrix_view() == mat({3, 0, 0, 1, 0, 1, 1, 0, 0, 2, 2, 0, 2, 0, 0, 2}));
}

TEST_CASE("membership and the product inequalities") {
    GeneralSignature8 ones{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                           Scalar(1), Scalar(1), Scalar(1), Scalar(1), Parity::even};
    CHECK(membership(ones).kind == MembershipKind::interior);

    GeneralSignature8 bd{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                         Scalar(1), Scalar(1), Scalar(3), Scalar(1), Parity::even};
    Membership m = membership(bd);
    CHECK(m.kind == MembershipKind::boundary);
    CHECK(m.tight[0]);  // the d facet

    GeneralSignature8 out{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                          Scalar(1), Scalar(1), Scalar(4), Scalar(1), Parity::even};
    Membership mo = membership(out);
    CHECK(mo.kind == MembershipKind::outside);
    CHECK(mo.violated[0]);
}

TEST_CASE("check_injection_mu") {
    auto rep = check_injection_mu(k4_ones());
    CHECK(rep.injective);
    CHECK(rep.weight_preserving);
    CHECK(rep.inequality_holds);
    CHECK(rep.pairs == 1);

    // no matching includes dangling ports 1,2 when their vertices are adjacent
    // to nothing: vacuous pass
    Matchgate sparse(5, {{2, 3, Scalar(1)}}, {0, 1, 2, 3});
    auto vac = check_injection_mu(sparse);
    CHECK(vac.vacuous);
    CHECK(vac.inequality_holds);

    Sampler rng(43);
    for (int i = 0; i < 25; ++i) {
        auto r = check_injection_mu(rng.random_matchgate(8, false));
        CHECK(r.injective);
        CHECK(r.weight_preserving);
        CHECK(r.inequality_holds);
    }
}

TEST_CASE("random matchgates have pure parity and stay in the region") {
    Sampler rng(47);
    for (int i = 0; i < 60; ++i) {
        ConstraintFunction4 f = matchgate_signature(rng.random_matchgate(9));
        Parity p = f.parity();
        CHECK(p != Parity::mixed);
        if (p == Parity::zero) continue;
        CHECK(membership(GeneralSignature8::from_signature(f)).kind != MembershipKind::outside);
    }
}

TEST_CASE("neq2 gate constant") {
    auto sig = neq2_gate().signature();
    CHECK(sig[0].is_zero());
    CHECK(sig[1] == Scalar(1));
    CHECK(sig[2] == Scalar(1));
    CHECK(sig[3].is_zero());
}
