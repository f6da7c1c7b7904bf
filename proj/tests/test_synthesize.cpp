#include <doctest.h>

#include <cmath>

#include "ev/sampling.hpp"
#include "ev/synthesize.hpp"

using namespace ev;

TEST_CASE("decompose_minkowski closed-form branch") {
    auto sym = decompose_minkowski({Scalar(1), Scalar(1), Scalar(1)});
    CHECK(sym.v.x == Scalar(rational(1, 3)));
    CHECK(sym.v.y == Scalar(rational(1, 3)));
    CHECK(sym.w.x == Scalar(rational(2, 3)));
    CHECK(lt(Scalar(0), sym.margin));

    auto d = decompose_minkowski({Scalar(rational(1, 2)), Scalar(rational(2, 5)), Scalar(rational(3, 10))});
    CHECK(d.v.x == Scalar(rational(13, 30)));
    CHECK(d.v.y == Scalar(rational(10, 30)));
    CHECK(d.v.z == Scalar(rational(7, 30)));
    CHECK(d.w.x == Scalar(rational(1, 15)));
    CHECK(d.w.y == Scalar(rational(1, 15)));
}

TEST_CASE("decompose_minkowski polygon branch") {
    auto d = decompose_minkowski({Scalar(2), Scalar(rational(3, 5)), Scalar(rational(3, 5))});
    // v on the simplex, w in the open cone, v + w = u
    CHECK(d.v.x + d.v.y + d.v.z == Scalar(1));
    CHECK(d.v.x + d.w.x == Scalar(2));
    CHECK(d.v.y + d.w.y == Scalar(rational(3, 5)));
    CHECK(lt(Scalar(0), d.margin));  // strict interior input
    CHECK(lt(d.w.x, d.w.y + d.w.z));

    CHECK_THROWS_WITH_AS(decompose_minkowski({Scalar(5), Scalar(1), Scalar(1)}),
                         "not in Minkowski region", domain_error);
}

TEST_CASE("decompose_minkowski float mode stays within 1e-12") {
    auto d = decompose_minkowski({Scalar::flt(0.5), Scalar::flt(0.4), Scalar::flt(0.3)});
    CHECK_FALSE(d.v.x.is_exact());
    CHECK(std::abs(d.v.x.to_double() + d.w.x.to_double() - 0.5) <= 1e-12);
    CHECK(std::abs(d.v.x.to_double() + d.v.y.to_double() + d.v.z.to_double() - 1.0) <= 1e-12);
}

TEST_CASE("decompose_minkowski on closure boundary") {
    // bottom facet x+y+z = 1: lambda = 0, w = 0
    auto d = decompose_minkowski({Scalar(rational(1, 2)), Scalar(rational(1, 4)), Scalar(rational(1, 4))});
    CHECK(d.w.x.is_zero());
    CHECK(d.margin.is_zero());
}

TEST_CASE("synthesize_even: boundary-d all-ones K4") {
    GeneralSignature8 s{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                        Scalar(1), Scalar(1), Scalar(3), Scalar(1), Parity::even};
    SynthesisResult res = synthesize_even(s);
    CHECK(res.route == "k4");
    CHECK(res.residual == 0.0);
    CHECK(res.gate.vertex_count() == 4);
    for (const auto& e : res.gate.edges()) CHECK(e.w == Scalar(1));
    CHECK(res.realized == s.to_signature());
    CHECK(res.scale == Scalar(1));
}

TEST_CASE("synthesize_even: interior all-ones goes through the K6") {
    GeneralSignature8 s{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                        Scalar(1), Scalar(1), Scalar(1), Scalar(1), Parity::even};
    SynthesisResult res = synthesize_even(s);
    CHECK(res.route == "k6");
    CHECK(res.residual <= 1e-6);
    REQUIRE(res.k6.has_value());
    CHECK(res.k6->scale_c > 0);
}

TEST_CASE("synthesize_even rejects out-of-region tuples") {
    GeneralSignature8 bad{Scalar(1), Scalar(1), Scalar(1), Scalar(1),
                          Scalar(1), Scalar(1), Scalar(4), Scalar(1), Parity::even};
    CHECK_THROWS_AS(synthesize_even(bad), domain_error);
    GeneralSignature8 odd_tuple{Scalar(1), Scalar(0), Scalar(1), Scalar(0),
                                Scalar(0), Scalar(1), Scalar(1), Scalar(0), Parity::odd};
    CHECK_THROWS_AS(synthesize_even(odd_tuple), domain_error);  // parity mismatch
}

TEST_CASE("synthesize_odd: ExactOne4") {
    GeneralSignature8 s{Scalar(1), Scalar(0), Scalar(1), Scalar(0),
                        Scalar(0), Scalar(1), Scalar(1), Scalar(0), Parity::odd};
    ConstraintFunction4 target = s.to_signature();
    for (int i = 0; i < 16; ++i) {
        bool weight1 = __builtin_popcount(unsigned(i)) == 1;
        CHECK(target.at(i) == (weight1 ? Scalar(1) : Scalar(0)));
    }
    SynthesisResult res = synthesize_odd(s);
    CHECK(res.residual <= 1e-6);
    CHECK(matchgate_signature(res.gate).parity() == Parity::odd);
}

TEST_CASE("synthesize_even: zero-product and degenerate families") {
    // one zero product (d), strict triangle on the rest
    GeneralSignature8 dz{Scalar(2), Scalar(1), Scalar(1), Scalar(2),
                         Scalar(1), Scalar(1), Scalar(0), Scalar(2), Parity::even};
    SynthesisResult res = synthesize_even(dz);
    CHECK(res.residual <= 1e-6);
    CHECK(res.route.substr(0, 2) == "k6");

    // all products zero, mixed support
    GeneralSignature8 az{Scalar(2), Scalar(0), Scalar(3), Scalar(0),
                         Scalar(5), Scalar(0), Scalar(7), Scalar(0), Parity::even};
    SynthesisResult res2 = synthesize_even(az);
    CHECK(res2.residual == 0.0);

    // the all-zero function
    GeneralSignature8 zz{Scalar(0), Scalar(0), Scalar(0), Scalar(0),
                         Scalar(0), Scalar(0), Scalar(0), Scalar(0), Parity::even};
    SynthesisResult res3 = synthesize_even(zz);
    CHECK(res3.route == "zero");
    CHECK(matchgate_signature(res3.gate).parity() == Parity::zero);
}

TEST_CASE("synthesis over the {0,1,2}^8 grid, subsampled") {
    long idx[8];
    for (long code = 0; code < 6561; code += 13) {
        long c2 = code;
        for (int i = 0; i < 8; ++i) {
            idx[i] = c2 % 3;
            c2 /= 3;
        }
        GeneralSignature8 s{Scalar(idx[0]), Scalar(idx[1]), Scalar(idx[2]), Scalar(idx[3]),
                            Scalar(idx[4]), Scalar(idx[5]), Scalar(idx[6]), Scalar(idx[7]),
                            Parity::even};
        if (membership(s).kind == MembershipKind::outside) continue;
        SynthesisResult res = synthesize_even(s);
        CHECK(res.residual <= 1e-6);
        GeneralSignature8 o{s.b2, s.b1, s.a2, s.a1, s.d2, s.d1, s.c2, s.c1, Parity::odd};
        SynthesisResult ro = synthesize_odd(o);
        CHECK(ro.residual <= 1e-6);
    }
}

TEST_CASE("synthesized gates reproduce random in-region tuples") {
    Sampler rng(53);
    int done = 0;
    while (done < 40) {
        GeneralSignature8 s;
        s.parity = Parity::even;
        Scalar* slots[8] = {&s.a1, &s.a2, &s.b1, &s.b2, &s.c1, &s.c2, &s.d1, &s.d2};
        for (auto* p : slots) *p = Scalar(rng.positive_rational(5, 3));
        if (membership(s).kind == MembershipKind::outside) continue;
        SynthesisResult res = synthesize_even(s);
        CHECK(res.residual <= 1e-6);
        ++done;
    }
}
