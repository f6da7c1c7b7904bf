#include <doctest.h>

#include "ev/scalar.hpp"

using namespace ev;

TEST_CASE("exact arithmetic is closed and error-free") {
    Scalar a(rational(1, 3)), b(rational(1, 6));
    CHECK((a + b) == Scalar(rational(1, 2)));
    CHECK((a * b) == Scalar(rational(1, 18)));
    CHECK((a - a).is_zero());
    CHECK((a.inverse() * a) == Scalar(1));

    Scalar i = Scalar::exact(0, 1);
    CHECK((i * i) == Scalar(-1));
    CHECK(i.inverse() == Scalar::exact(0, -1));
    CHECK_THROWS_AS(Scalar(0).inverse(), domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("1.25") == rational(5, 4));
    CHECK(parse_rational("1.2") == rational(6, 5));
    CHECK_THROWS_AS(parse_rational("x"), domain_error);
    CHECK(to_string(rational(6, 4)) == "3/2");
}

TEST_CASE("float mode compares through the module tolerance") {
    Scalar x = Scalar::flt(1.0);
    Scalar y = Scalar::flt(1.0 + 1e-12);
    CHECK(x == y);
    CHECK_FALSE(Scalar::flt(1.0) == Scalar::flt(1.001));
    double saved = float_tolerance();
    set_float_tolerance(1e-2);
    CHECK(Scalar::flt(1.0) == Scalar::flt(1.001));
    set_float_tolerance(saved);
}

TEST_CASE("real comparisons") {
    CHECK(lt(Scalar(rational(1, 3)), Scalar(rational(1, 2))));
    CHECK(le(Scalar(2), Scalar(2)));
    CHECK_THROWS_AS(compare_real(Scalar::exact(0, 1), Scalar(0)), domain_error);
}

TEST_CASE("mixed-mode arithmetic demotes to float") {
    Scalar e(rational(1, 2));
    Scalar f = Scalar::flt(0.25);
    Scalar sum = e + f;
    CHECK_FALSE(sum.is_exact());
    CHECK(sum == Scalar::flt(0.75));
}
