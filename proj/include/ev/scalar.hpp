#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace ev {

// Domain / precondition failures surfaced to callers.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

Rational rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "p/q", "p", or decimal like "1.25"
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// Relative tolerance used by all float-mode equality checks.
double float_tolerance();
void set_float_tolerance(double tol);

// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;  // throws on zero
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

// Dual-mode scalar: exact Gaussian rational, or double-precision complex.
// Exact-mode arithmetic is closed and error-free; float mode compares through
// the module-level relative tolerance. Mixing modes demotes to float.
class Scalar {
public:
    Scalar() : exact_(true), eq_() {}
    Scalar(long v) : exact_(true), eq_(Rational(v)) {}
    Scalar(Rational v) : exact_(true), eq_(std::move(v)) {}
    Scalar(GaussianRational v) : exact_(true), eq_(std::move(v)) {}

    static Scalar exact(Rational re, Rational im = Rational(0)) { return Scalar(GaussianRational(std::move(re), std::move(im))); }
    static Scalar flt(double re, double im = 0.0);
    static Scalar flt(std::complex<double> z);

    bool is_exact() const { return exact_; }
    bool is_zero() const;
    bool is_real() const;
    bool nonnegative_real() const;

    const GaussianRational& exact_value() const;
    std::complex<double> to_complex() const;
    double to_double() const;        // requires real
    Rational to_rational() const;    // requires exact and real

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar inverse() const;          // throws domain_error on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    // Exact mode: equality. Float mode: relative tolerance comparison.
    bool approx_equal(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return approx_equal(o); }

    std::string str() const;

private:
    bool exact_;
    GaussianRational eq_;
    std::complex<double> fq_{0.0, 0.0};
};

// Total order on real scalars; throws domain_error on non-real input.
int compare_real(const Scalar& x, const Scalar& y);
inline bool lt(const Scalar& x, const Scalar& y) { return compare_real(x, y) < 0; }
inline bool le(const Scalar& x, const Scalar& y) { return compare_real(x, y) <= 0; }

bool approx_equal(double x, double y, double tol);

}  // namespace ev
