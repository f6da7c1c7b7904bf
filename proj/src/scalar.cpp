#include "ev/scalar.hpp"

#include <cmath>
#include <sstream>

namespace ev {

namespace {
double g_tolerance = 1e-9;
}

double float_tolerance() { return g_tolerance; }
void set_float_tolerance(double tol) {
    if (!(tol > 0)) throw domain_error("tolerance must be positive");
    g_tolerance = tol;
}

Rational rational(long num, long den) {
    if (den == 0) throw domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw domain_error("empty rational literal");
    if (text.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0) throw domain_error("bad rational literal: " + text);
        if (q.get_den() == 0) throw domain_error("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (q.set_str(text, 10) != 0) throw domain_error("bad rational literal: " + text);
        q.canonicalize();
        return q;
    }
    // decimal: sign? digits . digits
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw domain_error("bad rational literal: " + text);
    Rational num;
    if (num.set_str(digits, 10) != 0) throw domain_error("bad rational literal: " + text);
    Rational den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q = num / den;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
}

Scalar Scalar::flt(double re, double im) { return flt(std::complex<double>(re, im)); }
Scalar Scalar::flt(std::complex<double> z) {
    Scalar s;
    s.exact_ = false;
    s.fq_ = z;
    return s;
}

bool Scalar::is_zero() const {
    if (exact_) return eq_.is_zero();
    return approx_equal(Scalar::flt(0.0, 0.0));
}

bool Scalar::is_real() const {
    if (exact_) return eq_.is_real();
    return std::abs(fq_.imag()) <= g_tolerance * std::max(1.0, std::abs(fq_.real()));
}

bool Scalar::nonnegative_real() const {
    if (exact_) return eq_.is_real() && eq_.re >= 0;
    return is_real() && fq_.real() >= -g_tolerance;
}

const GaussianRational& Scalar::exact_value() const {
    if (!exact_) throw domain_error("scalar is not exact");
    return eq_;
}

std::complex<double> Scalar::to_complex() const {
    if (exact_) return {eq_.re.get_d(), eq_.im.get_d()};
    return fq_;
}

double Scalar::to_double() const {
    if (!is_real()) throw domain_error("scalar is not real");
    return exact_ ? eq_.re.get_d() : fq_.real();
}

Rational Scalar::to_rational() const {
    if (!exact_ || !eq_.is_real()) throw domain_error("scalar is not an exact real");
    return eq_.re;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(eq_ + o.eq_);
    return flt(to_complex() + o.to_complex());
}
Scalar Scalar::operator-(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(eq_ - o.eq_);
    return flt(to_complex() - o.to_complex());
}
Scalar Scalar::operator*(const Scalar& o) const {
    if (exact_ && o.exact_) return Scalar(eq_ * o.eq_);
    return flt(to_complex() * o.to_complex());
}
Scalar Scalar::operator-() const {
    if (exact_) return Scalar(-eq_);
    return flt(-fq_);
}

Scalar Scalar::inverse() const {
    if (exact_) return Scalar(eq_.inverse());
    if (std::abs(fq_) == 0.0) throw domain_error("inverse of zero");
    return flt(1.0 / fq_);
}

bool approx_equal(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool Scalar::approx_equal(const Scalar& o) const {
    if (exact_ && o.exact_) return eq_ == o.eq_;
    std::complex<double> a = to_complex(), b = o.to_complex();
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= g_tolerance * scale;
}

std::string Scalar::str() const {
    if (exact_) {
        if (eq_.is_real()) return to_string(eq_.re);
        std::ostringstream os;
        os << to_string(eq_.re) << (eq_.im >= 0 ? "+" : "") << to_string(eq_.im) << "i";
        return os.str();
    }
    std::ostringstream os;
    if (std::abs(fq_.imag()) == 0.0) os << fq_.real();
    else os << fq_.real() << (fq_.imag() >= 0 ? "+" : "") << fq_.imag() << "i";
    return os.str();
}

int compare_real(const Scalar& x, const Scalar& y) {
    if (x.is_exact() && y.is_exact()) {
        const auto& a = x.exact_value();
        const auto& b = y.exact_value();
        if (!a.is_real() || !b.is_real()) throw domain_error("comparison of non-real scalars");
        return cmp(a.re, b.re);
    }
    double a = x.to_double(), b = y.to_double();
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

}  // namespace ev
