#include "ev/classify.hpp"

#include <array>

namespace ev {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::exactly_tractable: return "exactly-tractable";
        case VerdictKind::fpras: return "FPRAS";
        case VerdictKind::pm_easy: return "PM-easy";
        case VerdictKind::pm_hard: return "PM-hard";
        case VerdictKind::pm_equivalent: return "PM-equivalent";
        case VerdictKind::np_hard: return "NP-hard";
        case VerdictKind::open_in_do: return "open-in-DO";
    }
    return "?";
}

namespace {

void require_nonneg(const Scalar& s) {
    if (!s.nonnegative_real()) throw domain_error("parameters must be nonnegative reals");
}

}  // namespace

RegionFlags region_flags(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    for (const Scalar* s : {&a, &b, &c, &d}) require_nonneg(*s);
    RegionFlags f;
    struct Ineq {
        Scalar lhs, rhs;
        const char* name;
    };
    std::array<Ineq, 4> do_ineqs = {Ineq{a, b + c + d, "DO: a <= b+c+d"},
                                    Ineq{b, a + c + d, "DO: b <= a+c+d"},
                                    Ineq{c, a + b + d, "DO: c <= a+b+d"},
                                    Ineq{d, a + b + c, "DO: d <= a+b+c"}};
    std::array<Ineq, 3> dsum_ineqs = {Ineq{a + d, b + c, "d-SUM: a+d <= b+c"},
                                      Ineq{b + d, a + c, "d-SUM: b+d <= a+c"},
                                      Ineq{c + d, a + b, "d-SUM: c+d <= a+b"}};
    Scalar a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
    std::array<Ineq, 4> sq_ineqs = {Ineq{a2, b2 + c2 + d2, "SQ-SUM: a^2 <= b^2+c^2+d^2"},
                                    Ineq{b2, a2 + c2 + d2, "SQ-SUM: b^2 <= a^2+c^2+d^2"},
                                    Ineq{c2, a2 + b2 + d2, "SQ-SUM: c^2 <= a^2+b^2+d^2"},
                                    Ineq{d2, a2 + b2 + c2, "SQ-SUM: d^2 <= a^2+b^2+c^2"}};
    auto eval = [&](const auto& ineqs) {
        bool all = true;
        for (const auto& q : ineqs) {
            if (q.lhs == q.rhs) f.boundary.push_back(q.name);
            else if (!le(q.lhs, q.rhs)) all = false;
        }
        return all;
    };
    f.in_do = eval(do_ineqs);
    f.in_dsum = eval(dsum_ineqs);
    f.in_sqsum = eval(sq_ineqs);
    return f;
}

Verdict verdict(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Verdict v;
    v.flags = region_flags(a, b, c, d);

    int zeros = 0, zeros_abc = 0;
    for (const Scalar* s : {&a, &b, &c}) {
        if (s->is_zero()) {
            ++zeros;
            ++zeros_abc;
        }
    }
    if (d.is_zero()) ++zeros;

    // planar metadata: {a+d <= b+c, b+d <= a+c, c+d >= a+b} intersect SQ-SUM
    if (v.flags.in_sqsum && le(a + d, b + c) && le(b + d, a + c) && le(a + b, c + d))
        v.planar_note = "planar 4-regular graphs admit an FPRAS at these parameters";

    // exactly tractable special cases
    bool all_equal = a == b && b == c && c == d;
    bool two_zero_rest_equal = false;
    {
        std::array<Scalar, 4> vals = {a, b, c, d};
        for (int i = 0; i < 4 && !two_zero_rest_equal; ++i)
            for (int j = i + 1; j < 4 && !two_zero_rest_equal; ++j) {
                if (!vals[i].is_zero() || !vals[j].is_zero()) continue;
                std::vector<Scalar> rest;
                for (int k = 0; k < 4; ++k)
                    if (k != i && k != j) rest.push_back(vals[k]);
                if (rest[0] == rest[1] && !rest[0].is_zero()) two_zero_rest_equal = true;
            }
    }
    if (all_equal || zeros >= 3 || two_zero_rest_equal) {
        v.kind = VerdictKind::exactly_tractable;
        v.citations.push_back(all_equal ? "uniform weights reduce to counting even orientations"
                                        : "degenerate zero pattern with a closed-form partition function");
        return v;
    }

    if (!v.flags.in_do) {
        v.kind = VerdictKind::np_hard;
        v.citations.push_back("outside the order-disorder region approximation is NP-hard");
        return v;
    }

    if (v.flags.in_dsum && v.flags.in_sqsum) {
        v.kind = VerdictKind::fpras;
        v.citations.push_back("windable region d-SUM intersect SQ-SUM admits an FPRAS");
        return v;
    }

    bool easy = v.flags.in_sqsum;  // reduces to counting perfect matchings
    bool hard = !v.flags.in_dsum && lt(Scalar(0), d) && zeros_abc <= 1;

    if (easy && hard) {
        v.kind = VerdictKind::pm_equivalent;
        v.citations.push_back("matchgate-realizable inside SQ-SUM; outside d-SUM it is as hard as counting perfect matchings");
        return v;
    }
    if (easy) {
        v.kind = VerdictKind::pm_easy;
        v.citations.push_back("matchgate-realizable inside SQ-SUM");
        return v;
    }
    if (hard) {
        v.kind = VerdictKind::open_in_do;
        v.lower_bound = "PM-hard";
        v.citations.push_back("outside d-SUM approximation is at least as hard as counting perfect matchings");
        v.citations.push_back("membership of DO \\ (d-SUM union SQ-SUM) relative to counting perfect matchings is open");
        return v;
    }
    v.kind = VerdictKind::open_in_do;
    v.citations.push_back("no approximation bound is known in this part of the order-disorder region");
    return v;
}

}  // namespace ev
