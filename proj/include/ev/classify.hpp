#pragma once

#include <string>
#include <vector>

#include "ev/scalar.hpp"

namespace ev {

// Region membership with boundary annotations. Inclusive inequalities, so
// boundary points inherit the inside classification.
struct RegionFlags {
    bool in_do = false;
    bool in_dsum = false;
    bool in_sqsum = false;
    std::vector<std::string> boundary;  // names of tight defining inequalities
};

enum class VerdictKind {
    exactly_tractable,
    fpras,
    pm_easy,
    pm_hard,
    pm_equivalent,
    np_hard,
    open_in_do,
};
const char* verdict_name(VerdictKind k);

struct Verdict {
    VerdictKind kind;
    RegionFlags flags;
    std::vector<std::string> citations;  // descriptive result labels
    std::string planar_note;             // planar-FPRAS region metadata
    std::string lower_bound;             // e.g. "PM-hard" inside the open region
};

RegionFlags region_flags(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
Verdict verdict(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

}  // namespace ev
