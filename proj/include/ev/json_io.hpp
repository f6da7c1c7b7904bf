#pragma once

#include <json.hpp>

#include "ev/classify.hpp"
#include "ev/gadgets.hpp"
#include "ev/ising.hpp"
#include "ev/synthesize.hpp"

// JSON conventions: exact rationals serialize as "p/q" strings (integers as
// numbers). On input, integer numbers parse exact, non-integer numbers parse
// as float-mode scalars; strings ("3/2", "1.5") always parse exact.

namespace ev {

using json = nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// {"entries": [[re,im] x16]} or {"eight_vertex": [a,b,c,d]}
json signature_to_json(const ConstraintFunction4& f);
ConstraintFunction4 signature_from_json(const json& j);

// {"n": int, "edges": [[[v,p],[w,q]], ...]}
json graph_to_json(const PortedGraph& g);
PortedGraph graph_from_json(const json& j);

// {"n": int, "edges": [[u,v,label], ...]}
json ising_to_json(const IsingGraph& h);
IsingGraph ising_from_json(const json& j);

// {"vertices": n, "edges": [[u,v,"w"], ...], "dangling": [v1,v2,v3,v4]}
json matchgate_to_json(const Matchgate& mg);
Matchgate matchgate_from_json(const json& j);

// [{"op":"g1"}, {"op":"chain","k":4}, {"op":"permute","perm":"swap_ab"},
//  {"op":"scale","factor":"p/q"}, ...]
json recipe_to_json(const std::vector<RecipeStep>& recipe);
std::vector<RecipeStep> recipe_from_json(const json& j);

json gadget_params_to_json(const GadgetParams& p);
GadgetParams gadget_params_from_json(const json& j);

// tuple [a1,a2,b1,b2,c1,c2,d1,d2] (+ "parity")
json tuple_to_json(const GeneralSignature8& s);
GeneralSignature8 tuple_from_json(const json& j, Parity parity);

json trace_to_json(const RoundTrace& t);
json verdict_to_json(const Verdict& v);
json region_flags_to_json(const RegionFlags& f);

}  // namespace ev
