#include "ev/json_io.hpp"

namespace ev {

namespace {

json rational_json(const Rational& q) {
    if (q.get_den() == 1 && mpz_fits_slong_p(q.get_num().get_mpz_t()))
        return json(q.get_num().get_si());
    return json(to_string(q));
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) {
        const auto& g = s.exact_value();
        if (g.is_real()) return rational_json(g.re);
        return json::array({rational_json(g.re), rational_json(g.im)});
    }
    auto z = s.to_complex();
    if (z.imag() == 0.0) return json(z.real());
    return json::array({json(z.real()), json(z.imag())});
}

namespace {

Scalar scalar_part_from_json(const json& j) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_number_float()) return Scalar::flt(j.get<double>());
    throw domain_error("bad scalar literal: " + j.dump());
}

}  // namespace

Scalar scalar_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw domain_error("complex scalar needs [re, im]");
        Scalar re = scalar_part_from_json(j[0]);
        Scalar im = scalar_part_from_json(j[1]);
        if (re.is_exact() && im.is_exact())
            return Scalar::exact(re.to_rational(), im.to_rational());
        return Scalar::flt(re.to_double(), im.to_double());
    }
    return scalar_part_from_json(j);
}

json signature_to_json(const ConstraintFunction4& f) {
    if (f.is_zero_field_even()) {
        auto p = eight_vertex_params(f);
        return json{{"eight_vertex", json::array({scalar_to_json(p.a), scalar_to_json(p.b),
                                                  scalar_to_json(p.c), scalar_to_json(p.d)})}};
    }
    json entries = json::array();
    for (int i = 0; i < 16; ++i) {
        const Scalar& s = f.at(i);
        json re, im;
        if (s.is_exact()) {
            re = rational_json(s.exact_value().re);
            im = rational_json(s.exact_value().im);
        } else {
            re = s.to_complex().real();
            im = s.to_complex().imag();
        }
        entries.push_back(json::array({re, im}));
    }
    return json{{"entries", entries}};
}

ConstraintFunction4 signature_from_json(const json& j) {
    if (j.contains("eight_vertex")) {
        const auto& arr = j.at("eight_vertex");
        if (!arr.is_array() || arr.size() != 4) throw domain_error("eight_vertex needs [a,b,c,d]");
        return eight_vertex_signature(scalar_from_json(arr[0]), scalar_from_json(arr[1]),
                                      scalar_from_json(arr[2]), scalar_from_json(arr[3]));
    }
    const auto& arr = j.at("entries");
    if (!arr.is_array() || arr.size() != 16) throw domain_error("entries needs 16 [re,im] pairs");
    std::array<Scalar, 16> e;
    for (int i = 0; i < 16; ++i) e[i] = scalar_from_json(arr[i]);
    return ConstraintFunction4(e);
}

json graph_to_json(const PortedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json::array({json::array({e.a.v, e.a.p}), json::array({e.b.v, e.b.p})}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

PortedGraph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw domain_error("edge needs [[v,p],[w,q]]");
        edges.push_back({{e[0][0].get<int>(), e[0][1].get<int>()},
                         {e[1][0].get<int>(), e[1][1].get<int>()}});
    }
    return PortedGraph(n, std::move(edges));
}

json ising_to_json(const IsingGraph& h) {
    json edges = json::array();
    for (const auto& e : h.edges) edges.push_back(json::array({e.u, e.v, e.label}));
    return json{{"n", h.n}, {"edges", edges}};
}

IsingGraph ising_from_json(const json& j) {
    IsingGraph h;
    h.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        IsingGraph::Edge edge;
        edge.u = e[0].get<int>();
        edge.v = e[1].get<int>();
        edge.label = e.size() > 2 ? e[2].get<int>() : int(h.edges.size());
        if (edge.u < 0 || edge.u >= h.n || edge.v < 0 || edge.v >= h.n)
            throw domain_error("ising edge endpoint out of range");
        h.edges.push_back(edge);
    }
    return h;
}

json matchgate_to_json(const Matchgate& mg) {
    json edges = json::array();
    for (const auto& e : mg.edges()) edges.push_back(json::array({e.u, e.v, scalar_to_json(e.w)}));
    return json{{"vertices", mg.vertex_count()},
                {"edges", edges},
                {"dangling", json::array({mg.dangling()[0], mg.dangling()[1], mg.dangling()[2],
                                          mg.dangling()[3]})}};
}

Matchgate matchgate_from_json(const json& j) {
    int n = j.at("vertices").get<int>();
    std::vector<Matchgate::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e[0].get<int>(), e[1].get<int>(), scalar_from_json(e[2])});
    const auto& d = j.at("dangling");
    if (!d.is_array() || d.size() != 4) throw domain_error("dangling needs 4 vertex ids");
    Matchgate mg(n, std::move(edges), {d[0].get<int>(), d[1].get<int>(), d[2].get<int>(), d[3].get<int>()});
    mg.require_valid();
    return mg;
}

json recipe_to_json(const std::vector<RecipeStep>& recipe) {
    json arr = json::array();
    for (const auto& s : recipe) {
        switch (s.op) {
            case RecipeStep::Op::permute:
                arr.push_back({{"op", "permute"}, {"perm", abc_perm_name(s.perm)}});
                break;
            case RecipeStep::Op::g1:
                arr.push_back({{"op", "g1"}});
                break;
            case RecipeStep::Op::g2:
                arr.push_back({{"op", "g2"}});
                break;
            case RecipeStep::Op::chain:
                arr.push_back({{"op", "chain"}, {"k", s.k}});
                break;
            case RecipeStep::Op::scale:
                arr.push_back({{"op", "scale"}, {"factor", to_string(s.factor)}});
                break;
        }
    }
    return arr;
}

std::vector<RecipeStep> recipe_from_json(const json& j) {
    std::vector<RecipeStep> out;
    for (const auto& s : j) {
        std::string op = s.at("op").get<std::string>();
        if (op == "permute") out.push_back(RecipeStep::permute(parse_abc_perm(s.at("perm").get<std::string>())));
        else if (op == "g1") out.push_back(RecipeStep::g1());
        else if (op == "g2") out.push_back(RecipeStep::g2());
        else if (op == "chain") out.push_back(RecipeStep::chain(s.at("k").get<long>()));
        else if (op == "scale") out.push_back(RecipeStep::scale(parse_rational(s.at("factor").get<std::string>())));
        else throw domain_error("unknown recipe op: " + op);
    }
    return out;
}

json gadget_params_to_json(const GadgetParams& p) {
    return json{{"a", scalar_to_json(p.a)},
                {"b", scalar_to_json(p.b)},
                {"c", scalar_to_json(p.c)},
                {"d", scalar_to_json(p.d)}};
}

GadgetParams gadget_params_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4) throw domain_error("params need [a,b,c,d]");
        return {scalar_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2]),
                scalar_from_json(j[3])};
    }
    return {scalar_from_json(j.at("a")), scalar_from_json(j.at("b")), scalar_from_json(j.at("c")),
            scalar_from_json(j.at("d"))};
}

json tuple_to_json(const GeneralSignature8& s) {
    json arr = json::array();
    for (const Scalar& e : s.entries()) arr.push_back(scalar_to_json(e));
    return json{{"tuple", arr}, {"parity", parity_name(s.parity)}};
}

GeneralSignature8 tuple_from_json(const json& j, Parity parity) {
    const json& arr = j.is_array() ? j : j.at("tuple");
    if (!arr.is_array() || arr.size() != 8)
        throw domain_error("tuple needs [a1,a2,b1,b2,c1,c2,d1,d2]");
    GeneralSignature8 s;
    s.a1 = scalar_from_json(arr[0]);
    s.a2 = scalar_from_json(arr[1]);
    s.b1 = scalar_from_json(arr[2]);
    s.b2 = scalar_from_json(arr[3]);
    s.c1 = scalar_from_json(arr[4]);
    s.c2 = scalar_from_json(arr[5]);
    s.d1 = scalar_from_json(arr[6]);
    s.d2 = scalar_from_json(arr[7]);
    s.parity = parity;
    if (!j.is_array() && j.contains("parity"))
        s.parity = j.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even;
    return s;
}

namespace {

json scalar_with_decimal(const Scalar& s) {
    json out;
    out["value"] = scalar_to_json(s);
    out["decimal"] = s.is_exact() && s.exact_value().is_real() ? s.to_double()
                                                               : s.to_complex().real();
    return out;
}

}  // namespace

json trace_to_json(const RoundTrace& t) {
    json rounds = json::array();
    const char* origins = "abc";
    for (const auto& r : t.rounds) {
        json rec;
        rec["normalized"] = json::array(
            {scalar_with_decimal(r.alpha), scalar_with_decimal(r.beta), scalar_with_decimal(r.gamma)});
        rec["origin"] = std::string{origins[r.origin[0]], origins[r.origin[1]], origins[r.origin[2]]};
        rec["swapped_after_g1"] = r.swapped_after_g1;
        rec["sort_perm"] = abc_perm_name(r.sort_perm);
        rec["max_origin"] = std::string{origins[r.max_origin]};
        rec["exact"] = r.exact;
        rounds.push_back(rec);
    }
    json out;
    out["start"] = gadget_params_to_json(t.start);
    out["rounds"] = rounds;
    out["final"] = gadget_params_to_json(t.final_params);
    out["gap"] = scalar_with_decimal(t.gap);
    if (t.bound_applicable) {
        out["bound"] = to_string(t.bound);
        out["bound_decimal"] = to_double(t.bound);
        out["pigeonhole_k"] = t.pigeonhole_k;
    }
    return out;
}

json region_flags_to_json(const RegionFlags& f) {
    return json{{"in_DO", f.in_do},
                {"in_dSUM", f.in_dsum},
                {"in_SQSUM", f.in_sqsum},
                {"boundary", f.boundary}};
}

json verdict_to_json(const Verdict& v) {
    json out;
    out["flags"] = region_flags_to_json(v.flags);
    out["verdict"] = verdict_name(v.kind);
    out["citations"] = v.citations;
    out["planar_note"] = v.planar_note;
    if (!v.lower_bound.empty()) out["lower_bound"] = v.lower_bound;
    return out;
}

}  // namespace ev
