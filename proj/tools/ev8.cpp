// ev8: eight-vertex / Holant toolbox command line
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ev/json_io.hpp"
#include "ev/verify.hpp"

namespace {

using ev::Scalar;

struct GlobalOpts {
    bool json = false;
    bool use_float = false;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::uint64_t max_bruteforce = ev::kDefaultBruteforceCap;
};

Scalar parse_scalar_arg(const std::string& text, bool use_float) {
    if (use_float) return Scalar::flt(std::stod(text));
    return Scalar(ev::parse_rational(text));
}

ev::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ev::domain_error("cannot read file: " + path);
    ev::json j;
    in >> j;
    return j;
}

// inline JSON, or @file
ev::json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return load_json_file(arg.substr(1));
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return ev::json::parse(arg);
    return load_json_file(arg);
}

void emit(const GlobalOpts& g, const ev::json& out, const std::string& text) {
    if (g.json) std::cout << out.dump(2) << "\n";
    else std::cout << text;
}

int cmd_classify(const GlobalOpts& g, const std::vector<std::string>& params) {
    std::vector<Scalar> v;
    for (const auto& s : params) v.push_back(parse_scalar_arg(s, g.use_float));
    ev::Verdict verdict = ev::verdict(v[0], v[1], v[2], v[3]);
    std::ostringstream os;
    os << "verdict: " << ev::verdict_name(verdict.kind) << "\n";
    os << "flags: DO=" << verdict.flags.in_do << " d-SUM=" << verdict.flags.in_dsum
       << " SQ-SUM=" << verdict.flags.in_sqsum << "\n";
    if (!verdict.lower_bound.empty()) os << "lower bound: " << verdict.lower_bound << "\n";
    for (const auto& c : verdict.citations) os << "note: " << c << "\n";
    if (!verdict.planar_note.empty()) os << "planar: " << verdict.planar_note << "\n";
    emit(g, ev::verdict_to_json(verdict), os.str());
    return 0;
}

int cmd_eval(const GlobalOpts& g, const std::string& graph_path,
             const std::vector<std::string>& params) {
    ev::PortedGraph graph = ev::graph_from_json(load_json_file(graph_path));
    std::vector<Scalar> v;
    for (const auto& s : params) v.push_back(parse_scalar_arg(s, g.use_float));
    Scalar z = ev::z_eight_vertex(graph, v[0], v[1], v[2], v[3], g.max_bruteforce);
    ev::json out{{"z", ev::scalar_to_json(z)}, {"decimal", z.to_complex().real()}};
    emit(g, out, "Z = " + z.str() + "\n");
    return 0;
}

int cmd_holant(const GlobalOpts& g, const std::string& graph_path, const std::string& sig_arg,
               const std::string& connector, const std::string& method) {
    ev::PortedGraph graph = ev::graph_from_json(load_json_file(graph_path));
    ev::ConstraintFunction4 f = ev::signature_from_json(load_json_arg(sig_arg));
    ev::HolantInstance inst = ev::HolantInstance::uniform(graph, f);
    if (connector == "neq2") inst.set_connectors({ev::BinaryConnector::NEQ2});
    else if (connector == "eq2") inst.set_connectors({ev::BinaryConnector::EQ2});
    else if (!connector.empty()) throw ev::domain_error("unknown connector: " + connector);
    Scalar value;
    if (method == "brute") value = ev::holant_bruteforce(inst, g.max_bruteforce);
    else if (method == "contract") value = ev::holant_contract(inst);
    else {
        size_t bits = (connector.empty() ? 1 : 2) * graph.edges().size();
        value = bits <= 22 ? ev::holant_bruteforce(inst, g.max_bruteforce)
                           : ev::holant_contract(inst);
    }
    ev::json out{{"holant", ev::scalar_to_json(value)}};
    emit(g, out, "Holant = " + value.str() + "\n");
    return 0;
}

int cmd_synthesize(const GlobalOpts& g, const std::string& tuple_arg, bool odd) {
    ev::GeneralSignature8 s =
        ev::tuple_from_json(load_json_arg(tuple_arg), odd ? ev::Parity::odd : ev::Parity::even);
    ev::SynthesisResult res = odd ? ev::synthesize_odd(s) : ev::synthesize_even(s);
    ev::json out;
    out["gate"] = ev::matchgate_to_json(res.gate);
    out["route"] = res.route;
    out["scale"] = ev::scalar_to_json(res.scale);
    out["residual"] = res.residual;
    out["signature"] = ev::signature_to_json(res.realized);
    std::ostringstream os;
    os << "route: " << res.route << "\n"
       << "vertices: " << res.gate.vertex_count() << ", edges: " << res.gate.edges().size() << "\n"
       << "scale: " << res.scale.str() << ", round-trip residual: " << res.residual << "\n"
       << ev::matchgate_to_json(res.gate).dump(2) << "\n";
    emit(g, out, os.str());
    return 0;
}

int cmd_reduce_ising(const GlobalOpts& g, const std::string& graph_path, const std::string& w_arg,
                     const std::string& z_arg, const std::string& lift_path) {
    if (!lift_path.empty()) {
        ev::IsingGraph h = ev::ising_from_json(load_json_file(lift_path));
        ev::PortedGraph lifted = ev::lift_to_four_regular(h);
        bool ok = ev::crossing_circuit_roundtrip_ok(h);
        ev::json out{{"four_regular", ev::graph_to_json(lifted)}, {"roundtrip_ok", ok}};
        emit(g, out, ev::graph_to_json(lifted).dump(2) + "\n");
        return ok ? 0 : 1;
    }
    ev::PortedGraph graph = ev::graph_from_json(load_json_file(graph_path));
    Scalar w = parse_scalar_arg(w_arg, g.use_float);
    Scalar z = parse_scalar_arg(z_arg, g.use_float);
    auto rep = ev::verify_ising_identity(graph, w, z);
    ev::IsingGraph ccg = ev::crossing_circuit_graph(graph);
    ev::json out{{"holant_side", ev::scalar_to_json(rep.holant_side)},
                 {"ising_side", ev::scalar_to_json(rep.ising_side)},
                 {"equal", rep.equal},
                 {"circuits", rep.circuit_count},
                 {"crossing_circuit_graph", ev::ising_to_json(ccg)}};
    std::ostringstream os;
    os << "Holant side = " << rep.holant_side.str() << "\n"
       << "Ising side  = " << rep.ising_side.str() << "\n"
       << "equal: " << (rep.equal ? "yes" : "no") << ", circuits: " << rep.circuit_count << "\n";
    emit(g, out, os.str());
    return rep.equal ? 0 : 1;
}

int cmd_gadget_iterate(const GlobalOpts& g, const std::vector<std::string>& params, long rounds) {
    std::vector<Scalar> v;
    for (const auto& s : params) v.push_back(parse_scalar_arg(s, g.use_float));
    ev::RoundTrace t = ev::iterate_rounds({v[0], v[1], v[2], v[3]}, rounds);
    std::ostringstream os;
    os << "rounds: " << t.rounds.size() << "\n";
    for (size_t i = 0; i < t.rounds.size(); ++i) {
        const auto& r = t.rounds[i];
        os << "  round " << (i + 1) << ": (" << r.alpha.to_double() << ", " << r.beta.to_double()
           << ", " << r.gamma.to_double() << ")\n";
    }
    os << "gap: " << t.gap.to_double() << "\n";
    if (t.bound_applicable)
        os << "bound 2^-2^" << t.pigeonhole_k << " = " << ev::to_double(t.bound) << "\n";
    emit(g, ev::trace_to_json(t), os.str());
    return 0;
}

int cmd_normalize(const GlobalOpts& g, const std::vector<std::string>& params) {
    std::vector<Scalar> v;
    for (const auto& s : params) v.push_back(parse_scalar_arg(s, g.use_float));
    ev::NormalizeResult nr = ev::normalize_to_star({v[0], v[1], v[2], v[3]});
    ev::json out{{"params", ev::gadget_params_to_json(nr.params)},
                 {"recipe", ev::recipe_to_json(nr.recipe)}};
    if (!nr.notice.empty()) out["notice"] = nr.notice;
    std::ostringstream os;
    os << "star parameters: (" << nr.params.a.str() << ", " << nr.params.b.str() << ", "
       << nr.params.c.str() << ", " << nr.params.d.str() << ")\n"
       << "recipe: " << ev::recipe_to_json(nr.recipe).dump() << "\n";
    if (!nr.notice.empty()) os << "notice: " << nr.notice << "\n";
    emit(g, out, os.str());
    return 0;
}

int cmd_verify(const GlobalOpts& g, bool quick, bool acceptance_only) {
    auto results =
        acceptance_only ? ev::run_acceptance(g.seed) : ev::run_verification(g.seed, quick);
    bool all = true;
    ev::json arr = ev::json::array();
    for (const auto& r : results) {
        all &= r.pass;
        if (g.json) {
            arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                           {"seconds", r.seconds}});
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ", "
                      << r.seconds << " s)\n";
        }
    }
    if (g.json) std::cout << arr.dump(2) << "\n";
    else std::cout << (all ? "all checks passed\n" : "FAILURES present\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eight-vertex model toolbox: exact partition functions, Holant evaluation,\n"
                 "Ising reduction, gadget iteration, matchgate synthesis, complexity classifier"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--float", g.use_float, "floating-point mode (default is exact rationals)");
    app.add_option("--tol", g.tol, "relative tolerance for float-mode comparisons");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--max-bruteforce", g.max_bruteforce, "assignment-space cap for brute force");

    std::vector<std::string> params;
    std::string graph_path, sig_arg, connector, method = "auto", tuple_arg, w_arg, z_arg, lift_path;
    long rounds = 12;
    bool odd = false, quick = false, acceptance_only = false;

    auto* classify = app.add_subcommand("classify", "complexity verdict for parameters a b c d");
    classify->add_option("params", params, "a b c d")->expected(4)->required();

    auto* eval = app.add_subcommand("eval", "eight-vertex partition function of a graph file");
    eval->add_option("graph", graph_path, "graph JSON file")->required();
    eval->add_option("params", params, "a b c d")->expected(4)->required();

    auto* holant = app.add_subcommand("holant", "Holant value of a graph under one signature");
    holant->add_option("graph", graph_path, "graph JSON file")->required();
    holant->add_option("--sig", sig_arg, "signature JSON (inline or @file)")->required();
    holant->add_option("--connector", connector, "eq2|neq2 on every edge (incidence view)");
    holant->add_option("--method", method, "auto|brute|contract");

    auto* synth = app.add_subcommand("synthesize", "matchgate realizing a signature tuple");
    synth->add_option("tuple", tuple_arg, "tuple JSON (inline or @file)")->required();
    synth->add_flag("--odd", odd, "odd-parity tuple (default even)");
    synth->add_flag("--even", [](std::int64_t) {}, "even-parity tuple (default)");

    auto* reduce = app.add_subcommand("reduce-ising", "crossing-circuit Ising reduction");
    reduce->add_option("graph", graph_path, "4-regular graph JSON file");
    reduce->add_option("w", w_arg, "diagonal weight w");
    reduce->add_option("z", z_arg, "crossing weight z");
    reduce->add_option("--lift", lift_path, "lift an Ising multigraph JSON to a 4-regular graph");

    auto* iterate = app.add_subcommand("gadget-iterate", "G1/G2 round schedule trace");
    iterate->add_option("params", params, "a b c d")->expected(4)->required();
    iterate->add_option("--rounds", rounds, "number of rounds");

    auto* normalize = app.add_subcommand("normalize", "normalize parameters to the star condition");
    normalize->add_option("params", params, "a b c d")->expected(4)->required();

    auto* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
    verify->add_flag("--quick", quick, "smaller sample counts");
    verify->add_flag("--acceptance", acceptance_only, "run exactly the acceptance criteria");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        ev::set_float_tolerance(g.tol);
        if (g.use_float && !g.json)
            std::cerr << "float mode: relative tolerance " << g.tol << "\n";
        if (classify->parsed()) return cmd_classify(g, params);
        if (eval->parsed()) return cmd_eval(g, graph_path, params);
        if (holant->parsed()) return cmd_holant(g, graph_path, sig_arg, connector, method);
        if (synth->parsed()) return cmd_synthesize(g, tuple_arg, odd);
        if (reduce->parsed()) {
            if (lift_path.empty() && (graph_path.empty() || w_arg.empty() || z_arg.empty())) {
                std::cerr << "reduce-ising needs GRAPH W Z or --lift FILE\n";
                return 2;
            }
            return cmd_reduce_ising(g, graph_path, w_arg, z_arg, lift_path);
        }
        if (iterate->parsed()) return cmd_gadget_iterate(g, params, rounds);
        if (normalize->parsed()) return cmd_normalize(g, params);
        if (verify->parsed()) return cmd_verify(g, quick, acceptance_only);
    } catch (const ev::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
