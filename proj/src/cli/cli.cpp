#include "crnv/cli.hpp"

#include "crnv/errors.hpp"
#include "crnv/explorer.hpp"
#include "crnv/invariants.hpp"
#include "crnv/network_json.hpp"
#include "crnv/ode.hpp"
#include "crnv/oracle.hpp"
#include "crnv/predicate.hpp"
#include "crnv/report.hpp"
#include "crnv/sim.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace crnv::cli {

namespace {

using report::Json;

// Terminal states and histogram bins listed in reports beyond this are
// summarized by a count only.
constexpr std::size_t kListLimit = 64;

struct NetworkArgs {
    std::string path;
    std::string variant;
    unsigned m = 0;
    unsigned n = 0;
    std::string p;
};

struct Outcome {
    std::string digest;
    Json parameters = Json::object();
    Json result = Json::object();
    int code = kOk;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw std::runtime_error("cannot write " + path);
    }
}

template <typename Writer>
void write_csv(const std::string& path, Writer&& writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    writer(out);
}

Network build_variant(const std::string& variant, unsigned m, unsigned n)
{
    if (variant == "n1") {
        return build_n1(m, n);
    }
    if (variant == "n2") {
        return build_n2(m, n);
    }
    throw ParameterError("--variant must be n1 or n2");
}

void add_network_options(CLI::App* cmd, NetworkArgs& args)
{
    cmd->add_option("--network", args.path, "Network JSON file");
    cmd->add_option("--variant", args.variant, "Build N1/N2 instead of reading a file")
        ->check(CLI::IsMember({"n1", "n2"}));
    cmd->add_option("--m", args.m, "Blue/red switch index");
    cmd->add_option("--n", args.n, "Top counter index");
    cmd->add_option("--p", args.p, "Initial population in Z0 (decimal)");
}

NetworkDocument load_network(const NetworkArgs& args)
{
    if (!args.path.empty() && !args.variant.empty()) {
        throw ParameterError("give either --network or --variant/--m/--n, not both");
    }
    NetworkDocument doc = [&] {
        if (!args.path.empty()) {
            return parse_network_json(read_file(args.path));
        }
        if (args.variant.empty()) {
            throw ParameterError("a network is required: --network <path> or --variant with --m and --n");
        }
        Network net = build_variant(args.variant, args.m, args.n);
        State zero(net.species_count());
        return NetworkDocument{std::move(net), std::move(zero)};
    }();
    if (!args.p.empty()) {
        doc.init = initial_state(doc.network, parse_count(args.p));
    }
    return doc;
}

Json network_parameters(const NetworkArgs& args, const NetworkDocument& doc)
{
    Json j = Json::object();
    if (!args.path.empty()) {
        j["network"] = args.path;
    } else {
        j["variant"] = args.variant;
        j["m"] = args.m;
        j["n"] = args.n;
    }
    j["init"] = report::state_json(doc.network, doc.init);
    if (auto fam = match_family(doc.network)) {
        j["family"] = {{"variant", fam->omega ? "n2" : "n1"}, {"m", fam->m}, {"n", fam->n}};
    }
    return j;
}

std::optional<TerminalPrediction> family_prediction(const Network& network, const State& init)
{
    auto fam = match_family(network);
    if (!fam) {
        return std::nullopt;
    }
    const auto layout = require_family_layout(network);
    const Count p = init.total();
    if (p < 1 || init[layout.z[0]] != p) {
        return std::nullopt;
    }
    return fam->omega ? predict_n2(fam->m, fam->n, p) : predict_n1(fam->m, fam->n, p);
}

// ---- build ----------------------------------------------------------------

struct BuildArgs {
    std::string variant;
    unsigned m = 0;
    unsigned n = 0;
    std::string p;
    std::string out;
};

Outcome cmd_build(const BuildArgs& a)
{
    Network net = build_variant(a.variant, a.m, a.n);
    State init = a.p.empty() ? State(net.species_count()) : initial_state(net, parse_count(a.p));
    write_file(a.out, serialize_network_json(net, init));
    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = {{"variant", a.variant}, {"m", a.m}, {"n", a.n}, {"out", a.out}};
    if (!a.p.empty()) {
        o.parameters["p"] = a.p;
    }
    o.result["species"] = net.species_count();
    o.result["reactions"] = net.reaction_count();
    o.result["path"] = a.out;
    return o;
}

// ---- predict --------------------------------------------------------------

struct PredictArgs {
    std::string variant = "n2";
    unsigned m = 0;
    unsigned n = 0;
    std::string p;
};

Outcome cmd_predict(const PredictArgs& a)
{
    const Count p = parse_count(a.p);
    Network net = build_variant(a.variant, a.m, a.n);
    const TerminalPrediction pred = a.variant == "n1" ? predict_n1(a.m, a.n, p) : predict_n2(a.m, a.n, p);
    const PhaseRegion region = classify_phase(a.m, a.n, p);

    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = {{"variant", a.variant}, {"m", a.m}, {"n", a.n}, {"p", a.p}};
    Json z = Json::array();
    for (const auto& bit : pred.z) {
        z.push_back(to_decimal(bit));
    }
    o.result["terminal"] = report::state_json(net, pred.to_state());
    o.result["z"] = std::move(z);
    o.result["b"] = to_decimal(pred.b);
    o.result["r"] = to_decimal(pred.r);
    o.result["epsilon"] = to_decimal(epsilon(p, a.n));
    o.result["color"] = pred.r > pred.b ? "red" : (pred.b > pred.r ? "blue" : "none");
    o.result["phase"] = {{"region", std::string(to_string(region.tag))},
                         {"lower_threshold", to_decimal(region.lower_threshold)},
                         {"upper_threshold", to_decimal(region.upper_threshold)}};
    o.result["discrepancy_note"] = {
        {"stated_lower_threshold", to_decimal(pow2(a.m))},
        {"implemented_lower_threshold", to_decimal(region.lower_threshold)},
        {"note", "The published statement of this construction puts the blue-to-red threshold at 2^m. "
                 "Under the reaction table as built here zeta_0..zeta_(m-1) produce B, so the first R "
                 "appears when zeta_m fires, which needs z_m >= 2 and hence p >= 2^(m+1)."}};
    return o;
}

// ---- explore --------------------------------------------------------------

struct ExploreArgs {
    NetworkArgs net;
    std::size_t max_states = ExploreLimits{}.max_states;
    std::size_t max_edges = ExploreLimits{}.max_edges;
    std::vector<std::string> properties;
    std::vector<unsigned> theta;
    unsigned workers = 1;
    std::string states_csv;
    std::string edges_csv;
};

Outcome cmd_explore(const ExploreArgs& a)
{
    NetworkDocument doc = load_network(a.net);
    const Network& net = doc.network;
    std::vector<Predicate> predicates;
    for (const auto& text : a.properties) {
        predicates.push_back(Predicate::parse(net, text));
    }

    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = network_parameters(a.net, doc);
    o.parameters["max_states"] = a.max_states;
    o.parameters["max_edges"] = a.max_edges;
    o.parameters["workers"] = a.workers;

    ReachGraph graph;
    try {
        graph = explore(net, doc.init, ExploreLimits{a.max_states, a.max_edges}, a.workers);
    } catch (const LimitExceededError& e) {
        o.result["complete"] = false;
        o.result["states"] = e.partial().state_count();
        o.result["edges"] = e.partial().edges().size();
        o.result["message"] = e.what();
        o.code = kResourceLimit;
        return o;
    }

    o.result["complete"] = true;
    o.result["states"] = graph.state_count();
    o.result["edges"] = graph.edges().size();
    o.result["state_space_bound"] = to_decimal(state_space_size(net.species_count(), doc.init.total()));
    o.result["terminal_count"] = graph.terminals().size();
    Json terminals = Json::array();
    for (std::size_t i = 0; i < graph.terminals().size() && i < kListLimit; ++i) {
        terminals.push_back(report::state_json(net, graph.state(graph.terminals()[i])));
    }
    o.result["terminal_states"] = std::move(terminals);
    o.result["has_cycle"] = has_cycle(graph);
    const auto fair = fair_termination_precondition(graph);
    o.result["fair_termination_precondition"] = {{"holds", fair.holds},
                                                 {"stuck_states", fair.stuck_states.size()}};

    bool failed = false;
    if (auto layout = family_layout(net)) {
        const Count p = doc.init.total();
        Json inv = Json::object();
        bool sk_ok = true;
        for (unsigned k = 1; k <= layout->n + 1 && sk_ok; ++k) {
            const auto f = s_k(net, k);
            sk_ok = check_state_invariant(graph, [&](const State& q) { return f.evaluate(q) <= p; }).holds;
        }
        inv["s_k_at_most_p"] = sk_ok;
        const auto sn = s_n_mod(net);
        const Integer target = p % *sn.modulus;
        const bool sn_ok =
            check_state_invariant(graph, [&](const State& q) { return sn.evaluate(q) == target; }).holds;
        inv["s_n_congruent_p"] = sn_ok;
        Json thetas = Json::array();
        std::vector<unsigned> ks = a.theta;
        if (ks.empty()) {
            for (unsigned k = 1; k <= layout->n; ++k) {
                ks.push_back(k);
            }
        }
        bool theta_ok = true;
        for (unsigned k : ks) {
            const auto check = check_conditional_invariant_theta(graph, net, k);
            Json t = {{"k", k}, {"holds", check.holds}};
            if (check.counterexample) {
                t["counterexample"] = report::state_json(net, *check.counterexample);
            }
            theta_ok = theta_ok && check.holds;
            thetas.push_back(std::move(t));
        }
        inv["theta"] = std::move(thetas);
        o.result["invariants"] = std::move(inv);
        failed = failed || !sk_ok || !sn_ok || !theta_ok;
    }

    if (auto pred = family_prediction(net, doc.init)) {
        const State expected = pred->to_state();
        const auto terms = terminal_states(graph);
        const bool matches = terms.size() == 1 && terms.front() == expected;
        o.result["oracle"] = {{"predicted", report::state_json(net, expected)}, {"terminal_matches", matches}};
        failed = failed || !matches;
    }

    Json props = Json::array();
    for (const auto& pr : predicates) {
        const Verdict v = check_eventually_always(graph, pr);
        props.push_back({{"property", "F G " + pr.text()}, {"verdict", std::string(to_string(v))}});
        failed = failed || v == Verdict::Fails;
    }
    o.result["properties"] = std::move(props);

    if (!a.states_csv.empty()) {
        write_csv(a.states_csv, [&](std::ostream& s) { write_states_csv(s, net, graph); });
    }
    if (!a.edges_csv.empty()) {
        write_csv(a.edges_csv, [&](std::ostream& s) { write_edges_csv(s, net, graph); });
    }
    o.code = failed ? kPropertyFailure : kOk;
    return o;
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
    NetworkArgs net;
    std::string scheduler = "uniform";
    std::size_t runs = 100;
    std::string cap; // empty: 10^6 for stochastic runs, script length for scripted ones
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string histogram_csv;
};

Outcome cmd_simulate(const SimulateArgs& a)
{
    NetworkDocument doc = load_network(a.net);
    const Network& net = doc.network;
    Count cap = a.cap.empty() ? Count(1000000) : parse_count(a.cap);

    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = network_parameters(a.net, doc);
    o.parameters["scheduler"] = a.scheduler;

    TerminalHistogram hist;
    if (a.scheduler == "uniform" || a.scheduler == "propensity") {
        const auto kind = a.scheduler == "uniform" ? Scheduler::Kind::UniformEnabled : Scheduler::Kind::Propensity;
        o.parameters["cap"] = to_decimal(cap);
        o.parameters["runs"] = a.runs;
        o.parameters["seed"] = std::to_string(a.seed);
        o.parameters["rng"] = std::string(kRngAlgorithm);
        hist = empirical_terminal_distribution(net, doc.init, kind, a.seed, a.runs, cap, a.workers);
    } else {
        Script script;
        if (a.scheduler == "greedy") {
            script = greedy_batch_script(net, doc.init);
        } else if (a.scheduler.rfind("script:", 0) == 0) {
            script = parse_script_json(net, read_file(a.scheduler.substr(7)));
        } else {
            throw ParameterError("--scheduler must be uniform, propensity, greedy or script:<path>");
        }
        if (a.cap.empty()) {
            cap = 0;
            for (const auto& e : script) {
                cap += e.repetitions;
            }
            cap = cap == 0 ? Count(1) : cap;
        }
        o.parameters["cap"] = to_decimal(cap);
        o.parameters["script_entries"] = script.size();
        const RunResult res = run(net, doc.init, Scheduler::scripted(std::move(script)), cap);
        o.result["run"] = {{"steps", to_decimal(res.steps)},
                           {"terminated", res.terminated},
                           {"cap_hit", res.cap_hit}};
        hist.runs = 1;
        hist.terminated = res.terminated ? 1 : 0;
        hist.bins.push_back(HistogramBin{res.final, 1, res.terminated});
    }

    o.result["runs"] = hist.runs;
    o.result["terminated"] = hist.terminated;
    o.result["termination_rate"] = hist.termination_rate();
    o.result["distinct_final_states"] = hist.bins.size();
    if (const auto* modal = hist.modal()) {
        o.result["modal"] = {{"state", report::state_json(net, modal->state)},
                             {"runs", modal->runs},
                             {"terminal", modal->terminal}};
        if (auto pred = family_prediction(net, doc.init)) {
            o.result["modal_matches_prediction"] = modal->state == pred->to_state();
        }
    }
    Json bins = Json::array();
    for (std::size_t i = 0; i < hist.bins.size() && i < kListLimit; ++i) {
        const auto& b = hist.bins[i];
        bins.push_back({{"state", report::state_json(net, b.state)}, {"runs", b.runs}, {"terminal", b.terminal}});
    }
    o.result["histogram"] = std::move(bins);

    if (!a.histogram_csv.empty()) {
        write_csv(a.histogram_csv, [&](std::ostream& s) {
            s << "runs,terminal";
            for (const auto& sp : net.species()) {
                s << ',' << sp.name;
            }
            s << '\n';
            for (const auto& b : hist.bins) {
                s << b.runs << ',' << (b.terminal ? 1 : 0);
                for (const auto& c : b.state.counts()) {
                    s << ',' << c;
                }
                s << '\n';
            }
        });
    }
    return o;
}

// ---- lasso ----------------------------------------------------------------

struct LassoArgs {
    unsigned m = 0;
    unsigned n = 0;
    std::string p;
};

Outcome cmd_lasso(const LassoArgs& a)
{
    const Count p = parse_count(a.p);
    Network net = build_n2(a.m, a.n);
    const State init = initial_state(net, p);
    const Lasso lasso = build_unfair_lasso(a.m, a.n, p);
    const LassoCheck check = verify_lasso(net, init, lasso);

    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = {{"variant", "n2"}, {"m", a.m}, {"n", a.n}, {"p", a.p}};
    o.result["stem"] = report::script_json(net, lasso.stem);
    o.result["loop"] = report::script_json(net, lasso.loop);
    o.result["loop_start"] = report::state_json(net, check.loop_start);
    o.result["valid"] = check.valid;
    if (check.valid) {
        const FairnessCheck fair = lasso_is_fair(net, init, lasso);
        o.result["fair"] = fair.fair;
        if (fair.violation) {
            o.result["violation"] = {{"state", report::state_json(net, fair.violation->state)},
                                     {"reaction", net.reaction(fair.violation->reaction).label},
                                     {"loop_position", fair.violation->loop_position}};
        }
    }
    return o;
}

// ---- ode ------------------------------------------------------------------

struct OdeArgs {
    NetworkArgs net;
    std::string x0 = "Z0=1";
    OdeSettings settings;
    std::string csv;
};

std::vector<double> parse_concentrations(const Network& net, const std::string& text)
{
    std::vector<double> x(net.species_count(), 0.0);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("--x0 entries must look like NAME=VALUE, got \"" + item + "\"");
        }
        const SpeciesId id = net.species_id(item.substr(0, eq));
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw ParameterError("cannot parse concentration \"" + item + "\"");
        }
        if (!std::isfinite(v) || v < 0.0) {
            throw ParameterError("concentration of " + item.substr(0, eq) + " must be finite and nonnegative");
        }
        x[id] = v;
    }
    return x;
}

Outcome cmd_ode(const OdeArgs& a)
{
    NetworkDocument doc = load_network(a.net);
    const Network& net = doc.network;
    const ConcentrationState x0{parse_concentrations(net, a.x0), 0.0};
    const auto samples = integrate(net, x0, a.settings);
    const ConcentrationState& last = samples.back();
    const auto field = vector_field(net, last.x);

    double residual = 0.0;
    for (double v : field) {
        residual = std::max(residual, std::abs(v));
    }
    double mass0 = 0.0;
    for (double v : x0.x) {
        mass0 += v;
    }
    double drift = 0.0;
    for (const auto& s : samples) {
        double mass = 0.0;
        for (double v : s.x) {
            mass += v;
        }
        drift = std::max(drift, std::abs(mass - mass0));
    }

    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = network_parameters(a.net, doc);
    o.parameters.erase("init");
    o.parameters["x0"] = a.x0;
    o.parameters["settings"] = {{"t_max", a.settings.t_max},
                                {"initial_step", a.settings.initial_step},
                                {"rel_tol", a.settings.rel_tol},
                                {"abs_tol", a.settings.abs_tol},
                                {"stall_threshold", a.settings.stall_threshold}};
    Json xf = Json::object();
    std::size_t dominant = 0;
    for (const auto& s : net.species()) {
        xf[s.name] = last.x[s.id];
        if (last.x[s.id] > last.x[dominant]) {
            dominant = s.id;
        }
    }
    o.result["samples"] = samples.size();
    o.result["t_final"] = last.t;
    o.result["x_final"] = std::move(xf);
    o.result["dominant_species"] = net.species()[dominant].name;
    o.result["stalled"] = residual < a.settings.stall_threshold && a.settings.t_max > 0.0;
    o.result["residual"] = residual;
    o.result["conservation_error"] = drift;

    if (!a.csv.empty()) {
        write_csv(a.csv, [&](std::ostream& s) { write_trajectory_csv(s, net, samples); });
    }
    return o;
}

// ---- describe -------------------------------------------------------------

Outcome cmd_describe(const NetworkArgs& a)
{
    NetworkDocument doc = load_network(a);
    const Network& net = doc.network;
    Outcome o;
    o.digest = report::network_digest(net);
    o.parameters = network_parameters(a, doc);

    Json species = Json::array();
    for (const auto& s : net.species()) {
        species.push_back(s.name);
    }
    Json reactions = Json::array();
    for (const auto& rx : net.reactions()) {
        auto name = [&](SpeciesId id) { return net.species()[id].name; };
        reactions.push_back({{"label", rx.label},
                             {"reactants", {name(rx.reactants[0]), name(rx.reactants[1])}},
                             {"products", {name(rx.products[0]), name(rx.products[1])}},
                             {"rate", format_rate(rx.rate)}});
    }
    o.result["species"] = std::move(species);
    o.result["reactions"] = std::move(reactions);
    o.result["total_population"] = report::effect_report_json(classify_functional(net, total_population(net)));

    if (auto layout = family_layout(net)) {
        const auto rank = family_rank(net);
        const auto verdict = verify_ranking(net, rank);
        Json r = {{"functional", "3*sum(z)+2b+r"},
                  {"valid", verdict.valid},
                  {"effects", report::effect_report_json(classify_functional(net, rank))}};
        if (verdict.valid) {
            r["step_bound_from_init"] = to_decimal(verdict.step_bound_at(doc.init));
        } else {
            r["violating_reaction"] = net.reaction(*verdict.first_violation).label;
        }
        o.result["ranking"] = std::move(r);
        Json sk = Json::array();
        for (unsigned k = 1; k <= layout->n + 1; ++k) {
            sk.push_back({{"k", k}, {"effects", report::effect_report_json(classify_functional(net, s_k(net, k)))}});
        }
        o.result["s_k"] = std::move(sk);
        o.result["s_n_mod_2n"] = report::effect_report_json(classify_functional(net, s_n_mod(net)));
    }
    return o;
}

// ---- driver ---------------------------------------------------------------

Json make_report(const std::string& command, const std::vector<std::string>& args, const Outcome& o,
                 double wall_ms)
{
    Json r = Json::object();
    r["command"] = command;
    r["argv"] = args;
    r["network_digest"] = o.digest;
    r["parameters"] = o.parameters;
    r["result"] = o.result;
    r["exit_code"] = o.code;
    r["timing"] = {{"wall_ms", wall_ms}};
    return r;
}

void emit(const Json& report, const std::string& out_path, std::ostream& out)
{
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verification workbench for population-protocol chemical reaction networks", "crnv"};
    app.require_subcommand(1);
    std::string report_out;

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Write the N1 or N2 network as canonical JSON");
    build->add_option("--variant", build_args.variant)->required()->check(CLI::IsMember({"n1", "n2"}));
    build->add_option("--m", build_args.m)->required();
    build->add_option("--n", build_args.n)->required();
    build->add_option("--p", build_args.p, "Embed Z0 = p as the initial state");
    build->add_option("--out", build_args.out, "Network file to write")->required();

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Closed-form terminal state and phase region");
    predict->add_option("--variant", predict_args.variant)->check(CLI::IsMember({"n1", "n2"}));
    predict->add_option("--m", predict_args.m)->required();
    predict->add_option("--n", predict_args.n)->required();
    predict->add_option("--p", predict_args.p)->required();
    predict->add_option("--out", report_out);

    ExploreArgs explore_args;
    auto* explore_cmd = app.add_subcommand("explore", "Exhaustive reachability with invariant and property checks");
    add_network_options(explore_cmd, explore_args.net);
    explore_cmd->add_option("--max-states", explore_args.max_states);
    explore_cmd->add_option("--max-edges", explore_args.max_edges);
    explore_cmd->add_option("--property", explore_args.properties, "Eventually-always predicate, e.g. r=0");
    explore_cmd->add_option("--theta", explore_args.theta, "k for the Theta_k sweep (default: all)");
    explore_cmd->add_option("--workers", explore_args.workers);
    explore_cmd->add_option("--states-csv", explore_args.states_csv);
    explore_cmd->add_option("--edges-csv", explore_args.edges_csv);
    explore_cmd->add_option("--out", report_out);

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Stochastic or scripted runs with a terminal-state histogram");
    add_network_options(simulate, sim_args.net);
    simulate->add_option("--scheduler", sim_args.scheduler, "uniform | propensity | greedy | script:<path>");
    simulate->add_option("--runs", sim_args.runs);
    simulate->add_option("--cap", sim_args.cap, "Step cap per run (decimal; default 10^6, or the full script)");
    simulate->add_option("--seed", sim_args.seed);
    simulate->add_option("--workers", sim_args.workers);
    simulate->add_option("--histogram-csv", sim_args.histogram_csv);
    simulate->add_option("--out", report_out);

    LassoArgs lasso_args;
    auto* lasso = app.add_subcommand("lasso", "Build and check the unfair non-terminating N2 trajectory");
    lasso->add_option("--m", lasso_args.m)->required();
    lasso->add_option("--n", lasso_args.n)->required();
    lasso->add_option("--p", lasso_args.p)->required();
    lasso->add_option("--out", report_out);

    OdeArgs ode_args;
    auto* ode = app.add_subcommand("ode", "Integrate the deterministic mass-action equations");
    add_network_options(ode, ode_args.net);
    ode->add_option("--x0", ode_args.x0, "Initial concentrations, e.g. Z0=1,B=0.5");
    ode->add_option("--t-max", ode_args.settings.t_max);
    ode->add_option("--initial-step", ode_args.settings.initial_step);
    ode->add_option("--rel-tol", ode_args.settings.rel_tol);
    ode->add_option("--abs-tol", ode_args.settings.abs_tol);
    ode->add_option("--stall", ode_args.settings.stall_threshold);
    ode->add_option("--csv", ode_args.csv, "Trajectory samples");
    ode->add_option("--out", report_out);

    NetworkArgs describe_args;
    auto* describe = app.add_subcommand("describe", "Species, reactions and linear-functional analysis");
    add_network_options(describe, describe_args);
    describe->add_option("--out", report_out);

    std::string command;
    const auto start = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        command = app.get_subcommands().front()->get_name();

        Outcome o;
        if (command == "build") {
            o = cmd_build(build_args);
        } else if (command == "predict") {
            o = cmd_predict(predict_args);
        } else if (command == "explore") {
            o = cmd_explore(explore_args);
        } else if (command == "simulate") {
            o = cmd_simulate(sim_args);
        } else if (command == "lasso") {
            o = cmd_lasso(lasso_args);
        } else if (command == "ode") {
            o = cmd_ode(ode_args);
        } else {
            o = cmd_describe(describe_args);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(make_report(command, args, o, ms), report_out, out);
        return o.code;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidationError;
    } catch (const Error& e) {
        err << "crnv: " << e.what() << '\n';
        Json r = {{"command", command}, {"argv", args}, {"error", e.what()}, {"exit_code", kValidationError}};
        try {
            emit(r, report_out, out);
        } catch (const std::exception&) {
        }
        return kValidationError;
    } catch (const std::exception& e) {
        err << "crnv: " << e.what() << '\n';
        Json r = {{"command", command}, {"argv", args}, {"error", e.what()}, {"exit_code", kInternalError}};
        out << r.dump(2) << '\n';
        return kInternalError;
    }
}

} // namespace crnv::cli
