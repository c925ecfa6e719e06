#include "crnv/sim.hpp"

#include "crnv/errors.hpp"

#include <json.hpp>

#include <limits>
#include <map>
#include <random>
#include <thread>

namespace crnv {

namespace {

void check_init(const Network& network, const State& init)
{
    if (init.size() != network.species_count()) {
        throw ParameterError("initial state does not match the network");
    }
    for (const auto& c : init.counts()) {
        if (c < 0) {
            throw ParameterError("initial state has a negative count");
        }
    }
}

std::uint64_t clamp_cap(const Count& cap)
{
    if (cap > std::numeric_limits<std::uint64_t>::max()) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return cap.convert_to<std::uint64_t>();
}

double propensity(const Network& network, const State& state, ReactionIndex r)
{
    const auto& rx = network.reaction(r);
    const double rate = to_double(rx.rate);
    const double a = to_double(state[rx.reactants[0]]);
    if (rx.reactants[0] == rx.reactants[1]) {
        return rate * a * (a - 1.0) / 2.0;
    }
    return rate * a * to_double(state[rx.reactants[1]]);
}

RunResult run_stochastic(const Network& network, const State& init, const Scheduler& scheduler,
                         std::uint64_t cap)
{
    std::mt19937_64 rng(scheduler.seed);
    RunResult out;
    out.final = init;
    std::uint64_t steps = 0;
    std::vector<ReactionIndex> live;
    std::vector<double> weights;
    while (true) {
        live = enabled_reactions(network, out.final);
        if (live.empty()) {
            out.terminated = true;
            break;
        }
        if (steps == cap) {
            out.cap_hit = true;
            break;
        }
        ReactionIndex chosen = live.front();
        if (scheduler.kind == Scheduler::Kind::UniformEnabled) {
            std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
            chosen = live[pick(rng)];
        } else {
            weights.clear();
            double total = 0.0;
            for (ReactionIndex r : live) {
                weights.push_back(propensity(network, out.final, r));
                total += weights.back();
            }
            std::uniform_real_distribution<double> u(0.0, total);
            double x = u(rng);
            chosen = live.back();
            for (std::size_t i = 0; i < live.size(); ++i) {
                if (x < weights[i]) {
                    chosen = live[i];
                    break;
                }
                x -= weights[i];
            }
        }
        apply_in_place(network, out.final, chosen);
        ++steps;
    }
    out.steps = steps;
    return out;
}

RunResult run_scripted(const Network& network, const State& init, const Script& script, const Count& cap)
{
    RunResult out;
    out.final = init;
    for (std::size_t pos = 0; pos < script.size(); ++pos) {
        const auto& entry = script[pos];
        if (entry.repetitions < 1) {
            throw ParameterError("script entry " + std::to_string(pos) + " has a nonpositive repetition count");
        }
        const Count limit = max_batch(network, out.final, entry.reaction);
        if (entry.repetitions > limit) {
            throw ScriptStepDisabledError(pos, "script entry " + std::to_string(pos) + " (\"" +
                                                   network.reaction(entry.reaction).label + "\" x" +
                                                   entry.repetitions.str() + ") is disabled after " +
                                                   limit.str() + " repetitions");
        }
        const Count room = cap - out.steps;
        if (entry.repetitions > room) {
            out.final = apply_many(network, out.final, entry.reaction, room);
            out.steps = cap;
            out.cap_hit = true;
            return out;
        }
        out.final = apply_many(network, out.final, entry.reaction, entry.repetitions);
        out.steps += entry.repetitions;
    }
    out.terminated = is_terminal(network, out.final);
    return out;
}

} // namespace

std::string_view to_string(Scheduler::Kind kind)
{
    switch (kind) {
    case Scheduler::Kind::UniformEnabled:
        return "uniform";
    case Scheduler::Kind::Propensity:
        return "propensity";
    case Scheduler::Kind::Scripted:
        return "script";
    }
    return "?";
}

RunResult run(const Network& network, const State& init, const Scheduler& scheduler, const Count& step_cap)
{
    check_init(network, init);
    if (step_cap < 1) {
        throw ParameterError("step cap must be positive");
    }
    if (scheduler.kind == Scheduler::Kind::Scripted) {
        return run_scripted(network, init, scheduler.script, step_cap);
    }
    return run_stochastic(network, init, scheduler, clamp_cap(step_cap));
}

Script zeta_cascade_script(unsigned m, unsigned n)
{
    if (m < 1 || n <= m + 1) {
        throw ParameterError("parameters must satisfy n > m+1");
    }
    Script s;
    for (unsigned i = 0; i < n; ++i) {
        s.push_back(ScriptEntry{i, pow2(n - 1 - i)});
    }
    return s;
}

Script greedy_batch_script(const Network& network, const State& init, std::size_t max_entries)
{
    check_init(network, init);
    Script s;
    State state = init;
    while (s.size() < max_entries) {
        auto live = enabled_reactions(network, state);
        if (live.empty()) {
            break;
        }
        const ReactionIndex r = live.front();
        Count k = max_batch(network, state, r);
        state = apply_many(network, state, r, k);
        s.push_back(ScriptEntry{r, std::move(k)});
    }
    return s;
}

double TerminalHistogram::termination_rate() const
{
    return runs == 0 ? 0.0 : static_cast<double>(terminated) / static_cast<double>(runs);
}

const HistogramBin* TerminalHistogram::modal() const
{
    const HistogramBin* best = nullptr;
    for (const auto& b : bins) {
        if (!best || b.runs > best->runs) {
            best = &b;
        }
    }
    return best;
}

TerminalHistogram empirical_terminal_distribution(const Network& network, const State& init,
                                                  Scheduler::Kind kind, std::uint64_t base_seed,
                                                  std::size_t runs, const Count& step_cap, unsigned workers)
{
    if (kind == Scheduler::Kind::Scripted) {
        throw ParameterError("empirical distributions need a stochastic scheduler");
    }
    check_init(network, init);
    workers = std::max(1u, workers);

    using Partial = std::map<std::string, HistogramBin>;
    std::vector<Partial> partials(workers);
    std::vector<std::size_t> terminated(workers, 0);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < runs; i += workers) {
            Scheduler sched{kind, base_seed + i, {}};
            RunResult res = run(network, init, sched, step_cap);
            auto& bin = partials[w][encode_state(res.final)];
            if (bin.runs == 0) {
                bin.state = res.final;
                bin.terminal = res.terminated;
            }
            ++bin.runs;
            terminated[w] += res.terminated ? 1 : 0;
        }
    };
    if (workers == 1 || runs < 2) {
        for (unsigned w = 0; w < workers; ++w) {
            work(w);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    Partial merged;
    TerminalHistogram h;
    h.runs = runs;
    for (unsigned w = 0; w < workers; ++w) {
        h.terminated += terminated[w];
        for (auto& [key, bin] : partials[w]) {
            auto& m = merged[key];
            if (m.runs == 0) {
                m.state = bin.state;
                m.terminal = bin.terminal;
            }
            m.runs += bin.runs;
        }
    }
    for (auto& [key, bin] : merged) {
        h.bins.push_back(std::move(bin));
    }
    return h;
}

Script parse_script_json(const Network& network, std::string_view text)
{
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid script JSON: ") + e.what());
    }
    if (!root.is_array()) {
        throw SchemaError("script must be a JSON array");
    }
    Script s;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const auto& e = root[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw SchemaError("script entry " + std::to_string(i) + " must be [reaction_label, count_string]");
        }
        auto r = network.find_reaction(e[0].get<std::string>());
        if (!r) {
            throw SchemaError("script entry " + std::to_string(i) + " names unknown reaction \"" +
                              e[0].get<std::string>() + "\"");
        }
        Count k = parse_count(e[1].get<std::string>());
        if (k < 1) {
            throw SchemaError("script entry " + std::to_string(i) + " has a nonpositive count");
        }
        s.push_back(ScriptEntry{*r, std::move(k)});
    }
    return s;
}

std::string script_to_json(const Network& network, const Script& script)
{
    nlohmann::json root = nlohmann::json::array();
    for (const auto& e : script) {
        root.push_back({network.reaction(e.reaction).label, e.repetitions.str()});
    }
    return root.dump();
}

} // namespace crnv
