#include "crnv/errors.hpp"
#include "crnv/sim.hpp"

#include <map>
#include <set>

namespace crnv {

namespace {

// Longest loop lasso_is_fair will unroll step by step.
constexpr std::uint64_t kMaxUnrolledLoop = 10'000'000;

} // namespace

Lasso build_unfair_lasso(unsigned m, unsigned n, const Count& p)
{
    Script stem = zeta_cascade_script(m, n);
    if (p < pow2(n)) {
        throw ParameterError("the non-terminating trajectory needs p >= 2^n (p=" + p.str() + ", 2^n=" +
                             pow2(n).str() + ")");
    }
    const ReactionIndex chi = n + 1;
    const ReactionIndex omega = n + 2;
    return Lasso{std::move(stem), Script{{omega, 1}, {chi, 1}}};
}

LassoCheck verify_lasso(const Network& network, const State& init, const Lasso& lasso)
{
    if (init.size() != network.species_count()) {
        throw ParameterError("initial state does not match the network");
    }
    State state = init;
    for (std::size_t pos = 0; pos < lasso.stem.size(); ++pos) {
        const auto& e = lasso.stem[pos];
        if (e.repetitions < 1 || e.repetitions > max_batch(network, state, e.reaction)) {
            throw ScriptStepDisabledError(pos, "lasso stem entry " + std::to_string(pos) + " (\"" +
                                                   network.reaction(e.reaction).label + "\") cannot run");
        }
        state = apply_many(network, state, e.reaction, e.repetitions);
    }
    LassoCheck out;
    out.loop_start = state;
    if (lasso.loop.empty()) {
        return out;
    }
    for (const auto& e : lasso.loop) {
        if (e.repetitions < 1 || e.repetitions > max_batch(network, state, e.reaction)) {
            return out;
        }
        state = apply_many(network, state, e.reaction, e.repetitions);
    }
    out.valid = state == out.loop_start;
    return out;
}

FairnessCheck lasso_is_fair(const Network& network, const State& init, const Lasso& lasso)
{
    const LassoCheck check = verify_lasso(network, init, lasso);
    if (!check.valid) {
        throw InvalidLassoError("lasso loop does not return to its start state");
    }
    Count total = 0;
    for (const auto& e : lasso.loop) {
        total += e.repetitions;
    }
    if (total > kMaxUnrolledLoop) {
        throw ParameterError("lasso loop too long to unroll (" + total.str() + " steps)");
    }

    // Unroll the loop: visited[j] is the state at loop step j, taken[j] the
    // reaction applied there.
    std::vector<State> visited;
    std::vector<ReactionIndex> taken;
    State state = check.loop_start;
    for (const auto& e : lasso.loop) {
        for (Count k = 0; k < e.repetitions; ++k) {
            visited.push_back(state);
            taken.push_back(e.reaction);
            apply_in_place(network, state, e.reaction);
        }
    }

    std::map<std::string, std::set<ReactionIndex>> taken_at;
    std::vector<std::string> keys;
    keys.reserve(visited.size());
    for (std::size_t j = 0; j < visited.size(); ++j) {
        keys.push_back(encode_state(visited[j]));
        taken_at[keys.back()].insert(taken[j]);
    }

    std::set<std::string> checked;
    for (std::size_t j = 0; j < visited.size(); ++j) {
        if (!checked.insert(keys[j]).second) {
            continue;
        }
        const auto& used = taken_at[keys[j]];
        for (ReactionIndex r : enabled_reactions(network, visited[j])) {
            if (!used.count(r)) {
                return FairnessCheck{false, FairnessViolation{visited[j], r, j}};
            }
        }
    }
    return FairnessCheck{true, std::nullopt};
}

} // namespace crnv
