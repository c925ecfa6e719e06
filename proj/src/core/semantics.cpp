#include "crnv/errors.hpp"
#include "crnv/network.hpp"

namespace crnv {

namespace {

void check_state(const Network& network, const State& state)
{
    if (state.size() != network.species_count()) {
        throw ParameterError("state has " + std::to_string(state.size()) + " entries, network has " +
                             std::to_string(network.species_count()) + " species");
    }
}

} // namespace

bool enabled(const Network& network, const State& state, ReactionIndex r)
{
    const auto& rx = network.reaction(r);
    check_state(network, state);
    if (rx.reactants[0] == rx.reactants[1]) {
        return state[rx.reactants[0]] >= 2;
    }
    return state[rx.reactants[0]] >= 1 && state[rx.reactants[1]] >= 1;
}

void apply_in_place(const Network& network, State& state, ReactionIndex r)
{
    if (!enabled(network, state, r)) {
        throw DisabledReactionError("reaction \"" + network.reaction(r).label + "\" is not enabled");
    }
    const auto& rx = network.reaction(r);
    state[rx.reactants[0]] -= 1;
    state[rx.reactants[1]] -= 1;
    state[rx.products[0]] += 1;
    state[rx.products[1]] += 1;
}

State apply(const Network& network, const State& state, ReactionIndex r)
{
    State next = state;
    apply_in_place(network, next, r);
    return next;
}

Count max_batch(const Network& network, const State& state, ReactionIndex r)
{
    if (!enabled(network, state, r)) {
        return 0;
    }
    const auto& rx = network.reaction(r);
    const auto& d = network.delta(r);
    // Application k (1-based) sees x + (k-1)d and needs x_s + (k-1)d_s >= need_s
    // for every reactant s. Only species with d_s < 0 bound k; some exist
    // because the network rejects zero-delta reactions.
    std::optional<Count> best;
    auto consider = [&](SpeciesId s) {
        if (d[s] >= 0) {
            return;
        }
        Count need = (rx.reactants[0] == s ? 1 : 0) + (rx.reactants[1] == s ? 1 : 0);
        Count k = (state[s] - need) / Count(-d[s]) + 1;
        if (!best || k < *best) {
            best = k;
        }
    };
    consider(rx.reactants[0]);
    if (rx.reactants[1] != rx.reactants[0]) {
        consider(rx.reactants[1]);
    }
    return *best;
}

State apply_many(const Network& network, const State& state, ReactionIndex r, const Count& k)
{
    if (k < 0) {
        throw BatchTooLargeError("batch size must be nonnegative");
    }
    if (k == 0) {
        check_state(network, state);
        return state;
    }
    Count limit = max_batch(network, state, r);
    if (k > limit) {
        throw BatchTooLargeError("batch of " + k.str() + " \"" + network.reaction(r).label +
                                 "\" exceeds the maximum of " + limit.str());
    }
    State next = state;
    const auto& d = network.delta(r);
    for (std::size_t s = 0; s < d.size(); ++s) {
        if (d[s] != 0) {
            next[s] += d[s] * k;
        }
    }
    return next;
}

std::vector<ReactionIndex> enabled_reactions(const Network& network, const State& state)
{
    std::vector<ReactionIndex> out;
    for (ReactionIndex r = 0; r < network.reaction_count(); ++r) {
        if (enabled(network, state, r)) {
            out.push_back(r);
        }
    }
    return out;
}

bool is_terminal(const Network& network, const State& state)
{
    for (ReactionIndex r = 0; r < network.reaction_count(); ++r) {
        if (enabled(network, state, r)) {
            return false;
        }
    }
    return true;
}

} // namespace crnv
