#pragma once

#include "crnv/errors.hpp"
#include "crnv/network.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crnv {

using StateIndex = std::uint32_t;

struct Edge {
    StateIndex source = 0;
    std::uint32_t reaction = 0;
    StateIndex target = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct ExploreLimits {
    std::size_t max_states = 5'000'000;
    std::size_t max_edges = 50'000'000;
};

/// Reachable states of a network from one initial state.
///
/// States are indexed in breadth-first discovery order (index 0 is the
/// initial state, successors of a state are tried in ascending reaction
/// index). Edges are stored grouped by source in that same order.
///
/// States are held in their canonical byte encoding and decoded on access,
/// which keeps wide networks (70 species) at a few hundred bytes per state.
class ReachGraph {
public:
    std::size_t state_count() const noexcept { return keys_.size(); }
    State state(StateIndex i) const;
    std::vector<State> states() const;
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Expanded states with no enabled reaction, ascending.
    const std::vector<StateIndex>& terminals() const noexcept { return terminals_; }
    bool complete() const noexcept { return complete_; }

    std::optional<StateIndex> index_of(const State& state) const;

    /// Outgoing edges of state i (empty for unexpanded states of a partial graph).
    std::span<const Edge> outgoing(StateIndex i) const;

    /// BFS tree parent of state i; nullopt for the initial state.
    struct Parent {
        StateIndex state;
        std::uint32_t reaction;
    };
    std::optional<Parent> parent(StateIndex i) const;

private:
    friend class ReachGraphBuilder;

    // Encodings live in fixed blocks so the string_views below never dangle.
    std::string_view store(const std::string& key);

    std::size_t species_count_ = 0;
    std::vector<std::unique_ptr<char[]>> blocks_;
    std::size_t block_used_ = 0;
    std::vector<std::string_view> keys_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> edge_offsets_;  // per expanded state, start in edges_
    std::vector<StateIndex> terminals_;
    std::vector<Parent> parents_;            // parents_[0] unused
    std::unordered_map<std::string_view, StateIndex> index_;
    bool complete_ = false;
};

/// Raised by explore when the state or edge limit is hit; carries the
/// partial graph (complete() == false).
class LimitExceededError : public Error {
public:
    LimitExceededError(const std::string& what, ReachGraph partial)
        : Error(what), partial_(std::move(partial)) {}

    const ReachGraph& partial() const noexcept { return partial_; }

private:
    ReachGraph partial_;
};

/// Breadth-first closure of the successor relation. Expansion is level
/// synchronous; with workers > 1 successor generation within a level runs
/// in parallel and results are merged in frontier order, so the output is
/// identical for every worker count.
ReachGraph explore(const Network& network, const State& init, const ExploreLimits& limits = {},
                   unsigned workers = 1);

using StatePredicate = std::function<bool(const State&)>;

std::vector<State> terminal_states(const ReachGraph& graph);

struct InvariantCheck {
    bool holds = true;
    std::optional<StateIndex> counterexample;
    std::vector<TrajectoryStep> witness;  ///< shortest path from the initial state
};

/// Evaluates the predicate on every reachable state. The counterexample is
/// the violating state of smallest index.
InvariantCheck check_state_invariant(const ReachGraph& graph, const StatePredicate& predicate);

struct FairTerminationCheck {
    bool holds = true;
    std::vector<StateIndex> stuck_states;  ///< states with no path to a terminal
};

/// Holds iff some terminal state is reachable from every reachable state,
/// which makes every fair trajectory terminal.
FairTerminationCheck fair_termination_precondition(const ReachGraph& graph);

enum class Verdict { HoldsAbsolutely, HoldsUnderFairness, Fails };

std::string_view to_string(Verdict verdict);

/// "Eventually always predicate" over full trajectories.
///  - HoldsAbsolutely: the graph is acyclic and every terminal satisfies it.
///  - HoldsUnderFairness: cycles exist, every state can reach a terminal and
///    every terminal satisfies it.
///  - Fails otherwise.
Verdict check_eventually_always(const ReachGraph& graph, const StatePredicate& predicate);

/// Shortest trajectory from the initial state to target along BFS parent
/// links. Empty when target is the initial state.
std::vector<TrajectoryStep> witness_path(const ReachGraph& graph, const State& target);

bool has_cycle(const ReachGraph& graph);

/// "index,<species...>" then one row per state.
void write_states_csv(std::ostream& out, const Network& network, const ReachGraph& graph);

/// "source_index,reaction_label,target_index" then one row per edge.
void write_edges_csv(std::ostream& out, const Network& network, const ReachGraph& graph);

} // namespace crnv
