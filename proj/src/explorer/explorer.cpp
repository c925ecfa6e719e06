#include "crnv/explorer.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace crnv {

namespace {

struct Successor {
    std::uint32_t reaction;
    std::string key;
};

void require_complete(const ReachGraph& graph, const char* what)
{
    if (!graph.complete()) {
        throw IncompleteGraphError(std::string(what) + " requires a completely explored graph");
    }
}

std::vector<Successor> successors(const Network& network, const State& state)
{
    std::vector<Successor> out;
    for (ReactionIndex r = 0; r < network.reaction_count(); ++r) {
        if (enabled(network, state, r)) {
            out.push_back(Successor{static_cast<std::uint32_t>(r), encode_state(apply(network, state, r))});
        }
    }
    return out;
}

// Levels smaller than this are expanded on the calling thread.
constexpr std::size_t kParallelLevelSize = 512;

constexpr std::size_t kBlockSize = std::size_t{1} << 20;

} // namespace

class ReachGraphBuilder {
public:
    static ReachGraph run(const Network& network, const State& init, const ExploreLimits& limits,
                          unsigned workers)
    {
        if (init.size() != network.species_count()) {
            throw ParameterError("initial state does not match the network");
        }
        for (const auto& c : init.counts()) {
            if (c < 0) {
                throw ParameterError("initial state has a negative count");
            }
        }
        if (limits.max_states < 1 || limits.max_edges < 1) {
            throw ParameterError("exploration limits must be positive");
        }
        workers = std::max(1u, workers);

        ReachGraph g;
        g.species_count_ = network.species_count();
        g.index_.emplace(g.store(encode_state(init)), 0);
        g.parents_.push_back(ReachGraph::Parent{0, 0});

        std::size_t level_begin = 0;
        std::vector<std::vector<Successor>> level;
        while (level_begin < g.state_count()) {
            const std::size_t level_end = g.state_count();
            const std::size_t width = level_end - level_begin;
            level.assign(width, {});

            auto expand = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    level[i - level_begin] = successors(network, g.state(static_cast<StateIndex>(i)));
                }
            };
            if (workers == 1 || width < kParallelLevelSize) {
                expand(level_begin, level_end);
            } else {
                std::vector<std::thread> pool;
                const std::size_t chunk = (width + workers - 1) / workers;
                for (std::size_t lo = level_begin; lo < level_end; lo += chunk) {
                    pool.emplace_back(expand, lo, std::min(level_end, lo + chunk));
                }
                for (auto& t : pool) {
                    t.join();
                }
            }

            for (std::size_t i = level_begin; i < level_end; ++i) {
                auto& succ = level[i - level_begin];
                g.edge_offsets_.push_back(g.edges_.size());
                if (succ.empty()) {
                    g.terminals_.push_back(static_cast<StateIndex>(i));
                }
                for (auto& s : succ) {
                    StateIndex target;
                    auto it = g.index_.find(s.key);
                    if (it != g.index_.end()) {
                        target = it->second;
                    } else {
                        if (g.state_count() >= limits.max_states) {
                            throw LimitExceededError("state limit of " + std::to_string(limits.max_states) +
                                                         " exceeded",
                                                     std::move(g));
                        }
                        target = static_cast<StateIndex>(g.state_count());
                        g.index_.emplace(g.store(s.key), target);
                        g.parents_.push_back(ReachGraph::Parent{static_cast<StateIndex>(i), s.reaction});
                    }
                    if (g.edges_.size() >= limits.max_edges) {
                        throw LimitExceededError("edge limit of " + std::to_string(limits.max_edges) +
                                                     " exceeded",
                                                 std::move(g));
                    }
                    g.edges_.push_back(Edge{static_cast<StateIndex>(i), s.reaction, target});
                }
            }
            level_begin = level_end;
        }
        g.complete_ = true;
        return g;
    }
};

std::string_view ReachGraph::store(const std::string& key)
{
    if (blocks_.empty() || block_used_ + key.size() > kBlockSize) {
        blocks_.push_back(std::make_unique<char[]>(std::max(kBlockSize, key.size())));
        block_used_ = 0;
    }
    char* dst = blocks_.back().get() + block_used_;
    std::copy(key.begin(), key.end(), dst);
    block_used_ += key.size();
    keys_.emplace_back(dst, key.size());
    return keys_.back();
}

State ReachGraph::state(StateIndex i) const
{
    return decode_state(keys_.at(i), species_count_);
}

std::vector<State> ReachGraph::states() const
{
    std::vector<State> out;
    out.reserve(keys_.size());
    for (StateIndex i = 0; i < keys_.size(); ++i) {
        out.push_back(state(i));
    }
    return out;
}

std::optional<StateIndex> ReachGraph::index_of(const State& state) const
{
    auto it = index_.find(encode_state(state));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::span<const Edge> ReachGraph::outgoing(StateIndex i) const
{
    if (i >= edge_offsets_.size()) {
        return {};
    }
    const std::size_t begin = edge_offsets_[i];
    const std::size_t end = i + 1 < edge_offsets_.size() ? edge_offsets_[i + 1] : edges_.size();
    return std::span<const Edge>(edges_.data() + begin, end - begin);
}

std::optional<ReachGraph::Parent> ReachGraph::parent(StateIndex i) const
{
    if (i == 0 || i >= parents_.size()) {
        return std::nullopt;
    }
    return parents_[i];
}

ReachGraph explore(const Network& network, const State& init, const ExploreLimits& limits, unsigned workers)
{
    return ReachGraphBuilder::run(network, init, limits, workers);
}

std::vector<State> terminal_states(const ReachGraph& graph)
{
    require_complete(graph, "terminal_states");
    std::vector<State> out;
    out.reserve(graph.terminals().size());
    for (StateIndex i : graph.terminals()) {
        out.push_back(graph.state(i));
    }
    return out;
}

InvariantCheck check_state_invariant(const ReachGraph& graph, const StatePredicate& predicate)
{
    require_complete(graph, "check_state_invariant");
    InvariantCheck out;
    for (StateIndex i = 0; i < graph.state_count(); ++i) {
        State q = graph.state(i);
        if (!predicate(q)) {
            out.holds = false;
            out.counterexample = i;
            out.witness = witness_path(graph, q);
            break;
        }
    }
    return out;
}

FairTerminationCheck fair_termination_precondition(const ReachGraph& graph)
{
    require_complete(graph, "fair_termination_precondition");
    const std::size_t n = graph.state_count();
    // Reverse adjacency in CSR form.
    std::vector<std::size_t> offsets(n + 1, 0);
    for (const auto& e : graph.edges()) {
        ++offsets[e.target + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i + 1] += offsets[i];
    }
    std::vector<StateIndex> sources(graph.edges().size());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto& e : graph.edges()) {
        sources[fill[e.target]++] = e.source;
    }

    std::vector<char> reaches(n, 0);
    std::deque<StateIndex> queue;
    for (StateIndex t : graph.terminals()) {
        reaches[t] = 1;
        queue.push_back(t);
    }
    while (!queue.empty()) {
        StateIndex v = queue.front();
        queue.pop_front();
        for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
            StateIndex u = sources[k];
            if (!reaches[u]) {
                reaches[u] = 1;
                queue.push_back(u);
            }
        }
    }
    FairTerminationCheck out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!reaches[i]) {
            out.stuck_states.push_back(static_cast<StateIndex>(i));
        }
    }
    out.holds = out.stuck_states.empty();
    return out;
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::HoldsAbsolutely:
        return "holds-absolutely";
    case Verdict::HoldsUnderFairness:
        return "holds-under-fairness";
    case Verdict::Fails:
        return "fails";
    }
    return "?";
}

bool has_cycle(const ReachGraph& graph)
{
    // Kahn: a cycle exists iff some state never reaches in-degree zero.
    const std::size_t n = graph.state_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& e : graph.edges()) {
        ++indegree[e.target];
    }
    std::vector<StateIndex> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) {
            stack.push_back(static_cast<StateIndex>(i));
        }
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        StateIndex v = stack.back();
        stack.pop_back();
        ++removed;
        for (const auto& e : graph.outgoing(v)) {
            if (--indegree[e.target] == 0) {
                stack.push_back(e.target);
            }
        }
    }
    return removed < n;
}

Verdict check_eventually_always(const ReachGraph& graph, const StatePredicate& predicate)
{
    require_complete(graph, "check_eventually_always");
    for (StateIndex t : graph.terminals()) {
        if (!predicate(graph.state(t))) {
            return Verdict::Fails;
        }
    }
    if (!has_cycle(graph)) {
        return Verdict::HoldsAbsolutely;
    }
    return fair_termination_precondition(graph).holds ? Verdict::HoldsUnderFairness : Verdict::Fails;
}

std::vector<TrajectoryStep> witness_path(const ReachGraph& graph, const State& target)
{
    auto idx = graph.index_of(target);
    if (!idx) {
        throw UnreachableStateError("target state is not in the reachability graph");
    }
    std::vector<TrajectoryStep> path;
    StateIndex cur = *idx;
    while (auto p = graph.parent(cur)) {
        path.push_back(TrajectoryStep{p->reaction, graph.state(cur)});
        cur = p->state;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace crnv
