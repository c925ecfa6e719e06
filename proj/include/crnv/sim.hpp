#pragma once

#include "crnv/network.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crnv {

struct ScriptEntry {
    ReactionIndex reaction = 0;
    Count repetitions = 1;

    friend bool operator==(const ScriptEntry&, const ScriptEntry&) = default;
};

using Script = std::vector<ScriptEntry>;

/// PRNG behind the stochastic schedulers; recorded in reports.
inline constexpr std::string_view kRngAlgorithm = "std::mt19937_64";

struct Scheduler {
    enum class Kind { UniformEnabled, Propensity, Scripted };

    Kind kind = Kind::UniformEnabled;
    std::uint64_t seed = 0;
    Script script;

    static Scheduler uniform(std::uint64_t seed) { return {Kind::UniformEnabled, seed, {}}; }
    static Scheduler propensity(std::uint64_t seed) { return {Kind::Propensity, seed, {}}; }
    static Scheduler scripted(Script script) { return {Kind::Scripted, 0, std::move(script)}; }
};

std::string_view to_string(Scheduler::Kind kind);

struct RunResult {
    State final;
    Count steps = 0;  ///< reaction occurrences; a batch counts its repetitions
    bool terminated = false;
    bool cap_hit = false;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Runs until a terminal state, the step cap, or (scripted) the end of the
/// script.
///  - UniformEnabled picks uniformly among enabled reaction indices.
///  - Propensity picks with weight rate*a*b (distinct reactants) or
///    rate*a*(a-1)/2 (doubled reactant).
///  - Scripted applies each entry as one batch and throws
///    ScriptStepDisabledError when an entry cannot run in full.
RunResult run(const Network& network, const State& init, const Scheduler& scheduler, const Count& step_cap);

/// zeta_0^(2^(n-1)) zeta_1^(2^(n-2)) ... zeta_(n-1)^1, using build_n1/build_n2
/// reaction indices. Requires n > m+1.
Script zeta_cascade_script(unsigned m, unsigned n);

/// Script that repeatedly fires the lowest-index enabled reaction as many
/// times as possible. Stops at a terminal state or after max_entries batches.
/// On N1/N2 it reaches the terminal state in at most n+3 batches.
Script greedy_batch_script(const Network& network, const State& init, std::size_t max_entries = 1'000'000);

/// Finite stem followed by a loop repeated forever.
struct Lasso {
    Script stem;
    Script loop;
};

/// The non-terminating N2 trajectory for p >= 2^n: the zeta cascade, then
/// (omega, chi) forever.
Lasso build_unfair_lasso(unsigned m, unsigned n, const Count& p);

struct LassoCheck {
    State loop_start;
    bool valid = false;
};

/// Executes the stem (ScriptStepDisabledError if it cannot run), then the
/// loop once. Valid iff the loop is nonempty, every loop step is enabled and
/// the loop returns to its start state.
LassoCheck verify_lasso(const Network& network, const State& init, const Lasso& lasso);

struct FairnessViolation {
    State state;
    ReactionIndex reaction = 0;
    std::size_t loop_position = 0;  ///< first loop step at which `state` occurs
};

struct FairnessCheck {
    bool fair = true;
    std::optional<FairnessViolation> violation;
};

/// Strong fairness of stem . loop^omega: every reaction enabled at a state
/// visited by the loop must be taken from that state somewhere in the loop.
/// Throws InvalidLassoError if verify_lasso rejects the lasso.
FairnessCheck lasso_is_fair(const Network& network, const State& init, const Lasso& lasso);

struct HistogramBin {
    State state;
    std::size_t runs = 0;
    bool terminal = false;
};

struct TerminalHistogram {
    std::vector<HistogramBin> bins;  ///< ordered by canonical state encoding
    std::size_t runs = 0;
    std::size_t terminated = 0;

    double termination_rate() const;
    /// Most frequent final state; ties go to the earlier bin. Null when empty.
    const HistogramBin* modal() const;
};

/// `runs` independent runs with seeds base_seed + i. The result does not
/// depend on `workers`. Throws ParameterError for Scripted.
TerminalHistogram empirical_terminal_distribution(const Network& network, const State& init,
                                                  Scheduler::Kind kind, std::uint64_t base_seed,
                                                  std::size_t runs, const Count& step_cap,
                                                  unsigned workers = 1);

/// Scripts as JSON: [["zeta_0", "8"], ["zeta_1", "4"], ...].
Script parse_script_json(const Network& network, std::string_view text);
std::string script_to_json(const Network& network, const Script& script);

} // namespace crnv
