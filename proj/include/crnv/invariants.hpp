#pragma once

#include "crnv/explorer.hpp"
#include "crnv/network.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crnv {

/// f(q) = sum_s coeffs[s] * q[s], optionally reduced modulo `modulus`.
struct LinearFunctional {
    std::vector<Integer> coeffs;
    std::optional<Integer> modulus;

    Integer evaluate(const State& state) const;
};

enum class Effect { Increases, Preserves, Decreases };

std::string_view to_string(Effect effect);

struct EffectEntry {
    std::string label;
    Integer delta_value;                  ///< c . delta
    std::optional<Integer> residue;       ///< (c . delta) mod d, when a modulus is set
    Effect effect = Effect::Preserves;
};

struct EffectReport {
    std::vector<EffectEntry> entries;     ///< one per reaction, in reaction order

    bool all_preserve() const;
};

/// Net stoichiometric change of reaction r (-1 per reactant, +1 per product).
std::vector<Integer> reaction_delta(const Network& network, ReactionIndex r);

/// Classifies every reaction by the change it causes in f. With a modulus
/// d, a reaction preserves f iff c . delta == 0 (mod d); otherwise the sign
/// of c . delta decides.
EffectReport classify_functional(const Network& network, const LinearFunctional& f);

struct RankingVerdict {
    bool valid = false;
    LinearFunctional functional;
    std::optional<ReactionIndex> first_violation;  ///< a reaction with c . delta >= 0

    /// Certified upper bound on the length of any trajectory from state.
    /// Equals f(state) when all coefficients are nonnegative.
    Integer step_bound_at(const State& state) const;
};

/// f is a ranking function iff every reaction lowers it by at least 1.
/// Throws ParameterError if f has a modulus.
RankingVerdict verify_ranking(const Network& network, const LinearFunctional& f);

LinearFunctional total_population(const Network& network);

/// 3 * sum z_i + 2b + r on an N1/N2-layout network.
LinearFunctional family_rank(const Network& network);

/// S_k = sum_{i<k} 2^i z_i, 1 <= k <= n+1. Throws LayoutError on foreign
/// networks and ParameterError for k out of range.
LinearFunctional s_k(const Network& network, unsigned k);

/// S_n with modulus 2^n.
LinearFunctional s_n_mod(const Network& network);

struct ConditionalCheck {
    bool holds = true;
    std::optional<State> counterexample;
};

/// Sweeps Theta_k: z_k = ... = z_n = 0 implies S_k = p, where p is the
/// population of the graph's initial state. 1 <= k <= n.
ConditionalCheck check_conditional_invariant_theta(const ReachGraph& graph, const Network& network,
                                                   unsigned k);

} // namespace crnv
