#include "crnv/invariants.hpp"

#include "crnv/errors.hpp"

namespace crnv {

namespace {

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            sum += a[i] * b[i];
        }
    }
    return sum;
}

Integer floor_mod(const Integer& a, const Integer& d)
{
    Integer r = a % d;
    if (r < 0) {
        r += d;
    }
    return r;
}

void check_functional(const Network& network, const LinearFunctional& f)
{
    if (f.coeffs.size() != network.species_count()) {
        throw ParameterError("functional has " + std::to_string(f.coeffs.size()) + " coefficients, network has " +
                             std::to_string(network.species_count()) + " species");
    }
    if (f.modulus && *f.modulus < 1) {
        throw ParameterError("modulus must be positive");
    }
}

} // namespace

Integer LinearFunctional::evaluate(const State& state) const
{
    if (state.size() != coeffs.size()) {
        throw ParameterError("state and functional sizes differ");
    }
    Integer v = dot(coeffs, state.counts());
    return modulus ? floor_mod(v, *modulus) : v;
}

std::string_view to_string(Effect effect)
{
    switch (effect) {
    case Effect::Increases:
        return "increases";
    case Effect::Preserves:
        return "preserves";
    case Effect::Decreases:
        return "decreases";
    }
    return "?";
}

bool EffectReport::all_preserve() const
{
    for (const auto& e : entries) {
        if (e.effect != Effect::Preserves) {
            return false;
        }
    }
    return true;
}

std::vector<Integer> reaction_delta(const Network& network, ReactionIndex r)
{
    return network.delta(r);
}

EffectReport classify_functional(const Network& network, const LinearFunctional& f)
{
    check_functional(network, f);
    EffectReport report;
    for (ReactionIndex r = 0; r < network.reaction_count(); ++r) {
        EffectEntry e;
        e.label = network.reaction(r).label;
        e.delta_value = dot(f.coeffs, network.delta(r));
        if (f.modulus) {
            e.residue = floor_mod(e.delta_value, *f.modulus);
        }
        const bool zero = f.modulus ? *e.residue == 0 : e.delta_value == 0;
        if (zero) {
            e.effect = Effect::Preserves;
        } else {
            e.effect = e.delta_value > 0 ? Effect::Increases : Effect::Decreases;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

Integer RankingVerdict::step_bound_at(const State& state) const
{
    // f drops by >= 1 per step and is bounded below on the population
    // simplex by P * min(0, min c_s).
    Integer lowest = 0;
    for (const auto& c : functional.coeffs) {
        if (c < lowest) {
            lowest = c;
        }
    }
    return functional.evaluate(state) - state.total() * lowest;
}

RankingVerdict verify_ranking(const Network& network, const LinearFunctional& f)
{
    check_functional(network, f);
    if (f.modulus) {
        throw ParameterError("a ranking function must not carry a modulus");
    }
    RankingVerdict v;
    v.functional = f;
    for (ReactionIndex r = 0; r < network.reaction_count(); ++r) {
        if (dot(f.coeffs, network.delta(r)) > -1) {
            v.first_violation = r;
            break;
        }
    }
    v.valid = !v.first_violation;
    return v;
}

LinearFunctional total_population(const Network& network)
{
    return LinearFunctional{std::vector<Integer>(network.species_count(), Integer(1)), std::nullopt};
}

LinearFunctional family_rank(const Network& network)
{
    const auto layout = require_family_layout(network);
    LinearFunctional f{std::vector<Integer>(network.species_count(), Integer(0)), std::nullopt};
    for (SpeciesId z : layout.z) {
        f.coeffs[z] = 3;
    }
    f.coeffs[layout.b] = 2;
    f.coeffs[layout.r] = 1;
    return f;
}

LinearFunctional s_k(const Network& network, unsigned k)
{
    const auto layout = require_family_layout(network);
    if (k < 1 || k > layout.n + 1) {
        throw ParameterError("S_k requires 1 <= k <= n+1 (got k=" + std::to_string(k) + ", n=" +
                             std::to_string(layout.n) + ")");
    }
    LinearFunctional f{std::vector<Integer>(network.species_count(), Integer(0)), std::nullopt};
    for (unsigned i = 0; i < k; ++i) {
        f.coeffs[layout.z[i]] = pow2(i);
    }
    return f;
}

LinearFunctional s_n_mod(const Network& network)
{
    const auto layout = require_family_layout(network);
    LinearFunctional f = s_k(network, layout.n);
    f.modulus = pow2(layout.n);
    return f;
}

ConditionalCheck check_conditional_invariant_theta(const ReachGraph& graph, const Network& network, unsigned k)
{
    if (!graph.complete()) {
        throw IncompleteGraphError("Theta_k sweep requires a completely explored graph");
    }
    const auto layout = require_family_layout(network);
    if (k < 1 || k > layout.n) {
        throw ParameterError("Theta_k requires 1 <= k <= n (got k=" + std::to_string(k) + ")");
    }
    const LinearFunctional sk = s_k(network, k);
    const Count p = graph.state(0).total();
    auto theta = [&](const State& q) {
        for (unsigned i = k; i <= layout.n; ++i) {
            if (q[layout.z[i]] != 0) {
                return true;
            }
        }
        return sk.evaluate(q) == p;
    };
    const auto check = check_state_invariant(graph, theta);
    ConditionalCheck out;
    out.holds = check.holds;
    if (check.counterexample) {
        out.counterexample = graph.state(*check.counterexample);
    }
    return out;
}

} // namespace crnv
