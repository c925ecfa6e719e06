#pragma once

#include "crnv/count.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crnv {

using SpeciesId = std::size_t;
using ReactionIndex = std::size_t;

struct Species {
    SpeciesId id = 0;
    std::string name;
};

/// A population-protocol reaction A + B -> C + D. Species may repeat on
/// either side.
struct Reaction {
    std::array<SpeciesId, 2> reactants{};
    std::array<SpeciesId, 2> products{};
    Rational rate{1};
    std::string label;
};

/// Parameters of the N1/N2 construction.
struct NetworkParams {
    unsigned m = 0;
    unsigned n = 0;
    std::optional<Count> p;
};

/// Species counts, one entry per species of the owning network.
class State {
public:
    State() = default;
    explicit State(std::size_t species_count) : counts_(species_count) {}
    explicit State(std::vector<Count> counts) : counts_(std::move(counts)) {}

    std::size_t size() const noexcept { return counts_.size(); }
    const Count& operator[](SpeciesId id) const { return counts_[id]; }
    Count& operator[](SpeciesId id) { return counts_[id]; }
    const std::vector<Count>& counts() const noexcept { return counts_; }

    Count total() const;

    friend bool operator==(const State&, const State&) = default;

private:
    std::vector<Count> counts_;
};

struct TrajectoryStep {
    ReactionIndex reaction = 0;
    State state;
};

/// Immutable species table plus reaction list. The constructor validates
/// the population-protocol restrictions; a Network that exists is valid.
class Network {
public:
    /// Throws ParameterError on duplicate or empty species names, duplicate
    /// labels, out-of-range species ids, nonpositive rates, and reactions
    /// whose product multiset equals their reactant multiset.
    Network(std::vector<std::string> species_names,
            std::vector<Reaction> reactions,
            std::optional<NetworkParams> params = std::nullopt);

    const std::vector<Species>& species() const noexcept { return species_; }
    const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
    const std::optional<NetworkParams>& params() const noexcept { return params_; }

    std::size_t species_count() const noexcept { return species_.size(); }
    std::size_t reaction_count() const noexcept { return reactions_.size(); }

    const Reaction& reaction(ReactionIndex r) const;

    std::optional<SpeciesId> find_species(std::string_view name) const;
    /// Throws ParameterError when absent.
    SpeciesId species_id(std::string_view name) const;

    std::optional<ReactionIndex> find_reaction(std::string_view label) const;
    /// Throws ParameterError when absent.
    ReactionIndex reaction_index(std::string_view label) const;

    /// Net stoichiometric change of reaction r, one entry per species.
    const std::vector<Integer>& delta(ReactionIndex r) const;

private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
    std::optional<NetworkParams> params_;
    std::vector<std::vector<Integer>> deltas_;
};

// ---- single-step semantics ------------------------------------------------

bool enabled(const Network& network, const State& state, ReactionIndex r);

/// Throws DisabledReactionError if r is not enabled in state.
State apply(const Network& network, const State& state, ReactionIndex r);

/// In-place variant of apply for hot loops; same preconditions.
void apply_in_place(const Network& network, State& state, ReactionIndex r);

/// Largest k such that k successive applications of r are all enabled.
Count max_batch(const Network& network, const State& state, ReactionIndex r);

/// k successive applications of r in one arithmetic step.
/// Throws BatchTooLargeError when k > max_batch.
State apply_many(const Network& network, const State& state, ReactionIndex r, const Count& k);

std::vector<ReactionIndex> enabled_reactions(const Network& network, const State& state);

bool is_terminal(const Network& network, const State& state);

// ---- N1 / N2 construction -------------------------------------------------

/// Species Z0..Zn, B, R; reactions zeta_0..zeta_n, chi. Requires n > m+1.
Network build_n1(unsigned m, unsigned n);

/// build_n1 plus omega: R + Zn -> B + Zn.
Network build_n2(unsigned m, unsigned n);

/// Z0 = p, everything else 0. Throws ParameterError if the network has no Z0.
State initial_state(const Network& network, const Count& p);

/// binomial(p + s - 1, s - 1): the number of s-species states of total population p.
Count state_space_size(std::size_t species_count, const Count& population);

/// Species ids of a network shaped like build_n1/build_n2 output.
struct FamilyLayout {
    unsigned n = 0;
    std::vector<SpeciesId> z;  ///< Z0..Zn
    SpeciesId b = 0;
    SpeciesId r = 0;
};

/// Recognizes the Z0..Zn, B, R species naming (reactions are not inspected).
std::optional<FamilyLayout> family_layout(const Network& network);

/// Throws LayoutError when family_layout fails.
FamilyLayout require_family_layout(const Network& network);

/// Recovers (m, n) when the network is reaction-for-reaction identical to
/// build_n1 or build_n2 output; `omega` reports which variant matched.
struct FamilyMatch {
    unsigned m = 0;
    unsigned n = 0;
    bool omega = false;
};
std::optional<FamilyMatch> match_family(const Network& network);

// ---- canonical encoding ---------------------------------------------------

/// Injective byte encoding of a count vector: per count a LEB128 byte length
/// followed by the minimal big-endian magnitude bytes. Used as the
/// deduplication key in exploration and as the histogram key in simulation.
std::string encode_state(const State& state);

/// Inverse of encode_state for a state with `species_count` entries.
State decode_state(std::string_view bytes, std::size_t species_count);

} // namespace crnv
