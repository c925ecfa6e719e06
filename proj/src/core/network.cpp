#include "crnv/network.hpp"

#include "crnv/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace crnv {

Count State::total() const
{
    Count sum = 0;
    for (const auto& c : counts_) {
        sum += c;
    }
    return sum;
}

Network::Network(std::vector<std::string> species_names,
                 std::vector<Reaction> reactions,
                 std::optional<NetworkParams> params)
    : reactions_(std::move(reactions)), params_(std::move(params))
{
    std::unordered_set<std::string> seen;
    species_.reserve(species_names.size());
    for (std::size_t i = 0; i < species_names.size(); ++i) {
        auto& name = species_names[i];
        if (name.empty()) {
            throw ParameterError("species name must not be empty");
        }
        if (!seen.insert(name).second) {
            throw ParameterError("duplicate species name \"" + name + "\"");
        }
        species_.push_back(Species{i, std::move(name)});
    }

    std::unordered_set<std::string> labels;
    deltas_.reserve(reactions_.size());
    for (std::size_t r = 0; r < reactions_.size(); ++r) {
        const auto& rx = reactions_[r];
        if (rx.label.empty()) {
            throw ParameterError("reaction " + std::to_string(r) + " has an empty label");
        }
        if (!labels.insert(rx.label).second) {
            throw ParameterError("duplicate reaction label \"" + rx.label + "\"");
        }
        for (SpeciesId id : {rx.reactants[0], rx.reactants[1], rx.products[0], rx.products[1]}) {
            if (id >= species_.size()) {
                throw ParameterError("reaction \"" + rx.label + "\" references unknown species id " +
                                     std::to_string(id));
            }
        }
        if (rx.rate <= 0) {
            throw ParameterError("reaction \"" + rx.label + "\" has a nonpositive rate");
        }
        std::vector<Integer> d(species_.size());
        d[rx.reactants[0]] -= 1;
        d[rx.reactants[1]] -= 1;
        d[rx.products[0]] += 1;
        d[rx.products[1]] += 1;
        if (std::all_of(d.begin(), d.end(), [](const Integer& v) { return v == 0; })) {
            throw ParameterError("reaction \"" + rx.label + "\" has no net effect");
        }
        deltas_.push_back(std::move(d));
    }
}

const Reaction& Network::reaction(ReactionIndex r) const
{
    if (r >= reactions_.size()) {
        throw IndexError("reaction index " + std::to_string(r) + " out of range (" +
                         std::to_string(reactions_.size()) + " reactions)");
    }
    return reactions_[r];
}

std::optional<SpeciesId> Network::find_species(std::string_view name) const
{
    for (const auto& s : species_) {
        if (s.name == name) {
            return s.id;
        }
    }
    return std::nullopt;
}

SpeciesId Network::species_id(std::string_view name) const
{
    if (auto id = find_species(name)) {
        return *id;
    }
    throw ParameterError("unknown species \"" + std::string(name) + "\"");
}

std::optional<ReactionIndex> Network::find_reaction(std::string_view label) const
{
    for (std::size_t r = 0; r < reactions_.size(); ++r) {
        if (reactions_[r].label == label) {
            return r;
        }
    }
    return std::nullopt;
}

ReactionIndex Network::reaction_index(std::string_view label) const
{
    if (auto r = find_reaction(label)) {
        return *r;
    }
    throw ParameterError("unknown reaction \"" + std::string(label) + "\"");
}

const std::vector<Integer>& Network::delta(ReactionIndex r) const
{
    reaction(r);
    return deltas_[r];
}

std::string encode_state(const State& state)
{
    std::string out;
    out.reserve(state.size() * 2);
    std::vector<unsigned char> bytes;
    for (const auto& c : state.counts()) {
        bytes.clear();
        if (c != 0) {
            export_bits(c, std::back_inserter(bytes), 8, true);
        }
        std::size_t len = bytes.size();
        do {
            unsigned char b = len & 0x7f;
            len >>= 7;
            if (len != 0) {
                b |= 0x80;
            }
            out.push_back(static_cast<char>(b));
        } while (len != 0);
        out.append(bytes.begin(), bytes.end());
    }
    return out;
}

State decode_state(std::string_view bytes, std::size_t species_count)
{
    std::vector<Count> counts(species_count);
    std::size_t pos = 0;
    auto truncated = [] { return ParameterError("truncated state encoding"); };
    for (auto& c : counts) {
        std::size_t len = 0;
        unsigned shift = 0;
        unsigned char b = 0;
        do {
            if (pos >= bytes.size() || shift > 56) {
                throw truncated();
            }
            b = static_cast<unsigned char>(bytes[pos++]);
            len |= static_cast<std::size_t>(b & 0x7f) << shift;
            shift += 7;
        } while (b & 0x80);
        if (len > bytes.size() - pos) {
            throw truncated();
        }
        if (len != 0) {
            const auto* first = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
            import_bits(c, first, first + len, 8, true);
        }
        pos += len;
    }
    if (pos != bytes.size()) {
        throw ParameterError("state encoding has trailing bytes");
    }
    return State(std::move(counts));
}

} // namespace crnv
