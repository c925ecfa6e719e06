#include "crnv/errors.hpp"
#include "crnv/network.hpp"

namespace crnv {

namespace {

void check_family_params(unsigned m, unsigned n)
{
    if (m < 1 || n < 1) {
        throw ParameterError("m and n must be positive");
    }
    if (n <= m + 1) {
        throw ParameterError("parameters must satisfy n > m+1 (got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n) + ")");
    }
}

std::vector<std::string> family_species(unsigned n)
{
    std::vector<std::string> names;
    names.reserve(n + 3);
    for (unsigned i = 0; i <= n; ++i) {
        names.push_back("Z" + std::to_string(i));
    }
    names.push_back("B");
    names.push_back("R");
    return names;
}

std::vector<Reaction> family_reactions(unsigned m, unsigned n, bool with_omega)
{
    const SpeciesId b = n + 1;
    const SpeciesId r = n + 2;
    std::vector<Reaction> rxs;
    for (unsigned i = 0; i <= n; ++i) {
        Reaction z;
        z.reactants = {i, i};
        if (i < m) {
            z.products = {i + 1, b};
        } else if (i < n) {
            z.products = {i + 1, r};
        } else {
            z.products = {i, r};
        }
        z.label = "zeta_" + std::to_string(i);
        rxs.push_back(std::move(z));
    }
    rxs.push_back(Reaction{{b, r}, {r, r}, Rational(1), "chi"});
    if (with_omega) {
        rxs.push_back(Reaction{{r, n}, {b, n}, Rational(1), "omega"});
    }
    return rxs;
}

Network build_family(unsigned m, unsigned n, bool with_omega)
{
    check_family_params(m, n);
    return Network(family_species(n), family_reactions(m, n, with_omega), NetworkParams{m, n, std::nullopt});
}

} // namespace

Network build_n1(unsigned m, unsigned n)
{
    return build_family(m, n, false);
}

Network build_n2(unsigned m, unsigned n)
{
    return build_family(m, n, true);
}

State initial_state(const Network& network, const Count& p)
{
    auto z0 = network.find_species("Z0");
    if (!z0) {
        throw ParameterError("network has no species named Z0");
    }
    if (p < 0) {
        throw ParameterError("population must be nonnegative");
    }
    State s(network.species_count());
    s[*z0] = p;
    return s;
}

Count state_space_size(std::size_t species_count, const Count& population)
{
    if (species_count < 1) {
        throw ParameterError("species count must be at least 1");
    }
    if (population < 0) {
        throw ParameterError("population must be nonnegative");
    }
    // binomial(p + k, k) with k = s - 1, built incrementally; each partial
    // product is itself a binomial coefficient so the division is exact.
    const std::size_t k = species_count - 1;
    Count result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * (population + i) / i;
    }
    return result;
}

std::optional<FamilyLayout> family_layout(const Network& network)
{
    const auto& sp = network.species();
    if (sp.size() < 4) {
        return std::nullopt;
    }
    FamilyLayout layout;
    layout.n = static_cast<unsigned>(sp.size() - 3);
    for (unsigned i = 0; i <= layout.n; ++i) {
        auto id = network.find_species("Z" + std::to_string(i));
        if (!id) {
            return std::nullopt;
        }
        layout.z.push_back(*id);
    }
    auto b = network.find_species("B");
    auto r = network.find_species("R");
    if (!b || !r) {
        return std::nullopt;
    }
    layout.b = *b;
    layout.r = *r;
    return layout;
}

FamilyLayout require_family_layout(const Network& network)
{
    if (auto layout = family_layout(network)) {
        return *layout;
    }
    throw LayoutError("network does not have the Z0..Zn, B, R species layout");
}

std::optional<FamilyMatch> match_family(const Network& network)
{
    auto layout = family_layout(network);
    if (!layout) {
        return std::nullopt;
    }
    const unsigned n = layout->n;
    for (unsigned m = 1; m + 1 < n; ++m) {
        for (bool omega : {false, true}) {
            Network ref = build_family(m, n, omega);
            if (ref.reaction_count() != network.reaction_count()) {
                continue;
            }
            bool same = true;
            for (ReactionIndex i = 0; i < ref.reaction_count() && same; ++i) {
                const auto& a = ref.reaction(i);
                const auto& b = network.reaction(i);
                auto name = [](const Network& net, SpeciesId id) { return net.species()[id].name; };
                same = a.label == b.label;
                for (int j = 0; j < 2 && same; ++j) {
                    same = name(ref, a.reactants[j]) == name(network, b.reactants[j]) &&
                           name(ref, a.products[j]) == name(network, b.products[j]);
                }
            }
            if (same) {
                return FamilyMatch{m, n, omega};
            }
        }
    }
    return std::nullopt;
}

} // namespace crnv
