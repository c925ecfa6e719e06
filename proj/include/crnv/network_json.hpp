#pragma once

#include "crnv/network.hpp"

#include <string>
#include <string_view>

namespace crnv {

/// A network together with the initial state stored alongside it.
struct NetworkDocument {
    Network network;
    State init;
};

/// Parses the interchange format:
///
///   {"species": ["Z0", ...],
///    "reactions": [{"reactants": ["Z0","Z0"], "products": ["Z1","B"],
///                   "rate": "1", "label": "zeta_0"}, ...],
///    "init": {"Z0": "100"}}
///
/// Counts and rates are decimal strings. "init" may be omitted (all zero);
/// "rate" defaults to "1". Unknown keys are rejected with SchemaError.
NetworkDocument parse_network_json(std::string_view text);

/// Canonical rendering: keys in the order species, reactions, init; reaction
/// keys in the order reactants, products, rate, label; init lists nonzero
/// counts in species order; two-space indentation and a trailing newline.
/// parse_network_json followed by serialize_network_json is a fixed point.
std::string serialize_network_json(const Network& network, const State& init);

std::string serialize_network_json(const NetworkDocument& doc);

} // namespace crnv
