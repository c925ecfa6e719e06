#pragma once

#include "crnv/invariants.hpp"
#include "crnv/network.hpp"
#include "crnv/sim.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace crnv::report {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);

/// "sha256:" + digest of the canonical network JSON (with an all-zero init),
/// so the fingerprint identifies the reactions and species only.
std::string network_digest(const Network& network);

/// Sparse state object: species name -> decimal string, zero counts omitted.
Json state_json(const Network& network, const State& state);

Json effect_report_json(const EffectReport& report);

Json script_json(const Network& network, const Script& script);

} // namespace crnv::report
