#include "crnv/report.hpp"

#include "crnv/network_json.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace crnv::report {

std::string sha256_hex(std::string_view bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string network_digest(const Network& network)
{
    return "sha256:" + sha256_hex(serialize_network_json(network, State(network.species_count())));
}

Json state_json(const Network& network, const State& state)
{
    Json obj = Json::object();
    for (const auto& s : network.species()) {
        if (state[s.id] != 0) {
            obj[s.name] = to_decimal(state[s.id]);
        }
    }
    return obj;
}

Json effect_report_json(const EffectReport& report)
{
    Json arr = Json::array();
    for (const auto& e : report.entries) {
        Json j = Json::object();
        j["reaction"] = e.label;
        j["delta_value"] = to_decimal(e.delta_value);
        if (e.residue) {
            j["residue"] = to_decimal(*e.residue);
        }
        j["effect"] = std::string(to_string(e.effect));
        arr.push_back(std::move(j));
    }
    return arr;
}

Json script_json(const Network& network, const Script& script)
{
    Json arr = Json::array();
    for (const auto& e : script) {
        arr.push_back(Json::array({network.reaction(e.reaction).label, to_decimal(e.repetitions)}));
    }
    return arr;
}

} // namespace crnv::report
