#include "crnv/network_json.hpp"

#include "crnv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace crnv {

using ordered_json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where)
{
    std::set<std::string_view> ok(allowed);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!ok.count(it.key())) {
            throw SchemaError("unknown key \"" + it.key() + "\" in " + where);
        }
    }
}

const std::string& as_string(const ordered_json& v, const std::string& where)
{
    if (!v.is_string()) {
        throw SchemaError(where + " must be a string");
    }
    return v.get_ref<const std::string&>();
}

std::array<SpeciesId, 2> species_pair(const ordered_json& v, const std::vector<std::string>& names,
                                      const std::string& where)
{
    if (!v.is_array() || v.size() != 2) {
        throw SchemaError(where + " must be an array of exactly two species names");
    }
    std::array<SpeciesId, 2> out{};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& name = as_string(v[i], where);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            throw SchemaError(where + " references unknown species \"" + name + "\"");
        }
        out[i] = static_cast<SpeciesId>(it - names.begin());
    }
    return out;
}

} // namespace

NetworkDocument parse_network_json(std::string_view text)
{
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw SchemaError("network document must be a JSON object");
    }
    reject_unknown_keys(root, {"species", "reactions", "init"}, "network document");
    if (!root.contains("species") || !root.contains("reactions")) {
        throw SchemaError("network document requires \"species\" and \"reactions\"");
    }

    const auto& jspecies = root["species"];
    if (!jspecies.is_array()) {
        throw SchemaError("\"species\" must be an array");
    }
    std::vector<std::string> names;
    for (const auto& s : jspecies) {
        names.push_back(as_string(s, "species entry"));
    }

    const auto& jreactions = root["reactions"];
    if (!jreactions.is_array()) {
        throw SchemaError("\"reactions\" must be an array");
    }
    std::vector<Reaction> reactions;
    for (std::size_t i = 0; i < jreactions.size(); ++i) {
        const auto& jr = jreactions[i];
        const std::string where = "reaction " + std::to_string(i);
        if (!jr.is_object()) {
            throw SchemaError(where + " must be an object");
        }
        reject_unknown_keys(jr, {"reactants", "products", "rate", "label"}, where);
        if (!jr.contains("reactants") || !jr.contains("products")) {
            throw SchemaError(where + " requires \"reactants\" and \"products\"");
        }
        Reaction rx;
        rx.reactants = species_pair(jr["reactants"], names, where + " reactants");
        rx.products = species_pair(jr["products"], names, where + " products");
        rx.rate = jr.contains("rate") ? parse_rate(as_string(jr["rate"], where + " rate")) : Rational(1);
        rx.label = jr.contains("label") ? as_string(jr["label"], where + " label") : "r" + std::to_string(i);
        reactions.push_back(std::move(rx));
    }

    Network network = [&] {
        try {
            return Network(names, std::move(reactions));
        } catch (const ParameterError& e) {
            throw SchemaError(e.what());
        }
    }();
    State init(network.species_count());
    if (root.contains("init")) {
        const auto& jinit = root["init"];
        if (!jinit.is_object()) {
            throw SchemaError("\"init\" must be an object");
        }
        for (auto it = jinit.begin(); it != jinit.end(); ++it) {
            auto id = network.find_species(it.key());
            if (!id) {
                throw SchemaError("\"init\" references unknown species \"" + it.key() + "\"");
            }
            init[*id] = parse_count(as_string(it.value(), "init count"));
        }
    }
    return NetworkDocument{std::move(network), std::move(init)};
}

std::string serialize_network_json(const Network& network, const State& init)
{
    if (init.size() != network.species_count()) {
        throw ParameterError("initial state does not match the network");
    }
    auto name = [&](SpeciesId id) { return network.species()[id].name; };
    ordered_json root = ordered_json::object();
    ordered_json species = ordered_json::array();
    for (const auto& s : network.species()) {
        species.push_back(s.name);
    }
    root["species"] = std::move(species);
    ordered_json reactions = ordered_json::array();
    for (const auto& rx : network.reactions()) {
        ordered_json jr = ordered_json::object();
        jr["reactants"] = {name(rx.reactants[0]), name(rx.reactants[1])};
        jr["products"] = {name(rx.products[0]), name(rx.products[1])};
        jr["rate"] = format_rate(rx.rate);
        jr["label"] = rx.label;
        reactions.push_back(std::move(jr));
    }
    root["reactions"] = std::move(reactions);
    ordered_json jinit = ordered_json::object();
    for (const auto& s : network.species()) {
        if (init[s.id] != 0) {
            jinit[s.name] = to_decimal(init[s.id]);
        }
    }
    root["init"] = std::move(jinit);
    return root.dump(2) + "\n";
}

std::string serialize_network_json(const NetworkDocument& doc)
{
    return serialize_network_json(doc.network, doc.init);
}

} // namespace crnv
