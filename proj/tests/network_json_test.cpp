#include <doctest.h>

#include "support/util.hpp"

#include "crnv/errors.hpp"
#include "crnv/network_json.hpp"

using namespace crnv;

TEST_SUITE("network_json") {

TEST_CASE("serialization is canonical and round-trips byte for byte")
{
    const Network net = build_n2(1, 3);
    const std::string text = serialize_network_json(net, initial_state(net, 12));
    CHECK(text.rfind("{\n  \"species\": [", 0) == 0);
    CHECK(text.find("\"label\": \"omega\"") != std::string::npos);
    CHECK(text.find("\"init\": {\n    \"Z0\": \"12\"\n  }") != std::string::npos);

    const NetworkDocument doc = parse_network_json(text);
    CHECK(doc.network.species_count() == 6);
    CHECK(doc.network.reaction_count() == 6);
    CHECK(doc.init == initial_state(net, 12));
    CHECK(serialize_network_json(doc) == text);

    const Network big = build_n1(34, 67);
    const std::string big_text = serialize_network_json(big, initial_state(big, pow2(80)));
    CHECK(big_text.find("\"1208925819614629174706176\"") != std::string::npos);
    CHECK(serialize_network_json(parse_network_json(big_text)) == big_text);
}

TEST_CASE("rates and labels have defaults and keep exact decimals")
{
    const auto doc = parse_network_json(R"({
        "species": ["A", "C"],
        "reactions": [{"reactants": ["A", "C"], "products": ["C", "C"]},
                      {"reactants": ["C", "C"], "products": ["A", "C"], "rate": "0.125", "label": "back"}]
    })");
    CHECK(doc.network.reaction(0).label == "r0");
    CHECK(doc.network.reaction(0).rate == 1);
    CHECK(doc.network.reaction(1).rate == Rational(1, 8));
    CHECK(doc.init == State(2));
    CHECK(serialize_network_json(doc).find("\"rate\": \"0.125\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected")
{
    const char* cases[] = {
        "[]",
        "{not json",
        R"({"species": ["A"]})",
        R"({"species": ["A"], "reactions": [], "extra": 1})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A"], "products": ["C", "C"]}]})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A", "C", "C"], "products": ["C", "C"]}]})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A", "X"], "products": ["C", "C"]}]})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A", "C"], "products": ["C", "C"], "k": 1}]})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A", "C"], "products": ["C", "C"], "rate": 1}]})",
        R"({"species": ["A", "C"], "reactions": [{"reactants": ["A", "C"], "products": ["C", "C"], "rate": "-1"}]})",
        R"({"species": ["A", "A"], "reactions": []})",
        R"({"species": ["A", "C"], "reactions": [], "init": {"A": 3}})",
        R"({"species": ["A", "C"], "reactions": [], "init": {"A": "-3"}})",
        R"({"species": ["A", "C"], "reactions": [], "init": {"Q": "3"}})",
    };
    for (const char* text : cases) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_network_json(text), SchemaError);
    }
}

} // TEST_SUITE
