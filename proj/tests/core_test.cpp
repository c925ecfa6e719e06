#include <doctest.h>

#include "support/brute.hpp"
#include "support/util.hpp"

#include "crnv/errors.hpp"
#include "crnv/network.hpp"

#include <random>

using namespace crnv;
using testutil::state_of;

TEST_SUITE("core") {

TEST_CASE("counts parse and print exactly")
{
    CHECK(parse_count("0") == 0);
    CHECK(to_decimal(parse_count("147573952589676412928")) == "147573952589676412928");
    CHECK(pow2(67) == parse_count("147573952589676412928"));
    CHECK_THROWS_AS(parse_count(""), SchemaError);
    CHECK_THROWS_AS(parse_count("-1"), SchemaError);
    CHECK_THROWS_AS(parse_count("1e3"), SchemaError);
    CHECK(parse_rate("0.5") == Rational(1, 2));
    CHECK(format_rate(parse_rate("2.50")) == "2.5");
    CHECK(format_rate(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rate("0"), SchemaError);
    CHECK_THROWS_AS(format_rate(Rational(1, 3)), ParameterError);
}

TEST_CASE("enabled respects reactant multiplicity")
{
    const Network n1 = build_n1(1, 3);
    const Network n2 = build_n2(1, 3);
    const auto zeta0 = n1.reaction_index("zeta_0");
    CHECK(enabled(n1, state_of(n1, {{"Z0", 2}}), zeta0));
    CHECK_FALSE(enabled(n1, state_of(n1, {{"Z0", 1}}), zeta0));
    CHECK(enabled(n2, state_of(n2, {{"R", 1}, {"Z3", 1}}), n2.reaction_index("omega")));
    CHECK_THROWS_AS(enabled(n1, State(6), 5), IndexError);
}

TEST_CASE("apply follows the reaction table")
{
    const Network n1 = build_n1(1, 3);
    CHECK(apply(n1, state_of(n1, {{"Z0", 4}}), n1.reaction_index("zeta_0")) ==
          state_of(n1, {{"Z0", 2}, {"Z1", 1}, {"B", 1}}));
    CHECK(apply(n1, state_of(n1, {{"B", 1}, {"R", 1}}), n1.reaction_index("chi")) == state_of(n1, {{"R", 2}}));

    const Network n2 = build_n2(1, 3);
    CHECK(apply(n2, state_of(n2, {{"R", 1}, {"Z3", 1}}), n2.reaction_index("omega")) ==
          state_of(n2, {{"B", 1}, {"Z3", 1}}));

    CHECK_THROWS_AS(apply(n1, state_of(n1, {{"Z0", 1}}), 0), DisabledReactionError);
    CHECK_THROWS_AS(apply(n1, State(3), 0), ParameterError);
}

TEST_CASE("apply_many and max_batch")
{
    const unsigned n = 5;
    const Network net = build_n1(2, n);
    const State start = state_of(net, {{"Z0", 32}});
    const auto zeta0 = net.reaction_index("zeta_0");
    CHECK(apply_many(net, start, zeta0, 16) == state_of(net, {{"Z1", 16}, {"B", 16}}));
    CHECK(apply_many(net, start, zeta0, 0) == start);

    const auto chi = net.reaction_index("chi");
    CHECK(apply_many(net, state_of(net, {{"B", 5}, {"R", 1}}), chi, 2) == state_of(net, {{"B", 3}, {"R", 3}}));

    CHECK(max_batch(net, state_of(net, {{"Z0", 7}}), zeta0) == 3);
    CHECK(max_batch(net, state_of(net, {{"Z5", 5}}), net.reaction_index("zeta_5")) == 4);
    CHECK(max_batch(net, state_of(net, {{"R", 4}}), chi) == 0);
    CHECK(max_batch(net, state_of(net, {{"B", 5}, {"R", 1}}), chi) == 5);

    CHECK_THROWS_AS(apply_many(net, start, zeta0, 17), BatchTooLargeError);
    CHECK_THROWS_AS(apply_many(net, start, zeta0, -1), BatchTooLargeError);
}

TEST_CASE("enabled_reactions and is_terminal")
{
    const Network n1 = build_n1(1, 3);
    const Network n2 = build_n2(1, 3);
    CHECK(enabled_reactions(n1, state_of(n1, {{"Z1", 1}, {"Z2", 1}, {"R", 4}})).empty());
    CHECK(enabled_reactions(n1, state_of(n1, {{"Z0", 9}})) == std::vector<ReactionIndex>{0});
    CHECK(enabled_reactions(n2, state_of(n2, {{"B", 2}, {"R", 1}, {"Z3", 1}})) ==
          std::vector<ReactionIndex>{n2.reaction_index("chi"), n2.reaction_index("omega")});

    CHECK(is_terminal(n1, state_of(n1, {{"Z0", 1}})));
    CHECK_FALSE(is_terminal(n1, state_of(n1, {{"Z0", 2}})));

    const Network big = build_n2(34, 67);
    CHECK(is_terminal(big, state_of(big, {{"Z2", 1}, {"Z5", 1}, {"Z6", 1}, {"B", 97}})));
}

TEST_CASE("family builders")
{
    const Network a = build_n1(1, 3);
    CHECK(a.species_count() == 6);
    CHECK(a.reaction_count() == 5);
    const Network b = build_n1(34, 67);
    CHECK(b.species_count() == 70);
    CHECK(b.reaction_count() == 69);
    CHECK_THROWS_AS(build_n1(2, 3), ParameterError);
    CHECK_THROWS_AS(build_n1(0, 3), ParameterError);

    const Network c = build_n2(1, 3);
    CHECK(c.species_count() == 6);
    CHECK(c.reaction_count() == 6);
    CHECK(build_n2(34, 67).reaction_count() == 70);

    int omegas = 0;
    for (const auto& rx : c.reactions()) {
        if (rx.label == "omega") {
            ++omegas;
            std::multiset<SpeciesId> in(rx.reactants.begin(), rx.reactants.end());
            CHECK(in == std::multiset<SpeciesId>{c.species_id("Z3"), c.species_id("R")});
        }
    }
    CHECK(omegas == 1);

    // The builder must agree with the hand-written table, rule for rule.
    for (auto [m, n] : {std::pair{1, 3}, {1, 4}, {2, 4}, {3, 7}}) {
        for (bool omega : {false, true}) {
            const Network net = omega ? build_n2(m, n) : build_n1(m, n);
            const auto rules = brute::family_rules(m, n, omega);
            REQUIRE(rules.size() == net.reaction_count());
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const auto& rx = net.reaction(i);
                CHECK(std::multiset<SpeciesId>(rx.reactants.begin(), rx.reactants.end()) ==
                      std::multiset<SpeciesId>{SpeciesId(rules[i].a), SpeciesId(rules[i].b)});
                CHECK(std::multiset<SpeciesId>(rx.products.begin(), rx.products.end()) ==
                      std::multiset<SpeciesId>{SpeciesId(rules[i].c), SpeciesId(rules[i].d)});
                CHECK(rx.rate == 1);
            }
        }
    }
}

TEST_CASE("initial_state")
{
    const Network net = build_n2(34, 67);
    const State s = initial_state(net, 100);
    CHECK(s[net.species_id("Z0")] == 100);
    CHECK(s.total() == 100);
    CHECK(is_terminal(net, initial_state(net, 0)));
    CHECK(initial_state(net, pow2(67))[0] == pow2(67));

    const Network foreign({"A", "C"}, {Reaction{{0, 1}, {1, 1}, 1, "r0"}});
    CHECK_THROWS_AS(initial_state(foreign, 3), ParameterError);
}

TEST_CASE("state_space_size matches enumeration")
{
    CHECK(state_space_size(2, 3) == 4);
    CHECK(state_space_size(1, 5) == 1);
    CHECK(state_space_size(3, 2) == 6);
    for (int s = 1; s <= 5; ++s) {
        for (int p = 0; p <= 10; ++p) {
            CHECK(state_space_size(s, p) == brute::simplex_points(s, p));
        }
    }
    CHECK_THROWS_AS(state_space_size(0, 1), ParameterError);
}

TEST_CASE("network construction validates its input")
{
    CHECK_THROWS_AS(Network({"A", "A"}, {}), ParameterError);
    CHECK_THROWS_AS(Network({"A", ""}, {}), ParameterError);
    CHECK_THROWS_AS(Network({"A", "C"}, {Reaction{{0, 2}, {1, 1}, 1, "x"}}), ParameterError);
    CHECK_THROWS_AS(Network({"A", "C"}, {Reaction{{0, 1}, {1, 1}, 0, "x"}}), ParameterError);
    CHECK_THROWS_AS(Network({"A", "C"}, {Reaction{{0, 1}, {0, 1}, 1, "x"}}), ParameterError);
    CHECK_THROWS_AS(Network({"A", "C"}, {Reaction{{0, 1}, {1, 1}, 1, "x"}, Reaction{{0, 0}, {1, 1}, 1, "x"}}),
                    ParameterError);
}

TEST_CASE("family layout detection")
{
    const Network n2 = build_n2(2, 5);
    auto fam = match_family(n2);
    REQUIRE(fam);
    CHECK(fam->m == 2);
    CHECK(fam->n == 5);
    CHECK(fam->omega);
    CHECK(require_family_layout(n2).z.size() == 6);
    CHECK_FALSE(match_family(Network({"A", "C"}, {Reaction{{0, 1}, {1, 1}, 1, "r0"}})));
    CHECK_THROWS_AS(require_family_layout(Network({"A"}, {})), LayoutError);
}

TEST_CASE("state encoding is injective on small states")
{
    std::set<std::string> seen;
    for (int a = 0; a < 300; a += 7) {
        for (int b = 0; b < 300; b += 11) {
            CHECK(seen.insert(encode_state(State(std::vector<Count>{a, b}))).second);
        }
    }
    CHECK(encode_state(State(std::vector<Count>{pow2(64), 0})) !=
          encode_state(State(std::vector<Count>{0, pow2(64)})));

    const State wide(std::vector<Count>{0, 1, 127, 128, 255, 256, pow2(67), pow2(2000) - 1});
    CHECK(decode_state(encode_state(wide), wide.size()) == wide);
    CHECK_THROWS_AS(decode_state(encode_state(wide), wide.size() + 1), ParameterError);
    CHECK_THROWS_AS(decode_state(encode_state(wide), wide.size() - 1), ParameterError);
}

TEST_CASE("semantics agree with a hand-applied rewrite")
{
    std::mt19937_64 rng(7);
    for (auto [m, n] : {std::pair{1, 3}, {2, 4}, {2, 5}}) {
        const Network net = build_n2(m, n);
        const auto rules = brute::family_rules(m, n, true);
        for (int trial = 0; trial < 300; ++trial) {
            brute::Vec v(net.species_count());
            for (auto& c : v) {
                c = static_cast<std::int64_t>(rng() % 4);
            }
            const State s = testutil::from_vec(v);
            for (ReactionIndex r = 0; r < net.reaction_count(); ++r) {
                brute::Vec w = v;
                const bool ok = brute::fire(w, rules[r]);
                REQUIRE(enabled(net, s, r) == ok);
                if (ok) {
                    const State t = apply(net, s, r);
                    CHECK(testutil::to_vec(t) == w);
                    CHECK(t.total() == s.total());
                }
            }
        }
    }
}

TEST_CASE("enabling is monotone in counts")
{
    std::mt19937_64 rng(11);
    const Network net = build_n2(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        State s(net.species_count());
        for (SpeciesId i = 0; i < s.size(); ++i) {
            s[i] = static_cast<long long>(rng() % 3);
        }
        State bigger = s;
        bigger[rng() % s.size()] += 1 + static_cast<long long>(rng() % 3);
        for (ReactionIndex r = 0; r < net.reaction_count(); ++r) {
            if (enabled(net, s, r)) {
                CHECK(enabled(net, bigger, r));
            }
        }
    }
}

TEST_CASE("apply_many equals repeated apply up to max_batch")
{
    std::mt19937_64 rng(3);
    const Network net = build_n2(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        State s(net.species_count());
        for (SpeciesId i = 0; i < s.size(); ++i) {
            s[i] = static_cast<long long>(rng() % 9);
        }
        for (ReactionIndex r = 0; r < net.reaction_count(); ++r) {
            const Count limit = max_batch(net, s, r);
            State stepped = s;
            for (Count k = 0; k <= limit; ++k) {
                CHECK(apply_many(net, s, r, k) == stepped);
                if (k < limit) {
                    REQUIRE(enabled(net, stepped, r));
                    stepped = apply(net, stepped, r);
                }
            }
            CHECK_FALSE(enabled(net, stepped, r));
        }
    }
}

} // TEST_SUITE
