#include <doctest.h>

#include "crnv/errors.hpp"
#include "crnv/network.hpp"
#include "crnv/ode.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

using namespace crnv;

namespace {

// dx/dt of N2(1,3) written out term by term, species order Z0 Z1 Z2 Z3 B R.
std::vector<double> hand_field_n2_1_3(const std::vector<double>& x)
{
    const double z0 = x[0], z1 = x[1], z2 = x[2], z3 = x[3], b = x[4], r = x[5];
    const double f0 = z0 * z0, f1 = z1 * z1, f2 = z2 * z2, f3 = z3 * z3;
    const double chi = b * r, omega = r * z3;
    return {-2 * f0, f0 - 2 * f1, f1 - 2 * f2, f2 - f3, f0 - chi + omega, f1 + f2 + f3 + chi - omega};
}

double mass(const std::vector<double>& x)
{
    return std::accumulate(x.begin(), x.end(), 0.0);
}

std::vector<double> unit_z0(const Network& net)
{
    std::vector<double> x(net.species_count(), 0.0);
    x[net.species_id("Z0")] = 1.0;
    return x;
}

} // namespace

TEST_SUITE("ode") {

TEST_CASE("vector field examples")
{
    const Network chi_only({"B", "R"}, {Reaction{{0, 1}, {1, 1}, 1, "chi"}});
    const auto f = vector_field(chi_only, std::vector<double>{0.5, 0.5});
    CHECK(f[0] == doctest::Approx(-0.25));
    CHECK(f[1] == doctest::Approx(0.25));

    const Network net = build_n2(2, 4);
    for (double v : vector_field(net, std::vector<double>(net.species_count(), 0.0))) {
        CHECK(v == 0.0);
    }
    CHECK_THROWS_AS(vector_field(net, std::vector<double>(net.species_count(), -1.0)), ParameterError);
    CHECK_THROWS_AS(vector_field(net, std::vector<double>(2, 0.0)), ParameterError);
    CHECK_NOTHROW(vector_field(net, std::vector<double>(net.species_count(), -1e-12), 1e-9));

    // Rates scale the flux; a doubled reactant contributes rate * x^2.
    const Network doubled({"A", "C"}, {Reaction{{0, 0}, {0, 1}, Rational(3), "d"}});
    const auto g = vector_field(doubled, std::vector<double>{2.0, 0.0});
    CHECK(g[0] == doctest::Approx(-12.0));
    CHECK(g[1] == doctest::Approx(12.0));
}

TEST_CASE("field matches the hand-written equations and sums to zero")
{
    const Network net = build_n2(1, 3);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x(6);
        for (auto& v : x) {
            v = u(rng);
        }
        const auto got = vector_field(net, x);
        const auto want = hand_field_n2_1_3(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(std::abs(got[i] - want[i]) <= 1e-8 * std::max(1.0, std::abs(want[i])));
        }
        CHECK(std::abs(mass(got)) < 1e-12);

        // A short integration step agrees with the field to first order.
        OdeSettings s;
        s.t_max = 1e-6;
        s.initial_step = 1e-6;
        const auto samples = integrate(net, ConcentrationState{x, 0.0}, s);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double fd = (samples.back().x[i] - x[i]) / samples.back().t;
            CHECK(std::abs(fd - want[i]) <= 1e-4 * std::max(1.0, std::abs(want[i])));
        }
    }
}

TEST_CASE("trivial integrations")
{
    const Network net = build_n2(2, 4);
    const auto zeros = integrate(net, ConcentrationState{std::vector<double>(net.species_count(), 0.0), 0.0});
    REQUIRE(zeros.size() == 1);
    CHECK(mass(zeros.front().x) == 0.0);

    OdeSettings none;
    none.t_max = 0.0;
    const auto x0 = unit_z0(net);
    const auto still = integrate(net, ConcentrationState{x0, 0.0}, none);
    REQUIRE(still.size() == 1);
    CHECK(still.front().x == x0);
    const auto rep = steady_report(net, ConcentrationState{x0, 0.0}, none);
    CHECK_FALSE(rep.stalled);
    CHECK(rep.final.x == x0);

    OdeSettings bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate(net, ConcentrationState{x0, 0.0}, bad), ParameterError);
    auto negative = x0;
    negative[1] = -0.5;
    CHECK_THROWS_AS(integrate(net, ConcentrationState{negative, 0.0}), ParameterError);

    OdeSettings tiny;
    tiny.max_steps = 3;
    CHECK_THROWS_AS(integrate(net, ConcentrationState{x0, 0.0}, tiny), IntegrationError);
}

TEST_CASE("N1(2,4) from Z0=1 settles on R")
{
    const Network net = build_n1(2, 4);
    OdeSettings s;
    s.t_max = 1e7;
    const auto rep = steady_report(net, ConcentrationState{unit_z0(net), 0.0}, s);
    CHECK(rep.stalled);
    CHECK(rep.residual < s.stall_threshold);
    CHECK(rep.final.x[net.species_id("R")] > 0.99);
    CHECK(rep.final.x[net.species_id("B")] < 1e-6);
}

TEST_CASE("N2(2,4) from Z0=1 under default settings")
{
    const Network net = build_n2(2, 4);
    const auto samples = integrate(net, ConcentrationState{unit_z0(net), 0.0});
    for (const auto& s : samples) {
        CHECK(std::abs(mass(s.x) - 1.0) < 1e-9);
        for (double v : s.x) {
            CHECK(v >= 0.0);
        }
    }
    const auto& last = samples.back().x;
    CHECK(samples.back().t == doctest::Approx(1e4));
    // The mass-action limit ends with R holding nearly everything: Z4 decays
    // through zeta_4, and with it the omega flux that could recolour R as B.
    CHECK(last[net.species_id("R")] > 0.99);
    CHECK(last[net.species_id("B")] < 1e-3);

    OdeSettings half;
    half.rel_tol /= 2;
    half.abs_tol /= 2;
    const auto refined = integrate(net, ConcentrationState{unit_z0(net), 0.0}, half).back().x;
    double diff = 0.0;
    for (std::size_t i = 0; i < last.size(); ++i) {
        diff = std::max(diff, std::abs(refined[i] - last[i]));
    }
    CHECK(diff < 1e-6);
}

TEST_CASE("trajectory CSV")
{
    const Network net({"B", "R"}, {Reaction{{0, 1}, {1, 1}, 1, "chi"}});
    std::ostringstream out;
    write_trajectory_csv(out, net, {ConcentrationState{{0.5, 0.5}, 0.0}, ConcentrationState{{0.25, 0.75}, 1.5}});
    std::istringstream in(out.str());
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    CHECK(header == "t,B,R");
    CHECK(row0.rfind("0,0.5,0.5", 0) == 0);
    CHECK(row1.rfind("1.5,0.25,0.75", 0) == 0);
}

} // TEST_SUITE
