#include "crnv/ode.hpp"

#include "crnv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace crnv {

namespace {

struct Term {
    SpeciesId a, b, c, d;
    double rate;
};

class MassAction {
public:
    explicit MassAction(const Network& network) : dim_(network.species_count())
    {
        for (const auto& rx : network.reactions()) {
            terms_.push_back(Term{rx.reactants[0], rx.reactants[1], rx.products[0], rx.products[1],
                                  to_double(rx.rate)});
        }
    }

    std::size_t dim() const { return dim_; }

    void eval(std::span<const double> x, std::span<double> out) const
    {
        std::fill(out.begin(), out.end(), 0.0);
        for (const auto& t : terms_) {
            const double flux = t.rate * std::max(x[t.a], 0.0) * std::max(x[t.b], 0.0);
            out[t.a] -= flux;
            out[t.b] -= flux;
            out[t.c] += flux;
            out[t.d] += flux;
        }
    }

private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

double inf_norm(std::span<const double> v)
{
    double m = 0.0;
    for (double e : v) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

void check_concentrations(std::span<const double> x, double tol)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || x[i] < -tol) {
            throw ParameterError("concentration " + std::to_string(i) + " is negative or not finite");
        }
    }
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b*, the embedded 4th-order error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

std::vector<double> vector_field(const Network& network, std::span<const double> x, double negative_tolerance)
{
    if (x.size() != network.species_count()) {
        throw ParameterError("concentration vector does not match the network");
    }
    check_concentrations(x, negative_tolerance);
    MassAction sys(network);
    std::vector<double> out(x.size());
    sys.eval(x, out);
    return out;
}

std::vector<ConcentrationState> integrate(const Network& network, const ConcentrationState& x0,
                                          const OdeSettings& settings)
{
    if (x0.x.size() != network.species_count()) {
        throw ParameterError("initial concentrations do not match the network");
    }
    check_concentrations(x0.x, 0.0);
    if (!(settings.t_max >= x0.t) || !(settings.initial_step > 0) || !(settings.rel_tol > 0) ||
        !(settings.abs_tol > 0) || !(settings.stall_threshold > 0)) {
        throw ParameterError("invalid integration settings");
    }

    const MassAction sys(network);
    const std::size_t n = sys.dim();
    std::vector<ConcentrationState> samples{x0};

    std::vector<double> y = x0.x, y_new(n), tmp(n), err(n);
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    double t = x0.t;
    double h = settings.initial_step;
    sys.eval(y, k1);
    if (t >= settings.t_max || inf_norm(k1) < settings.stall_threshold) {
        return samples;
    }

    std::size_t steps = 0;
    while (t < settings.t_max) {
        if (++steps > settings.max_steps) {
            throw IntegrationError("step limit reached at t=" + std::to_string(t));
        }
        h = std::min(h, settings.t_max - t);
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            throw IntegrationError("step size underflow at t=" + std::to_string(t));
        }

        auto stage = [&](std::vector<double>& out, auto&& combine) {
            for (std::size_t i = 0; i < n; ++i) {
                tmp[i] = y[i] + h * combine(i);
            }
            sys.eval(tmp, out);
        };
        stage(k2, [&](std::size_t i) { return a21 * k1[i]; });
        stage(k3, [&](std::size_t i) { return a31 * k1[i] + a32 * k2[i]; });
        stage(k4, [&](std::size_t i) { return a41 * k1[i] + a42 * k2[i] + a43 * k3[i]; });
        stage(k5, [&](std::size_t i) { return a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]; });
        stage(k6, [&](std::size_t i) {
            return a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
        });
        for (std::size_t i = 0; i < n; ++i) {
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        }
        sys.eval(y_new, k7);

        double err_norm = 0.0;
        bool negative = false;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = settings.abs_tol + settings.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err_norm += (e / scale) * (e / scale);
            negative = negative || y_new[i] < -settings.abs_tol;
        }
        err_norm = std::sqrt(err_norm / static_cast<double>(n));

        if (negative || err_norm > 1.0) {
            const double factor = negative ? 0.5 : std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
            h *= factor;
            continue;
        }

        t += h;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = std::max(y_new[i], 0.0);
        }
        sys.eval(y, k1);
        samples.push_back(ConcentrationState{y, t});
        if (inf_norm(k1) < settings.stall_threshold) {
            break;
        }
        const double grow = err_norm == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err_norm, -0.2)));
        h *= grow;
    }
    return samples;
}

SteadyReport steady_report(const Network& network, const ConcentrationState& x0, const OdeSettings& settings)
{
    auto samples = integrate(network, x0, settings);
    SteadyReport out;
    out.final = samples.back();
    const auto field = vector_field(network, out.final.x);
    out.residual = inf_norm(field);
    out.stalled = out.residual < settings.stall_threshold && settings.t_max > x0.t;
    return out;
}

void write_trajectory_csv(std::ostream& out, const Network& network, const std::vector<ConcentrationState>& samples)
{
    out << 't';
    for (const auto& s : network.species()) {
        out << ',' << s.name;
    }
    out << '\n';
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& s : samples) {
        out << s.t;
        for (double v : s.x) {
            out << ',' << v;
        }
        out << '\n';
    }
    out.precision(old_precision);
}

} // namespace crnv
