#pragma once

#include "crnv/network.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace crnv {

struct ConcentrationState {
    std::vector<double> x;
    double t = 0.0;
};

struct OdeSettings {
    double t_max = 1e4;
    double initial_step = 1e-3;
    double rel_tol = 1e-6;
    double abs_tol = 1e-9;
    /// Integration stops early once ||dx/dt||_inf drops below this.
    double stall_threshold = 1e-10;
    std::size_t max_steps = 10'000'000;
};

/// Deterministic mass-action field: sum over reactions of delta * flux with
/// flux = rate*x_A*x_B, or rate*x_A^2 for a doubled reactant (no 1/2 factor).
/// Entries below -negative_tolerance raise ParameterError; entries in
/// [-negative_tolerance, 0) are treated as 0.
std::vector<double> vector_field(const Network& network, std::span<const double> x,
                                 double negative_tolerance = 0.0);

/// Adaptive Dormand-Prince 5(4) integration from x0.t to settings.t_max,
/// returning x0 and every accepted step. Stops early when the field norm
/// falls below settings.stall_threshold. Steps that would push a
/// concentration below -abs_tol are rejected; smaller excursions are
/// clamped to 0.
/// Throws IntegrationError on step-size underflow or when max_steps is hit.
std::vector<ConcentrationState> integrate(const Network& network, const ConcentrationState& x0,
                                          const OdeSettings& settings = {});

struct SteadyReport {
    ConcentrationState final;
    bool stalled = false;
    double residual = 0.0;  ///< ||dx/dt||_inf at the final sample
};

SteadyReport steady_report(const Network& network, const ConcentrationState& x0,
                           const OdeSettings& settings = {});

/// "t,<species...>" then one row per sample.
void write_trajectory_csv(std::ostream& out, const Network& network,
                          const std::vector<ConcentrationState>& samples);

} // namespace crnv
