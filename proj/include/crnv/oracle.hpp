#pragma once

#include "crnv/network.hpp"

#include <string_view>
#include <vector>

namespace crnv {

/// Closed-form terminal state of N1/N2 started from Z0 = p.
struct TerminalPrediction {
    std::vector<Count> z;  ///< z_0..z_n, each 0 or 1
    Count b;
    Count r;

    /// Count vector in build_n1/build_n2 species order (Z0..Zn, B, R).
    State to_state() const;
};

enum class PhaseTag { LowerBlue, Red, UpperBlue };

std::string_view to_string(PhaseTag tag);

/// Region of p relative to the two thresholds. Red covers
/// [lower_threshold, upper_threshold).
struct PhaseRegion {
    PhaseTag tag = PhaseTag::LowerBlue;
    Count lower_threshold;
    Count upper_threshold;
};

/// Number of set bits of x; requires 0 <= x < 2^n.
unsigned popcount_nbits(const Count& x, unsigned n);

/// Residue of colorless molecules at termination:
/// popcount(p) if p < 2^n, otherwise 1 + popcount(p mod 2^n).
Count epsilon(const Count& p, unsigned n);

/// The lowest population that turns N1 red. A red molecule first appears
/// when zeta_m fires, which needs z_m >= 2 and therefore p >= 2^(m+1).
Count red_threshold(unsigned m);

TerminalPrediction predict_n1(unsigned m, unsigned n, const Count& p);

TerminalPrediction predict_n2(unsigned m, unsigned n, const Count& p);

PhaseRegion classify_phase(unsigned m, unsigned n, const Count& p);

} // namespace crnv
