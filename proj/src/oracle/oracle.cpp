#include "crnv/oracle.hpp"

#include "crnv/errors.hpp"

namespace crnv {

namespace {

void check_params(unsigned m, unsigned n)
{
    if (m < 1 || n <= m + 1) {
        throw ParameterError("parameters must satisfy m >= 1 and n > m+1 (got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n) + ")");
    }
}

void check_population(const Count& p)
{
    if (p < 1) {
        throw ParameterError("population must be at least 1");
    }
}

// Colorless part shared by both networks: low n bits of p, plus z_n.
TerminalPrediction colorless_part(unsigned n, const Count& p)
{
    TerminalPrediction out;
    out.z.assign(n + 1, Count(0));
    const Count low = p & (pow2(n) - 1);
    for (unsigned i = 0; i < n; ++i) {
        out.z[i] = bit_test(low, i) ? 1 : 0;
    }
    out.z[n] = p >= pow2(n) ? 1 : 0;
    out.b = 0;
    out.r = 0;
    return out;
}

} // namespace

State TerminalPrediction::to_state() const
{
    std::vector<Count> counts(z.begin(), z.end());
    counts.push_back(b);
    counts.push_back(r);
    return State(std::move(counts));
}

std::string_view to_string(PhaseTag tag)
{
    switch (tag) {
    case PhaseTag::LowerBlue:
        return "LowerBlue";
    case PhaseTag::Red:
        return "Red";
    case PhaseTag::UpperBlue:
        return "UpperBlue";
    }
    return "?";
}

unsigned popcount_nbits(const Count& x, unsigned n)
{
    if (x < 0 || x >= pow2(n)) {
        throw ParameterError("popcount argument " + x.str() + " is outside [0, 2^" + std::to_string(n) + ")");
    }
    unsigned ones = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (bit_test(x, i)) {
            ++ones;
        }
    }
    return ones;
}

Count epsilon(const Count& p, unsigned n)
{
    if (p < 0) {
        throw ParameterError("population must be nonnegative");
    }
    const Count top = pow2(n);
    if (p < top) {
        return popcount_nbits(p, n);
    }
    return 1 + popcount_nbits(p & (top - 1), n);
}

Count red_threshold(unsigned m)
{
    return pow2(m + 1);
}

TerminalPrediction predict_n1(unsigned m, unsigned n, const Count& p)
{
    check_params(m, n);
    check_population(p);
    TerminalPrediction out = colorless_part(n, p);
    const Count rest = p - epsilon(p, n);
    if (p >= red_threshold(m)) {
        out.r = rest;
    } else {
        out.b = rest;
    }
    return out;
}

TerminalPrediction predict_n2(unsigned m, unsigned n, const Count& p)
{
    check_params(m, n);
    check_population(p);
    TerminalPrediction out = colorless_part(n, p);
    const Count rest = p - epsilon(p, n);
    if (p >= red_threshold(m) && p < pow2(n)) {
        out.r = rest;
    } else {
        out.b = rest;
    }
    return out;
}

PhaseRegion classify_phase(unsigned m, unsigned n, const Count& p)
{
    check_params(m, n);
    if (p < 0) {
        throw ParameterError("population must be nonnegative");
    }
    PhaseRegion region;
    region.lower_threshold = red_threshold(m);
    region.upper_threshold = pow2(n);
    if (p < region.lower_threshold) {
        region.tag = PhaseTag::LowerBlue;
    } else if (p < region.upper_threshold) {
        region.tag = PhaseTag::Red;
    } else {
        region.tag = PhaseTag::UpperBlue;
    }
    return region;
}

} // namespace crnv
