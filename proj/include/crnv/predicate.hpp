#pragma once

#include "crnv/network.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crnv {

/// Conjunction of single-species comparisons, e.g. "r=0", "b>=97",
/// "z6 = 1 && r == 0". Species names match case-insensitively, so the
/// lower-case count convention works directly. Operators: = == != < <= > >=.
class Predicate {
public:
    enum class Op { Eq, Ne, Lt, Le, Gt, Ge };

    struct Comparison {
        SpeciesId species = 0;
        Op op = Op::Eq;
        Count value;
    };

    /// Throws SchemaError on syntax errors or unknown species.
    static Predicate parse(const Network& network, std::string_view text);

    bool operator()(const State& state) const;

    const std::string& text() const noexcept { return text_; }
    const std::vector<Comparison>& terms() const noexcept { return terms_; }

private:
    std::string text_;
    std::vector<Comparison> terms_;
};

} // namespace crnv
