#pragma once

#include "brute.hpp"

#include "crnv/network.hpp"

#include <initializer_list>
#include <string>
#include <utility>

namespace testutil {

inline crnv::State state_of(const crnv::Network& net,
                            std::initializer_list<std::pair<const char*, long long>> counts)
{
    crnv::State s(net.species_count());
    for (const auto& [name, value] : counts) {
        s[net.species_id(name)] = value;
    }
    return s;
}

inline brute::Vec to_vec(const crnv::State& s)
{
    brute::Vec v;
    for (const auto& c : s.counts()) {
        v.push_back(static_cast<std::int64_t>(c));
    }
    return v;
}

inline crnv::State from_vec(const brute::Vec& v)
{
    std::vector<crnv::Count> c(v.begin(), v.end());
    return crnv::State(std::move(c));
}

} // namespace testutil
