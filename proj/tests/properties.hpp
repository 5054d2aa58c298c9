#pragma once

// Randomized property checks shared by the unit suite and the acceptance
// runner. Each returns the number of failing cases out of `cases`.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
    std::string name;
    int cases = 0;
    int failures = 0;
};

Outcome field_sensitivity(int cases, std::uint64_t seed);
Outcome kunneth(int cases, std::uint64_t seed);
Outcome collapse_invariance(int cases, std::uint64_t seed);
Outcome euler_characteristic(int cases, std::uint64_t seed);
Outcome iso_invariance(int cases, std::uint64_t seed);
Outcome alexander_duality(int cases, std::uint64_t seed);

std::vector<Outcome> all(int cases, std::uint64_t seed);

}  // namespace props
