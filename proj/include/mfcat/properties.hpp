#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mfcat {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;  // case index and a short description
    long runtime_ms = 0;
};

// Randomised algebraic properties of the core layer, `cases` draws each.
// Objects are permutation-type factorisations over the given d values, used in turn.
std::vector<PropertyResult> run_properties(std::uint64_t seed, int cases = 1000, std::vector<int> ds = {3, 4, 5});

// Seed used by the "properties" check; the CLI sets it from --seed.
std::uint64_t property_seed();
void set_property_seed(std::uint64_t seed);

}  // namespace mfcat
