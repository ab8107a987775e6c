#ifndef DLMP_RELIABILITY_HPP
#define DLMP_RELIABILITY_HPP

#include <cstdint>
#include <vector>

#include "dlmp/network.hpp"

namespace dlmp {

constexpr int default_sigma_guard = 25;

struct ReliabilityReport {
    double value = 0.0;          // probability in [0,1]
    std::int64_t term_count = 0; // inclusion-exclusion terms evaluated
    int dlmp_count = 0;
};

// P(X >= z) where z is the componentwise maximum of the floors: the product
// of per-arc tail probabilities (arc capacities are independent).
// Every arc must carry a pmf.
double upper_set_probability(const std::vector<StateVector>& floors, const Network& net);

// Exact inclusion-exclusion over the upper sets of the given minimal vectors.
// Refuses more than `sigma_guard` vectors (2^sigma terms) with a guard_error.
ReliabilityReport reliability_from_dlmps(const std::vector<StateVector>& dlmps,
                                         const Network& net,
                                         int sigma_guard = default_sigma_guard);

} // namespace dlmp

#endif
