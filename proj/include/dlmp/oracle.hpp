#ifndef DLMP_ORACLE_HPP
#define DLMP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dlmp/network.hpp"
#include "dlmp/paths.hpp"

namespace dlmp {

constexpr std::int64_t default_state_limit = 10'000'000;

struct OracleResult {
    std::int64_t psi_count = 0;                 // states meeting the demand
    std::vector<StateVector> minimal_vectors;   // lexicographic order
    std::optional<double> reliability;          // absent without pmfs
};

// True iff the demand can be routed under the given arc capacities using only
// paths within the distance limit (early-exit flow enumeration).
bool demand_satisfiable(const Network& net, const PathSet& paths,
                        const StateVector& state, const Demand& demand);
bool demand_satisfiable(const Network& net, const StateVector& state, const Demand& demand);

// Full state-space sweep: every X in [0,M], membership tested independently
// of the search pipeline. Throws guard_error when the state count exceeds
// `state_limit`.
OracleResult brute_force(const Network& net, const Demand& demand,
                         std::int64_t state_limit = default_state_limit);
OracleResult brute_force(const Network& net, const PathSet& paths, const Demand& demand,
                         std::int64_t state_limit = default_state_limit);

} // namespace dlmp

#endif
