#ifndef DLMP_FLOW_ENUM_HPP
#define DLMP_FLOW_ENUM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dlmp/network.hpp"
#include "dlmp/paths.hpp"

namespace dlmp {

// Integer flow per minimal path, same order as the PathSet.
using FlowVector = std::vector<int>;

struct SolverBounds {
    std::vector<int> path_bound;          // per-path upper bound, 0 when forced
    std::vector<char> forced_zero;        // path length exceeds the limit
    StateVector arc_budget;               // per-arc capacity available
    std::vector<std::int64_t> suffix_bound;  // sum of path_bound[j..p)
};

SolverBounds make_solver_bounds(const PathSet& paths, const Demand& demand,
                                const StateVector& capacities);

// Enumerates every flow vector F with
//   f_j = 0 for paths longer than the distance limit,
//   sum f_j = demand.units,
//   0 <= f_j <= min(path capacity under `capacities`, demand.units),
//   sum over paths containing arc i of f_j <= capacities[i],
// in lexicographically increasing order. The visitor returns false to stop
// early. Returns true when enumeration ran to completion.
bool enumerate_ffvs(const PathSet& paths, const Demand& demand,
                    const StateVector& capacities,
                    const std::function<bool(const FlowVector&)>& visit);

std::vector<FlowVector> collect_ffvs(const PathSet& paths, const Demand& demand,
                                     const StateVector& capacities);

// Same solution set and order as collect_ffvs; the search space is split on
// the first path with a positive bound and the slices run on `jobs` workers
// (0 = one per hardware thread).
std::vector<FlowVector> collect_ffvs_parallel(const PathSet& paths, const Demand& demand,
                                              const StateVector& capacities, int jobs);

// Early-exit mode: true iff at least one solution exists.
bool has_ffv(const PathSet& paths, const Demand& demand, const StateVector& capacities);

// x_i = sum of flow over the paths containing arc i
StateVector ffv_to_ssv(const FlowVector& flow, const PathSet& paths);

// Longest path length among paths carrying positive flow.
// Throws std::invalid_argument for an all-zero flow.
std::int64_t transmission_distance(const FlowVector& flow, const PathSet& paths);

} // namespace dlmp

#endif
