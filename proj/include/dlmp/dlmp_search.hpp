#ifndef DLMP_SEARCH_HPP
#define DLMP_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "dlmp/flow_enum.hpp"
#include "dlmp/network.hpp"
#include "dlmp/paths.hpp"

namespace dlmp {

struct CandidateRecord {
    StateVector ssv;
    std::vector<FlowVector> generating_ffvs;  // every flow vector mapping to ssv
    bool accepted = false;
};

struct DlmpResult {
    std::vector<StateVector> dlmps;     // duplicate-free, lexicographic order
    std::int64_t sigma = 0;             // flow-vector solutions, duplicates included
    std::int64_t rejected_cyclic = 0;   // solutions discarded by the cycle check
    std::int64_t duplicate_count = 0;   // accepted solutions repeating a known ssv
};

// True iff the subnetwork spanned by the positive-capacity arcs, oriented the
// way the positive-flow paths of `flow` traverse them, has no directed cycle.
// An undirected arc used in both directions contributes both orientations.
bool cycle_check(const Network& net, const PathSet& paths,
                 const CandidateRecord& candidate, const FlowVector& flow);

// Definition-level cross-check: max flow equals d and dropping one unit from
// any positive arc breaks it.
bool verify_real_dlmp(const Network& net, const StateVector& ssv, int d);

// Full pipeline: bound setup, flow enumeration, ssv transform, cycle check,
// duplicate removal. `jobs` > 1 partitions the enumeration on the first
// unforced flow variable; results are identical for any job count.
DlmpResult find_dlmps(const Network& net, const Demand& demand, int jobs = 1);
DlmpResult find_dlmps(const Network& net, const PathSet& paths, const Demand& demand,
                      int jobs = 1);

} // namespace dlmp

#endif
