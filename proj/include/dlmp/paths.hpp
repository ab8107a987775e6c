#ifndef DLMP_PATHS_HPP
#define DLMP_PATHS_HPP

#include <cstdint>
#include <vector>

#include "dlmp/network.hpp"

namespace dlmp {

struct ArcStep {
    int arc = 0;          // 0-based arc index
    bool forward = true;  // false: undirected arc traversed head->tail

    bool operator==(const ArcStep&) const = default;
};

// A source->sink walk with no repeated node.
struct MinimalPath {
    std::vector<ArcStep> steps;
    std::vector<int> nodes;   // visited node sequence, source..sink
    std::int64_t length = 0;  // sum of member arc lengths
    int index = 0;            // 1-based position in canonical order

    bool uses_arc(int arc) const;

    bool operator==(const MinimalPath&) const = default;
};

struct PathSet {
    std::vector<MinimalPath> paths;
    // arc index -> 0-based indices of the paths containing that arc
    std::vector<std::vector<int>> paths_using_arc;

    int count() const { return static_cast<int>(paths.size()); }
    int arc_count() const { return static_cast<int>(paths_using_arc.size()); }

    bool operator==(const PathSet&) const = default;
};

// All cycle-free source->sink paths, in canonical order: lexicographic by the
// visited node sequence, ties broken by the arc index sequence. Undirected
// arcs are tried in both orientations. Disconnected source/sink -> empty set.
PathSet enumerate_mps(const Network& net);

std::int64_t path_length(const MinimalPath& path, const Network& net);

// min over member arcs of the state entry
int path_capacity(const MinimalPath& path, const StateVector& state);

struct RelevanceSplit {
    std::vector<int> relevant;    // 0-based path indices with length <= lambda
    std::vector<int> irrelevant;  // length > lambda
};

RelevanceSplit classify_relevant(const PathSet& paths, std::int64_t lambda);

// Arcs violating the every-arc-on-some-path assumption (warning, not error).
std::vector<int> arcs_on_no_path(const Network& net, const PathSet& paths);

// Exact source->sink max flow under the given arc capacities. An undirected
// arc becomes two antiparallel directed arcs of the same capacity.
int max_flow(const Network& net, const StateVector& state);

} // namespace dlmp

#endif
