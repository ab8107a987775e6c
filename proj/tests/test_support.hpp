#ifndef DLMP_TEST_SUPPORT_HPP
#define DLMP_TEST_SUPPORT_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dlmp/flow_enum.hpp"
#include "dlmp/network.hpp"
#include "dlmp/paths.hpp"

namespace dlmp::test {

// Benchmark network with five nodes and eight arcs; a4 and a6 are undirected.
inline Network fixture_a() {
    return parse_network(std::string(R"({
      "nodes": 5, "source": 1, "sink": 5,
      "arcs": [
        { "id": "a1", "tail": 1, "head": 2, "undirected": false, "max_capacity": 3, "length": 1 },
        { "id": "a2", "tail": 1, "head": 3, "undirected": false, "max_capacity": 2, "length": 2 },
        { "id": "a3", "tail": 1, "head": 4, "undirected": false, "max_capacity": 2, "length": 1 },
        { "id": "a4", "tail": 2, "head": 4, "undirected": true,  "max_capacity": 1, "length": 3 },
        { "id": "a5", "tail": 2, "head": 5, "undirected": false, "max_capacity": 2, "length": 2 },
        { "id": "a6", "tail": 3, "head": 4, "undirected": true,  "max_capacity": 1, "length": 1 },
        { "id": "a7", "tail": 3, "head": 5, "undirected": false, "max_capacity": 3, "length": 2 },
        { "id": "a8", "tail": 4, "head": 5, "undirected": false, "max_capacity": 2, "length": 1 }
      ]
    })"));
}

// Four nodes, six arcs, a4 undirected.
inline Network fixture_b() {
    return parse_network(std::string(R"({
      "nodes": 4, "source": 1, "sink": 4,
      "arcs": [
        { "id": "a1", "tail": 1, "head": 2, "undirected": false, "max_capacity": 4, "length": 2 },
        { "id": "a2", "tail": 1, "head": 3, "undirected": false, "max_capacity": 3, "length": 1 },
        { "id": "a3", "tail": 1, "head": 4, "undirected": false, "max_capacity": 4, "length": 3 },
        { "id": "a4", "tail": 2, "head": 3, "undirected": true,  "max_capacity": 5, "length": 2 },
        { "id": "a5", "tail": 2, "head": 4, "undirected": false, "max_capacity": 3, "length": 1 },
        { "id": "a6", "tail": 3, "head": 4, "undirected": false, "max_capacity": 4, "length": 2 }
      ]
    })"));
}

// Published path tables for the fixtures, 1-based arc indices, reference order.
inline std::vector<std::vector<int>> fixture_a_path_table() {
    return {{1, 5}, {2, 7}, {3, 8}, {1, 4, 8}, {2, 6, 8},
            {3, 4, 5}, {3, 6, 7}, {1, 4, 6, 7}, {2, 4, 5, 6}};
}

inline std::vector<std::vector<int>> fixture_b_path_table() {
    return {{1, 4, 6}, {1, 5}, {2, 4, 5}, {2, 6}, {3}};
}

inline std::set<int> arc_set_of(const MinimalPath& path) {
    std::set<int> arcs;
    for (const ArcStep& step : path.steps) arcs.insert(step.arc + 1);
    return arcs;
}

// Maps each reference-table row to the 0-based index of the enumerated path
// with the same arc set. Returns an empty vector when a row has no match.
inline std::vector<int> table_to_enumerated(const PathSet& paths,
                                            const std::vector<std::vector<int>>& table) {
    std::vector<int> mapping;
    for (const std::vector<int>& row : table) {
        const std::set<int> want(row.begin(), row.end());
        int found = -1;
        for (int j = 0; j < paths.count(); ++j) {
            if (arc_set_of(paths.paths[j]) == want) {
                found = j;
                break;
            }
        }
        if (found < 0) return {};
        mapping.push_back(found);
    }
    return mapping;
}

// Reorders a flow vector given in reference-table order into enumeration order.
inline FlowVector to_enumeration_order(const FlowVector& table_flow,
                                       const std::vector<int>& mapping, int path_count) {
    FlowVector flow(path_count, 0);
    for (std::size_t k = 0; k < table_flow.size(); ++k) flow[mapping[k]] = table_flow[k];
    return flow;
}

// lambda sweep used by the equivalence tests: just below the shortest path,
// every distinct path length, and unlimited
inline std::vector<std::int64_t> lambda_sweep(const PathSet& paths) {
    std::set<std::int64_t> lengths;
    for (const MinimalPath& path : paths.paths) lengths.insert(path.length);
    std::vector<std::int64_t> sweep;
    if (!lengths.empty()) sweep.push_back(*lengths.begin() - 1);
    sweep.insert(sweep.end(), lengths.begin(), lengths.end());
    sweep.push_back(unlimited_distance);
    return sweep;
}

} // namespace dlmp::test

#endif
