#include "dlmp/paths.hpp"

#include <algorithm>

namespace dlmp {

bool MinimalPath::uses_arc(int arc) const {
    for (const ArcStep& step : steps)
        if (step.arc == arc) return true;
    return false;
}

namespace {

struct Move {
    int to = 0;
    int arc = 0;
    bool forward = true;
};

// Outgoing moves per node, sorted by (target node, arc index) so the DFS
// emits paths in lexicographic node-sequence order.
std::vector<std::vector<Move>> build_moves(const Network& net) {
    std::vector<std::vector<Move>> moves(net.node_count + 1);
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& arc = net.arcs[i];
        moves[arc.tail].push_back({arc.head, i, true});
        if (arc.undirected)
            moves[arc.head].push_back({arc.tail, i, false});
    }
    for (auto& list : moves)
        std::sort(list.begin(), list.end(), [](const Move& a, const Move& b) {
            return a.to != b.to ? a.to < b.to : a.arc < b.arc;
        });
    return moves;
}

} // namespace

PathSet enumerate_mps(const Network& net) {
    const auto moves = build_moves(net);

    PathSet set;
    set.paths_using_arc.assign(net.arc_count(), {});

    std::vector<char> visited(net.node_count + 1, 0);
    std::vector<ArcStep> steps;
    std::vector<int> node_seq{net.source};
    visited[net.source] = 1;

    auto dfs = [&](auto&& self, int u) -> void {
        if (u == net.sink) {
            MinimalPath path;
            path.steps = steps;
            path.nodes = node_seq;
            path.index = set.count() + 1;
            for (const ArcStep& step : steps)
                path.length += net.arcs[step.arc].length;
            set.paths.push_back(std::move(path));
            return;
        }
        for (const Move& move : moves[u]) {
            if (visited[move.to]) continue;
            visited[move.to] = 1;
            steps.push_back({move.arc, move.forward});
            node_seq.push_back(move.to);
            self(self, move.to);
            node_seq.pop_back();
            steps.pop_back();
            visited[move.to] = 0;
        }
    };
    dfs(dfs, net.source);

    for (int j = 0; j < set.count(); ++j)
        for (const ArcStep& step : set.paths[j].steps)
            set.paths_using_arc[step.arc].push_back(j);
    return set;
}

std::int64_t path_length(const MinimalPath& path, const Network& net) {
    std::int64_t total = 0;
    for (const ArcStep& step : path.steps)
        total += net.arcs[step.arc].length;
    return total;
}

int path_capacity(const MinimalPath& path, const StateVector& state) {
    int cap = std::numeric_limits<int>::max();
    for (const ArcStep& step : path.steps)
        cap = std::min(cap, state[step.arc]);
    return path.steps.empty() ? 0 : cap;
}

RelevanceSplit classify_relevant(const PathSet& paths, std::int64_t lambda) {
    RelevanceSplit split;
    for (int j = 0; j < paths.count(); ++j) {
        if (paths.paths[j].length > lambda)
            split.irrelevant.push_back(j);
        else
            split.relevant.push_back(j);
    }
    return split;
}

std::vector<int> arcs_on_no_path(const Network& net, const PathSet& paths) {
    std::vector<int> orphans;
    for (int i = 0; i < net.arc_count(); ++i)
        if (paths.paths_using_arc[i].empty())
            orphans.push_back(i);
    return orphans;
}

} // namespace dlmp
