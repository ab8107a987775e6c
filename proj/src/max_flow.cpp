#include <deque>
#include <vector>

#include "dlmp/paths.hpp"

namespace dlmp {

namespace {

// Residual graph for BFS augmentation. Edges stored in pairs: edge 2k and
// its reverse 2k+1.
struct ResidualGraph {
    std::vector<int> to;
    std::vector<int> cap;
    std::vector<std::vector<int>> out;

    explicit ResidualGraph(int nodes) : out(nodes + 1) {}

    void add_edge(int u, int v, int capacity) {
        out[u].push_back(static_cast<int>(to.size()));
        to.push_back(v);
        cap.push_back(capacity);
        out[v].push_back(static_cast<int>(to.size()));
        to.push_back(u);
        cap.push_back(0);
    }
};

} // namespace

int max_flow(const Network& net, const StateVector& state) {
    ResidualGraph g(net.node_count);
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& arc = net.arcs[i];
        if (state[i] <= 0) continue;
        g.add_edge(arc.tail, arc.head, state[i]);
        if (arc.undirected)
            g.add_edge(arc.head, arc.tail, state[i]);
    }

    int total = 0;
    std::vector<int> via(net.node_count + 1);  // edge taken into each node
    for (;;) {
        std::fill(via.begin(), via.end(), -1);
        via[net.source] = -2;
        std::deque<int> queue{net.source};
        while (!queue.empty() && via[net.sink] == -1) {
            int u = queue.front();
            queue.pop_front();
            for (int e : g.out[u]) {
                if (g.cap[e] > 0 && via[g.to[e]] == -1) {
                    via[g.to[e]] = e;
                    queue.push_back(g.to[e]);
                }
            }
        }
        if (via[net.sink] == -1) break;

        int bottleneck = std::numeric_limits<int>::max();
        for (int v = net.sink; v != net.source;) {
            int e = via[v];
            bottleneck = std::min(bottleneck, g.cap[e]);
            v = g.to[e ^ 1];
        }
        for (int v = net.sink; v != net.source;) {
            int e = via[v];
            g.cap[e] -= bottleneck;
            g.cap[e ^ 1] += bottleneck;
            v = g.to[e ^ 1];
        }
        total += bottleneck;
    }
    return total;
}

} // namespace dlmp
