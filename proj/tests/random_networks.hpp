#ifndef DLMP_RANDOM_NETWORKS_HPP
#define DLMP_RANDOM_NETWORKS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dlmp/network.hpp"

namespace dlmp::test {

struct RandomNetworkOptions {
    int min_nodes = 3;
    int max_nodes = 6;
    int max_arcs = 8;
    int max_capacity = 3;  // M_i drawn from [1, max_capacity]
    int max_length = 4;    // l_i drawn from [1, max_length]
    double undirected_chance = 0.3;
    bool uniform_pmfs = false;
};

// Connected by construction: a simple source->sink spine is laid first, then
// extra arcs (parallels allowed) up to the arc budget.
inline Network random_connected_network(std::mt19937& rng,
                                        const RandomNetworkOptions& opt = {}) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = std::uniform_int_distribution<int>(opt.min_nodes, opt.max_nodes)(rng);

    Network net;
    net.node_count = n;
    net.source = 1;
    net.sink = n;

    auto add_arc = [&](int tail, int head) {
        Arc arc;
        arc.id = "a" + std::to_string(net.arcs.size() + 1);
        arc.tail = tail;
        arc.head = head;
        arc.undirected = coin(rng) < opt.undirected_chance;
        arc.max_capacity = std::uniform_int_distribution<int>(1, opt.max_capacity)(rng);
        arc.length = std::uniform_int_distribution<int>(1, opt.max_length)(rng);
        net.arcs.push_back(std::move(arc));
    };

    // spine through a random subset of the interior nodes
    std::vector<int> interior;
    for (int v = 2; v < n; ++v) interior.push_back(v);
    std::shuffle(interior.begin(), interior.end(), rng);
    const int hops = std::uniform_int_distribution<int>(
        0, static_cast<int>(interior.size()))(rng);
    std::vector<int> spine{1};
    spine.insert(spine.end(), interior.begin(), interior.begin() + hops);
    spine.push_back(n);
    for (std::size_t k = 0; k + 1 < spine.size(); ++k) add_arc(spine[k], spine[k + 1]);

    const int arc_target = std::uniform_int_distribution<int>(
        static_cast<int>(net.arcs.size()), opt.max_arcs)(rng);
    while (static_cast<int>(net.arcs.size()) < arc_target) {
        const int u = std::uniform_int_distribution<int>(1, n)(rng);
        const int v = std::uniform_int_distribution<int>(1, n)(rng);
        if (u == v) continue;
        add_arc(u, v);
    }

    if (opt.uniform_pmfs) assign_uniform_pmfs(net);
    net.validate();
    return net;
}

} // namespace dlmp::test

#endif
