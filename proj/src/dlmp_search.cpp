#include "dlmp/dlmp_search.hpp"

#include <algorithm>
#include <unordered_set>

#include "dlmp/errors.hpp"

namespace dlmp {

namespace {

struct StateHash {
    std::size_t operator()(const StateVector& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

bool cycle_check(const Network& net, const PathSet& paths,
                 const CandidateRecord& candidate, const FlowVector& flow) {
    std::vector<std::vector<int>> out(net.node_count + 1);
    std::vector<int> indegree(net.node_count + 1, 0);
    for (int j = 0; j < paths.count(); ++j) {
        if (flow[j] <= 0) continue;
        for (const ArcStep& step : paths.paths[j].steps) {
            if (candidate.ssv[step.arc] <= 0) continue;
            const Arc& arc = net.arcs[step.arc];
            const int from = step.forward ? arc.tail : arc.head;
            const int to = step.forward ? arc.head : arc.tail;
            out[from].push_back(to);
            ++indegree[to];
        }
    }

    // Kahn: the oriented subnetwork is acyclic iff every node drains
    std::vector<int> stack;
    for (int u = 1; u <= net.node_count; ++u)
        if (indegree[u] == 0) stack.push_back(u);
    int drained = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++drained;
        for (int v : out[u])
            if (--indegree[v] == 0) stack.push_back(v);
    }
    return drained == net.node_count;
}

bool verify_real_dlmp(const Network& net, const StateVector& ssv, int d) {
    if (max_flow(net, ssv) != d) return false;
    StateVector reduced = ssv;
    for (std::size_t i = 0; i < ssv.size(); ++i) {
        if (ssv[i] <= 0) continue;
        --reduced[i];
        const bool still_meets = max_flow(net, reduced) >= d;
        ++reduced[i];
        if (still_meets) return false;
    }
    return true;
}

DlmpResult find_dlmps(const Network& net, const Demand& demand, int jobs) {
    return find_dlmps(net, enumerate_mps(net), demand, jobs);
}

DlmpResult find_dlmps(const Network& net, const PathSet& paths, const Demand& demand,
                      int jobs) {
    if (demand.units < 0)
        throw validation_error("demand must be non-negative");
    if (demand.distance_limit < 0)
        throw validation_error("distance limit must be non-negative");

    DlmpResult result;
    std::unordered_set<StateVector, StateHash> seen;
    const StateVector capacities = net.max_state();

    auto consume = [&](const FlowVector& flow) {
        ++result.sigma;
        StateVector ssv = ffv_to_ssv(flow, paths);
        const CandidateRecord candidate{ssv, {flow}, false};
        if (!cycle_check(net, paths, candidate, flow)) {
            ++result.rejected_cyclic;
            return true;
        }
        if (!seen.insert(ssv).second) {
            ++result.duplicate_count;
            return true;
        }
        result.dlmps.push_back(std::move(ssv));
        return true;
    };

    if (jobs == 1) {
        enumerate_ffvs(paths, demand, capacities, consume);
    } else {
        for (const FlowVector& flow : collect_ffvs_parallel(paths, demand, capacities, jobs))
            consume(flow);
    }

    std::sort(result.dlmps.begin(), result.dlmps.end());
    return result;
}

} // namespace dlmp
