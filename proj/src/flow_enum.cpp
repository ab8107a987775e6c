#include "dlmp/flow_enum.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace dlmp {

SolverBounds make_solver_bounds(const PathSet& paths, const Demand& demand,
                                const StateVector& capacities) {
    const int p = paths.count();
    SolverBounds bounds;
    bounds.path_bound.assign(p, 0);
    bounds.forced_zero.assign(p, 0);
    bounds.arc_budget = capacities;
    bounds.suffix_bound.assign(p + 1, 0);
    for (int j = 0; j < p; ++j) {
        if (paths.paths[j].length > demand.distance_limit) {
            bounds.forced_zero[j] = 1;  // path capacity not even computed
            continue;
        }
        bounds.path_bound[j] =
            std::min(path_capacity(paths.paths[j], capacities), demand.units);
    }
    for (int j = p - 1; j >= 0; --j)
        bounds.suffix_bound[j] = bounds.suffix_bound[j + 1] + bounds.path_bound[j];
    return bounds;
}

namespace {

struct Enumeration {
    const PathSet& paths;
    SolverBounds bounds;
    FlowVector flow;
    const std::function<bool(const FlowVector&)>* visit = nullptr;
    bool stopped = false;

    // Assigns flow[j..p) so the remainder sums to `remaining`, ascending.
    void assign(int j, int remaining) {
        if (stopped) return;
        const int p = paths.count();
        if (j == p) {
            if (remaining == 0 && !(*visit)(flow)) stopped = true;
            return;
        }
        const MinimalPath& path = paths.paths[j];
        int ub = std::min(bounds.path_bound[j], remaining);
        for (const ArcStep& step : path.steps)
            ub = std::min(ub, bounds.arc_budget[step.arc]);
        const std::int64_t later = bounds.suffix_bound[j + 1];
        const int lb = later >= remaining ? 0 : static_cast<int>(remaining - later);
        if (lb > ub) return;

        for (const ArcStep& step : path.steps)
            bounds.arc_budget[step.arc] -= lb;
        int f = lb;
        for (;;) {
            flow[j] = f;
            assign(j + 1, remaining - f);
            if (stopped || f == ub) break;
            ++f;
            for (const ArcStep& step : path.steps)
                --bounds.arc_budget[step.arc];
        }
        for (const ArcStep& step : path.steps)
            bounds.arc_budget[step.arc] += f;
        flow[j] = 0;
    }
};

} // namespace

bool enumerate_ffvs(const PathSet& paths, const Demand& demand,
                    const StateVector& capacities,
                    const std::function<bool(const FlowVector&)>& visit) {
    Enumeration e{paths, make_solver_bounds(paths, demand, capacities),
                  FlowVector(paths.count(), 0), &visit};
    e.assign(0, demand.units);
    return !e.stopped;
}

std::vector<FlowVector> collect_ffvs(const PathSet& paths, const Demand& demand,
                                     const StateVector& capacities) {
    std::vector<FlowVector> out;
    enumerate_ffvs(paths, demand, capacities, [&](const FlowVector& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::vector<FlowVector> collect_ffvs_parallel(const PathSet& paths, const Demand& demand,
                                              const StateVector& capacities, int jobs) {
    if (jobs == 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    const SolverBounds bounds = make_solver_bounds(paths, demand, capacities);

    // split on the first path that can carry flow
    int split = 0;
    while (split < paths.count() && bounds.path_bound[split] == 0) ++split;
    if (jobs <= 1 || demand.units == 0 || split == paths.count())
        return collect_ffvs(paths, demand, capacities);

    int ub = std::min(bounds.path_bound[split], demand.units);
    for (const ArcStep& step : paths.paths[split].steps)
        ub = std::min(ub, capacities[step.arc]);
    const std::int64_t later = bounds.suffix_bound[split + 1];
    const int lb = later >= demand.units ? 0 : static_cast<int>(demand.units - later);
    if (lb > ub) return {};

    const int task_count = ub - lb + 1;
    std::vector<std::vector<FlowVector>> slices(task_count);
    std::atomic<int> next_task{0};

    auto worker = [&]() {
        for (;;) {
            const int task = next_task.fetch_add(1);
            if (task >= task_count) return;
            const int value = lb + task;
            auto sink = [&](const FlowVector& f) {
                slices[task].push_back(f);
                return true;
            };
            std::function<bool(const FlowVector&)> visit = sink;
            Enumeration e{paths, make_solver_bounds(paths, demand, capacities),
                          FlowVector(paths.count(), 0), &visit};
            e.flow[split] = value;
            for (const ArcStep& step : paths.paths[split].steps)
                e.bounds.arc_budget[step.arc] -= value;
            e.assign(split + 1, demand.units - value);
        }
    };

    std::vector<std::thread> pool;
    const int threads = std::min(jobs, task_count);
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::vector<FlowVector> out;
    std::size_t total = 0;
    for (const auto& slice : slices) total += slice.size();
    out.reserve(total);
    for (auto& slice : slices)
        for (FlowVector& f : slice) out.push_back(std::move(f));
    return out;
}

bool has_ffv(const PathSet& paths, const Demand& demand, const StateVector& capacities) {
    bool found = false;
    enumerate_ffvs(paths, demand, capacities, [&](const FlowVector&) {
        found = true;
        return false;
    });
    return found;
}

StateVector ffv_to_ssv(const FlowVector& flow, const PathSet& paths) {
    StateVector state(paths.arc_count(), 0);
    for (int i = 0; i < paths.arc_count(); ++i)
        for (int j : paths.paths_using_arc[i])
            state[i] += flow[j];
    return state;
}

std::int64_t transmission_distance(const FlowVector& flow, const PathSet& paths) {
    std::int64_t distance = -1;
    for (int j = 0; j < paths.count(); ++j)
        if (flow[j] > 0)
            distance = std::max(distance, paths.paths[j].length);
    if (distance < 0)
        throw std::invalid_argument("transmission distance undefined for all-zero flow");
    return distance;
}

} // namespace dlmp
