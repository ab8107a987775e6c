#include "dlmp/oracle.hpp"

#include <algorithm>

#include "dlmp/errors.hpp"
#include "dlmp/flow_enum.hpp"

namespace dlmp {

bool demand_satisfiable(const Network& net, const PathSet& paths,
                        const StateVector& state, const Demand& demand) {
    validate_state(net, state);
    if (demand.units == 0) return true;
    return has_ffv(paths, demand, state);
}

bool demand_satisfiable(const Network& net, const StateVector& state, const Demand& demand) {
    return demand_satisfiable(net, enumerate_mps(net), state, demand);
}

OracleResult brute_force(const Network& net, const Demand& demand,
                         std::int64_t state_limit) {
    return brute_force(net, enumerate_mps(net), demand, state_limit);
}

OracleResult brute_force(const Network& net, const PathSet& paths, const Demand& demand,
                         std::int64_t state_limit) {
    const int m = net.arc_count();

    std::int64_t state_count = 1;
    for (const Arc& arc : net.arcs) {
        state_count *= arc.max_capacity + 1;
        if (state_count > state_limit)
            throw guard_error("state space larger than the limit of " +
                              std::to_string(state_limit) + " states");
    }

    const bool with_pmfs = net.all_arcs_have_pmf();
    OracleResult result;
    long double weight_sum = 0.0L;

    // odometer over [0,M], first arc fastest; a state dominating an earlier
    // minimal vector can never itself be minimal
    StateVector state(m, 0);
    for (;;) {
        bool feasible = demand.units == 0 || has_ffv(paths, demand, state);
        if (feasible) {
            ++result.psi_count;
            bool dominated = false;
            for (const StateVector& seen : result.minimal_vectors) {
                dominated = true;
                for (int i = 0; i < m; ++i) {
                    if (seen[i] > state[i]) {
                        dominated = false;
                        break;
                    }
                }
                if (dominated) break;
            }
            if (!dominated) result.minimal_vectors.push_back(state);
            if (with_pmfs) {
                long double weight = 1.0L;
                for (int i = 0; i < m; ++i)
                    weight *= (*net.arcs[i].pmf)[state[i]];
                weight_sum += weight;
            }
        }

        int i = 0;
        while (i < m) {
            if (++state[i] <= net.arcs[i].max_capacity) break;
            state[i] = 0;
            ++i;
        }
        if (i == m) break;
    }

    if (with_pmfs)
        result.reliability = static_cast<double>(weight_sum);
    std::sort(result.minimal_vectors.begin(), result.minimal_vectors.end());
    return result;
}

} // namespace dlmp
