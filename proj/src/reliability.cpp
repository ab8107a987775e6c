#include "dlmp/reliability.hpp"

#include <algorithm>

#include "dlmp/errors.hpp"

namespace dlmp {

namespace {

// tails[i][c] = P(capacity of arc i >= c), c = 0..M_i (+1 row of zero)
std::vector<std::vector<double>> tail_table(const Network& net) {
    std::vector<std::vector<double>> tails(net.arc_count());
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& arc = net.arcs[i];
        if (!arc.pmf)
            throw validation_error("arc " + arc.id + " carries no pmf");
        std::vector<double>& t = tails[i];
        t.assign(arc.max_capacity + 2, 0.0);
        for (int c = arc.max_capacity; c >= 1; --c)
            t[c] = t[c + 1] + (*arc.pmf)[c];
        t[0] = 1.0;  // certainty by definition, not by summation
    }
    return tails;
}

struct SubsetExpansion {
    const std::vector<StateVector>& floors;
    const std::vector<std::vector<double>>& tails;
    int arc_count;
    std::vector<long double> by_cardinality;  // term sums, index = subset size
    StateVector upper;                        // running componentwise max
    std::vector<std::pair<int, int>> undo;    // (arc, previous value)
    std::int64_t terms = 0;

    void walk(std::size_t idx, int size) {
        if (idx == floors.size()) {
            if (size == 0) return;
            long double product = 1.0L;
            for (int i = 0; i < arc_count; ++i)
                product *= tails[i][upper[i]];
            by_cardinality[size] += product;
            ++terms;
            return;
        }
        walk(idx + 1, size);  // without floors[idx]

        const std::size_t undo_mark = undo.size();
        for (int i = 0; i < arc_count; ++i) {
            if (floors[idx][i] > upper[i]) {
                undo.emplace_back(i, upper[i]);
                upper[i] = floors[idx][i];
            }
        }
        walk(idx + 1, size + 1);
        while (undo.size() > undo_mark) {
            upper[undo.back().first] = undo.back().second;
            undo.pop_back();
        }
    }
};

} // namespace

double upper_set_probability(const std::vector<StateVector>& floors, const Network& net) {
    const auto tails = tail_table(net);
    StateVector upper(net.arc_count(), 0);
    for (const StateVector& floor : floors)
        for (int i = 0; i < net.arc_count(); ++i)
            upper[i] = std::max(upper[i], floor[i]);
    double product = 1.0;
    for (int i = 0; i < net.arc_count(); ++i) {
        if (upper[i] > net.arcs[i].max_capacity) return 0.0;
        product *= tails[i][upper[i]];
    }
    return product;
}

ReliabilityReport reliability_from_dlmps(const std::vector<StateVector>& dlmps,
                                         const Network& net, int sigma_guard) {
    const int sigma = static_cast<int>(dlmps.size());
    if (sigma > sigma_guard)
        throw guard_error("inclusion-exclusion over " + std::to_string(sigma) +
                          " minimal vectors exceeds the guard of " +
                          std::to_string(sigma_guard) + " (2^sigma terms)");

    ReliabilityReport report;
    report.dlmp_count = sigma;
    if (sigma == 0) return report;

    for (const StateVector& floor : dlmps) {
        if (static_cast<int>(floor.size()) != net.arc_count())
            throw validation_error("minimal vector dimension does not match arc count");
        for (int i = 0; i < net.arc_count(); ++i)
            if (floor[i] < 0 || floor[i] > net.arcs[i].max_capacity)
                throw validation_error("minimal vector entry outside [0,M]");
    }

    const auto tails = tail_table(net);
    SubsetExpansion expansion{dlmps, tails, net.arc_count(),
                              std::vector<long double>(sigma + 1, 0.0L),
                              StateVector(net.arc_count(), 0),
                              {},
                              0};
    expansion.walk(0, 0);

    // alternating fold, smallest subsets first
    long double value = 0.0L;
    for (int size = 1; size <= sigma; ++size) {
        if (size % 2 == 1)
            value += expansion.by_cardinality[size];
        else
            value -= expansion.by_cardinality[size];
    }
    report.value = static_cast<double>(std::clamp(value, 0.0L, 1.0L));
    report.term_count = expansion.terms;
    return report;
}

} // namespace dlmp
