#ifndef DLMP_NETWORK_HPP
#define DLMP_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dlmp {

// Current capacity per arc, one entry per arc in file order.
using StateVector = std::vector<int>;

// Sentinel for "no transmission distance limit".
constexpr std::int64_t unlimited_distance = std::numeric_limits<std::int64_t>::max();

struct Arc {
    std::string id;
    int tail = 0;                            // 1-based node index
    int head = 0;                            // 1-based node index
    bool undirected = false;                 // tail/head are just the two endpoints
    int max_capacity = 0;                    // integer capacity ceiling
    std::int64_t length = 1;                 // positive integral length
    std::optional<std::vector<double>> pmf;  // P(capacity = k), k = 0..max_capacity

    bool operator==(const Arc&) const = default;
};

struct Network {
    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;  // file order defines arc indices

    int arc_count() const { return static_cast<int>(arcs.size()); }
    StateVector max_state() const;
    bool all_arcs_have_pmf() const;

    // Throws validation_error on any invariant violation.
    void validate() const;

    bool operator==(const Network&) const = default;
};

struct Demand {
    int units = 0;                                      // required flow
    std::int64_t distance_limit = unlimited_distance;   // longest usable path length
};

Network parse_network(std::istream& in);
Network parse_network(const std::string& text);
Network load_network(const std::string& path);
std::string serialize_network(const Network& net);

// P(capacity of arc >= c). 1 for c == 0, 0 for c > max_capacity.
// Throws validation_error if the arc carries no pmf.
double tail_probability(const Arc& arc, int c);

// Throws validation_error unless state has one entry per arc, each in [0, M_i].
void validate_state(const Network& net, const StateVector& state);

// Gives every arc the uniform pmf 1/(M_i+1).
void assign_uniform_pmfs(Network& net);

} // namespace dlmp

#endif
