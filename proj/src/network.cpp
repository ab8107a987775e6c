#include "dlmp/network.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dlmp/errors.hpp"

namespace dlmp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string arc_label(const Arc& arc, std::size_t position) {
    if (!arc.id.empty()) return arc.id;
    return "arc #" + std::to_string(position + 1);
}

} // namespace

StateVector Network::max_state() const {
    StateVector m(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) m[i] = arcs[i].max_capacity;
    return m;
}

bool Network::all_arcs_have_pmf() const {
    for (const Arc& arc : arcs)
        if (!arc.pmf) return false;
    return true;
}

void Network::validate() const {
    if (node_count < 1)
        throw validation_error("node count must be positive");
    if (source < 1 || source > node_count)
        throw validation_error("source node out of range");
    if (sink < 1 || sink > node_count)
        throw validation_error("sink node out of range");
    if (source == sink)
        throw validation_error("source and sink must differ");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& arc = arcs[i];
        const std::string label = arc_label(arc, i);
        if (arc.tail < 1 || arc.tail > node_count || arc.head < 1 || arc.head > node_count)
            throw validation_error(label + ": endpoint out of range");
        if (arc.tail == arc.head)
            throw validation_error(label + ": self-loops are not allowed");
        if (arc.max_capacity < 0)
            throw validation_error(label + ": negative max capacity");
        if (arc.length < 1)
            throw validation_error(label + ": length must be positive");
        if (arc.pmf) {
            const std::vector<double>& pmf = *arc.pmf;
            if (static_cast<int>(pmf.size()) != arc.max_capacity + 1)
                throw validation_error(label + ": pmf must have max_capacity+1 entries, got " +
                                       std::to_string(pmf.size()));
            double sum = 0.0;
            for (double p : pmf) {
                if (!(p >= 0.0 && p <= 1.0))
                    throw validation_error(label + ": pmf entry outside [0,1]");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw validation_error(label + ": pmf entries sum to " + std::to_string(sum));
        }
    }
}

Network parse_network(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed network document: ") + e.what());
    }

    Network net;
    try {
        net.node_count = doc.at("nodes").get<int>();
        net.source = doc.at("source").get<int>();
        net.sink = doc.at("sink").get<int>();
        const auto& arcs = doc.at("arcs");
        if (!arcs.is_array())
            throw parse_error("\"arcs\" must be an array");
        net.arcs.reserve(arcs.size());
        for (const auto& entry : arcs) {
            Arc arc;
            arc.id = entry.value("id", "a" + std::to_string(net.arcs.size() + 1));
            arc.tail = entry.at("tail").get<int>();
            arc.head = entry.at("head").get<int>();
            arc.undirected = entry.value("undirected", false);
            arc.max_capacity = entry.at("max_capacity").get<int>();
            arc.length = entry.at("length").get<std::int64_t>();
            if (entry.contains("pmf"))
                arc.pmf = entry.at("pmf").get<std::vector<double>>();
            net.arcs.push_back(std::move(arc));
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed network document: ") + e.what());
    }

    net.validate();
    return net;
}

Network parse_network(const std::string& text) {
    std::istringstream in(text);
    return parse_network(in);
}

Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open network file: " + path);
    return parse_network(in);
}

std::string serialize_network(const Network& net) {
    ordered_json doc;
    doc["nodes"] = net.node_count;
    doc["source"] = net.source;
    doc["sink"] = net.sink;
    ordered_json arcs = ordered_json::array();
    for (const Arc& arc : net.arcs) {
        ordered_json entry;
        entry["id"] = arc.id;
        entry["tail"] = arc.tail;
        entry["head"] = arc.head;
        entry["undirected"] = arc.undirected;
        entry["max_capacity"] = arc.max_capacity;
        entry["length"] = arc.length;
        if (arc.pmf)
            entry["pmf"] = *arc.pmf;
        arcs.push_back(std::move(entry));
    }
    doc["arcs"] = std::move(arcs);
    return doc.dump(2);
}

double tail_probability(const Arc& arc, int c) {
    if (!arc.pmf)
        throw validation_error("arc " + arc.id + " carries no pmf");
    if (c <= 0) return 1.0;
    if (c > arc.max_capacity) return 0.0;
    double tail = 0.0;
    for (int k = arc.max_capacity; k >= c; --k) tail += (*arc.pmf)[k];
    return tail;
}

void validate_state(const Network& net, const StateVector& state) {
    if (state.size() != net.arcs.size())
        throw validation_error("state vector has " + std::to_string(state.size()) +
                               " entries, network has " + std::to_string(net.arcs.size()) +
                               " arcs");
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] < 0 || state[i] > net.arcs[i].max_capacity)
            throw validation_error("state entry for arc " + arc_label(net.arcs[i], i) +
                                   " outside [0," + std::to_string(net.arcs[i].max_capacity) +
                                   "]: " + std::to_string(state[i]));
    }
}

void assign_uniform_pmfs(Network& net) {
    for (Arc& arc : net.arcs) {
        const int levels = arc.max_capacity + 1;
        arc.pmf = std::vector<double>(levels, 1.0 / levels);
    }
}

} // namespace dlmp
