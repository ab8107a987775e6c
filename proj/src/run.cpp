#include "dlmp/run.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "dlmp/dlmp_search.hpp"
#include "dlmp/errors.hpp"
#include "dlmp/flow_enum.hpp"

namespace dlmp {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double verify_tolerance = 1e-10;

std::string format_lambda(std::int64_t lambda) {
    return lambda == unlimited_distance ? "inf" : std::to_string(lambda);
}

std::string format_state(const StateVector& state) {
    std::string text = "(";
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(state[i]);
    }
    return text + ")";
}

std::string arc_sequence(const MinimalPath& path, const Network& net) {
    std::string text;
    for (const ArcStep& step : path.steps) {
        if (!text.empty()) text += ",";
        text += net.arcs[step.arc].id;
    }
    return text;
}

std::string node_sequence(const MinimalPath& path) {
    std::string text;
    for (int node : path.nodes) {
        if (!text.empty()) text += "-";
        text += std::to_string(node);
    }
    return text;
}

void add_lambda(ordered_json& doc, std::int64_t lambda) {
    if (lambda == unlimited_distance)
        doc["lambda"] = "inf";
    else
        doc["lambda"] = lambda;
}

ordered_json states_to_json(const std::vector<StateVector>& states) {
    ordered_json list = ordered_json::array();
    for (const StateVector& s : states) list.push_back(s);
    return list;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Context {
    const RunConfig& config;
    Network net;
    PathSet paths;
    Demand demand;
    Timer timer;  // covers path enumeration and the command's compute

    std::int64_t elapsed() const { return config.no_timing ? 0 : timer.elapsed_ms(); }
};

void warn_orphan_arcs(const Context& ctx, std::ostream& err) {
    const std::vector<int> orphans = arcs_on_no_path(ctx.net, ctx.paths);
    if (orphans.empty()) return;
    err << "warning: arcs on no minimal path:";
    for (int i : orphans) err << " " << ctx.net.arcs[i].id;
    err << "\n";
}

int run_mps(const Context& ctx, std::ostream& out) {
    const StateVector m = ctx.net.max_state();
    if (ctx.config.format == OutputFormat::json) {
        ordered_json doc;
        doc["command"] = "mps";
        doc["network"] = ctx.config.network_path;
        ordered_json list = ordered_json::array();
        for (const MinimalPath& path : ctx.paths.paths) {
            ordered_json entry;
            entry["index"] = path.index;
            ordered_json arcs = ordered_json::array();
            for (const ArcStep& step : path.steps)
                arcs.push_back(ctx.net.arcs[step.arc].id);
            entry["arcs"] = std::move(arcs);
            entry["nodes"] = path.nodes;
            entry["length"] = path.length;
            entry["max_capacity"] = path_capacity(path, m);
            list.push_back(std::move(entry));
        }
        doc["mps"] = std::move(list);
        doc["elapsed_ms"] = ctx.elapsed();
        out << doc.dump(2) << "\n";
        return exit_ok;
    }

    out << "network: " << ctx.config.network_path << " (" << ctx.net.node_count
        << " nodes, " << ctx.net.arc_count() << " arcs, source " << ctx.net.source
        << ", sink " << ctx.net.sink << ")\n";
    out << "minimal paths: " << ctx.paths.count() << "\n";
    for (const MinimalPath& path : ctx.paths.paths) {
        out << "  " << std::setw(3) << path.index << "  " << std::setw(24) << std::left
            << arc_sequence(path, ctx.net) << std::right << "  nodes " << std::setw(14)
            << std::left << node_sequence(path) << std::right << "  length " << std::setw(3)
            << path.length << "  capacity " << path_capacity(path, m) << "\n";
    }
    out << "elapsed_ms: " << ctx.elapsed() << "\n";
    return exit_ok;
}

void print_search_table(const Context& ctx, const DlmpResult& result, std::ostream& out) {
    out << "network: " << ctx.config.network_path << "\n";
    out << "demand: d=" << ctx.demand.units << " lambda=" << format_lambda(ctx.demand.distance_limit)
        << "\n";
    if (result.dlmps.empty()) {
        out << "no (d,lambda)-MPs: the demand cannot be met within the distance limit\n";
    } else {
        out << "(d,lambda)-MPs: " << result.dlmps.size() << "\n";
        for (const StateVector& ssv : result.dlmps) out << "  " << format_state(ssv) << "\n";
    }
    out << "sigma: " << result.sigma << "\n";
    out << "rejected_cyclic: " << result.rejected_cyclic << "\n";
    out << "duplicates: " << result.duplicate_count << "\n";
}

ordered_json search_report(const Context& ctx, const DlmpResult& result,
                           const char* command) {
    ordered_json doc;
    doc["command"] = command;
    doc["network"] = ctx.config.network_path;
    doc["d"] = ctx.demand.units;
    add_lambda(doc, ctx.demand.distance_limit);
    doc["dlmps"] = states_to_json(result.dlmps);
    doc["sigma"] = result.sigma;
    doc["rejected_cyclic"] = result.rejected_cyclic;
    doc["duplicates"] = result.duplicate_count;
    return doc;
}

int run_dlmp(const Context& ctx, std::ostream& out, std::ostream& err) {
    warn_orphan_arcs(ctx, err);
    const DlmpResult result = find_dlmps(ctx.net, ctx.paths, ctx.demand, ctx.config.jobs);
    const std::int64_t elapsed = ctx.elapsed();

    if (ctx.config.format == OutputFormat::json) {
        ordered_json doc = search_report(ctx, result, "dlmp");
        doc["elapsed_ms"] = elapsed;
        out << doc.dump(2) << "\n";
        return exit_ok;
    }
    print_search_table(ctx, result, out);
    out << "elapsed_ms: " << elapsed << "\n";
    return exit_ok;
}

int run_reliability(const Context& ctx, std::ostream& out, std::ostream& err) {
    if (!ctx.net.all_arcs_have_pmf())
        throw validation_error(
            "reliability requires a pmf on every arc (use --pmf uniform to synthesize)");
    warn_orphan_arcs(ctx, err);
    const DlmpResult result = find_dlmps(ctx.net, ctx.paths, ctx.demand, ctx.config.jobs);
    const ReliabilityReport report =
        reliability_from_dlmps(result.dlmps, ctx.net, ctx.config.sigma_guard);
    const std::int64_t elapsed = ctx.elapsed();

    if (ctx.config.format == OutputFormat::json) {
        ordered_json doc = search_report(ctx, result, "reliability");
        doc["reliability"] = report.value;
        doc["ie_terms"] = report.term_count;
        doc["elapsed_ms"] = elapsed;
        out << doc.dump(2) << "\n";
        return exit_ok;
    }
    print_search_table(ctx, result, out);
    out << "reliability: " << std::setprecision(15) << report.value << "\n";
    out << "ie_terms: " << report.term_count << "\n";
    out << "elapsed_ms: " << elapsed << "\n";
    return exit_ok;
}

int run_oracle(const Context& ctx, std::ostream& out, std::ostream& err) {
    warn_orphan_arcs(ctx, err);
    const OracleResult result =
        brute_force(ctx.net, ctx.paths, ctx.demand, ctx.config.state_limit);
    const std::int64_t elapsed = ctx.elapsed();

    if (ctx.config.format == OutputFormat::json) {
        ordered_json doc;
        doc["command"] = "oracle";
        doc["network"] = ctx.config.network_path;
        doc["d"] = ctx.demand.units;
        add_lambda(doc, ctx.demand.distance_limit);
        doc["psi_count"] = result.psi_count;
        doc["dlmps"] = states_to_json(result.minimal_vectors);
        if (result.reliability)
            doc["reliability"] = *result.reliability;
        doc["elapsed_ms"] = elapsed;
        out << doc.dump(2) << "\n";
        return exit_ok;
    }

    out << "network: " << ctx.config.network_path << "\n";
    out << "demand: d=" << ctx.demand.units << " lambda=" << format_lambda(ctx.demand.distance_limit)
        << "\n";
    out << "psi_count: " << result.psi_count << "\n";
    out << "minimal vectors: " << result.minimal_vectors.size() << "\n";
    for (const StateVector& ssv : result.minimal_vectors) out << "  " << format_state(ssv) << "\n";
    if (result.reliability)
        out << "reliability: " << std::setprecision(15) << *result.reliability << "\n";
    out << "elapsed_ms: " << elapsed << "\n";
    return exit_ok;
}

int run_verify(const Context& ctx, std::ostream& out, std::ostream& err) {
    warn_orphan_arcs(ctx, err);
    const DlmpResult search = find_dlmps(ctx.net, ctx.paths, ctx.demand, ctx.config.jobs);
    const OracleResult oracle =
        brute_force(ctx.net, ctx.paths, ctx.demand, ctx.config.state_limit);

    const bool sets_equal = search.dlmps == oracle.minimal_vectors;  // both canonical

    bool reliabilities_checked = false;
    double search_reliability = 0.0;
    double delta = 0.0;
    bool reliabilities_agree = true;
    if (oracle.reliability) {
        const ReliabilityReport report =
            reliability_from_dlmps(search.dlmps, ctx.net, ctx.config.sigma_guard);
        search_reliability = report.value;
        delta = std::abs(report.value - *oracle.reliability);
        reliabilities_agree = delta <= verify_tolerance;
        reliabilities_checked = true;
    }
    const bool pass = sets_equal && reliabilities_agree;
    const std::int64_t elapsed = ctx.elapsed();

    if (ctx.config.format == OutputFormat::json) {
        ordered_json doc = search_report(ctx, search, "verify");
        ordered_json oracle_doc;
        oracle_doc["psi_count"] = oracle.psi_count;
        oracle_doc["minimal_count"] = oracle.minimal_vectors.size();
        if (oracle.reliability) oracle_doc["reliability"] = *oracle.reliability;
        doc["oracle"] = std::move(oracle_doc);
        if (reliabilities_checked) doc["reliability"] = search_reliability;
        ordered_json verdict;
        verdict["set_equal"] = sets_equal;
        if (reliabilities_checked) verdict["reliability_delta"] = delta;
        verdict["pass"] = pass;
        doc["verify"] = std::move(verdict);
        doc["elapsed_ms"] = elapsed;
        out << doc.dump(2) << "\n";
        return pass ? exit_ok : exit_verify_fail;
    }

    out << "network: " << ctx.config.network_path << "\n";
    out << "demand: d=" << ctx.demand.units << " lambda=" << format_lambda(ctx.demand.distance_limit)
        << "\n";
    out << (sets_equal ? "[PASS]" : "[FAIL]") << " minimal vector sets: search="
        << search.dlmps.size() << " oracle=" << oracle.minimal_vectors.size() << "\n";
    if (reliabilities_checked) {
        out << (reliabilities_agree ? "[PASS]" : "[FAIL]") << " reliability agreement: |"
            << std::setprecision(15) << search_reliability << " - " << *oracle.reliability
            << "| = " << std::scientific << std::setprecision(2) << delta
            << std::defaultfloat << " (tolerance 1e-10)\n";
    } else {
        out << "[SKIP] reliability agreement: network carries no pmfs\n";
    }
    out << "elapsed_ms: " << elapsed << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? exit_ok : exit_verify_fail;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.demand < 0) throw validation_error("demand must be non-negative");
        if (config.lambda < 0) throw validation_error("lambda must be non-negative");

        Context ctx{config, load_network(config.network_path), {}, {}, {}};
        if (config.uniform_pmfs) assign_uniform_pmfs(ctx.net);
        ctx.timer = Timer{};
        ctx.paths = enumerate_mps(ctx.net);
        ctx.demand = Demand{config.demand, config.lambda};

        switch (config.command) {
            case Command::mps:
                return run_mps(ctx, out);
            case Command::dlmp:
                return run_dlmp(ctx, out, err);
            case Command::reliability:
                return run_reliability(ctx, out, err);
            case Command::oracle:
                return run_oracle(ctx, out, err);
            case Command::verify:
                return run_verify(ctx, out, err);
        }
        return exit_input_error;
    } catch (const guard_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_guard;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace dlmp
