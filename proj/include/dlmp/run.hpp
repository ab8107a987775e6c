#ifndef DLMP_RUN_HPP
#define DLMP_RUN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dlmp/network.hpp"
#include "dlmp/oracle.hpp"
#include "dlmp/reliability.hpp"

namespace dlmp {

enum class Command { mps, dlmp, reliability, oracle, verify };
enum class OutputFormat { table, json };

// exit codes
constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_input_error = 2;
constexpr int exit_guard = 3;

struct RunConfig {
    Command command = Command::mps;
    std::string network_path;
    int demand = 0;
    std::int64_t lambda = unlimited_distance;
    OutputFormat format = OutputFormat::table;
    int sigma_guard = default_sigma_guard;
    std::int64_t state_limit = default_state_limit;
    int jobs = 1;               // 0 = one per hardware thread
    bool uniform_pmfs = false;  // synthesize 1/(M_i+1) pmfs
    bool no_timing = false;     // report elapsed_ms as 0 (reproducible output)
};

// Executes one command, writing the report to `out` and diagnostics to `err`.
// Returns one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace dlmp

#endif
