#include <random>
#include <set>

#include "doctest.h"

#include "dlmp/dlmp_search.hpp"
#include "dlmp/errors.hpp"
#include "dlmp/oracle.hpp"
#include "random_networks.hpp"
#include "test_support.hpp"

using namespace dlmp;

namespace {

const std::vector<StateVector> fixture_a_66_vectors{
    {3, 2, 1, 1, 2, 1, 3, 1}, {2, 2, 2, 1, 1, 1, 3, 2}, {2, 2, 2, 0, 2, 1, 3, 1},
    {3, 1, 2, 1, 2, 1, 2, 2}, {2, 2, 2, 0, 2, 0, 2, 2}, {3, 2, 1, 1, 2, 0, 2, 2}};

std::set<StateVector> as_set(const std::vector<StateVector>& vectors) {
    return {vectors.begin(), vectors.end()};
}

bool dominates(const StateVector& big, const StateVector& small) {
    for (std::size_t i = 0; i < big.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

// two parallel arcs into a hub, two parallel arcs out: distinct routings
// collapse to one state vector
Network parallel_pairs_network() {
    return parse_network(std::string(
        R"({"nodes":3,"source":1,"sink":3,"arcs":[
          {"tail":1,"head":2,"max_capacity":1,"length":1},
          {"tail":1,"head":2,"max_capacity":1,"length":1},
          {"tail":2,"head":3,"max_capacity":1,"length":1},
          {"tail":2,"head":3,"max_capacity":1,"length":1}]})"));
}

// an undirected chord that two paths want to cross in opposite directions
Network chord_network() {
    return parse_network(std::string(
        R"({"nodes":4,"source":1,"sink":4,"arcs":[
          {"id":"a1","tail":1,"head":2,"max_capacity":1,"length":1},
          {"id":"a2","tail":2,"head":3,"undirected":true,"max_capacity":2,"length":1},
          {"id":"a3","tail":3,"head":4,"max_capacity":1,"length":1},
          {"id":"a4","tail":1,"head":3,"max_capacity":1,"length":1},
          {"id":"a5","tail":2,"head":4,"max_capacity":1,"length":1}]})"));
}

// two antiparallel directed arcs between the middle nodes
Network antiparallel_network() {
    return parse_network(std::string(
        R"({"nodes":4,"source":1,"sink":4,"arcs":[
          {"id":"a1","tail":1,"head":2,"max_capacity":1,"length":1},
          {"id":"a2","tail":2,"head":3,"max_capacity":1,"length":1},
          {"id":"a3","tail":3,"head":2,"max_capacity":1,"length":1},
          {"id":"a4","tail":3,"head":4,"max_capacity":1,"length":1},
          {"id":"a5","tail":1,"head":3,"max_capacity":1,"length":1},
          {"id":"a6","tail":2,"head":4,"max_capacity":1,"length":1}]})"));
}

} // namespace

TEST_SUITE_BEGIN("search");

TEST_CASE("cycle check accepts all six solutions of fixture A") {
    const Network net = test::fixture_a();
    const PathSet paths = enumerate_mps(net);
    const std::vector<int> order = test::table_to_enumerated(paths, test::fixture_a_path_table());

    const std::vector<FlowVector> published{
        {2, 2, 0, 1, 0, 0, 1, 0, 0}, {1, 2, 1, 1, 0, 0, 1, 0, 0},
        {2, 2, 1, 0, 0, 0, 1, 0, 0}, {2, 1, 1, 1, 0, 0, 1, 0, 0},
        {2, 2, 2, 0, 0, 0, 0, 0, 0}, {2, 2, 1, 1, 0, 0, 0, 0, 0}};
    for (const FlowVector& table_flow : published) {
        const FlowVector flow = test::to_enumeration_order(table_flow, order, paths.count());
        const CandidateRecord candidate{ffv_to_ssv(flow, paths), {flow}, false};
        CHECK(cycle_check(net, paths, candidate, flow));
    }
}

TEST_CASE("cycle check rejects an undirected chord used both ways") {
    const Network net = chord_network();
    const PathSet paths = enumerate_mps(net);
    REQUIRE(paths.count() == 4);

    // canonical order: 1-2-3-4, 1-2-4, 1-3-2-4, 1-3-4
    const FlowVector both_directions{1, 0, 1, 0};
    const CandidateRecord candidate{ffv_to_ssv(both_directions, paths), {both_directions}, false};
    CHECK_FALSE(cycle_check(net, paths, candidate, both_directions));

    const FlowVector one_direction{0, 1, 0, 1};
    const CandidateRecord fine{ffv_to_ssv(one_direction, paths), {one_direction}, false};
    CHECK(cycle_check(net, paths, fine, one_direction));
}

TEST_CASE("cycle check rejects antiparallel directed arcs both in use") {
    const Network net = antiparallel_network();
    const PathSet paths = enumerate_mps(net);
    REQUIRE(paths.count() == 4);
    // canonical order: 1-2-3-4 {a1,a2,a4}, 1-2-4 {a1,a6}, 1-3-2-4 {a5,a3,a6}, 1-3-4 {a5,a4}
    const FlowVector flow{1, 0, 1, 0};
    const CandidateRecord candidate{ffv_to_ssv(flow, paths), {flow}, false};
    CHECK_FALSE(cycle_check(net, paths, candidate, flow));
}

TEST_CASE("a single loaded path is always acyclic") {
    const Network net = test::fixture_a();
    const PathSet paths = enumerate_mps(net);
    for (int j = 0; j < paths.count(); ++j) {
        FlowVector flow(paths.count(), 0);
        flow[j] = 1;
        const CandidateRecord candidate{ffv_to_ssv(flow, paths), {flow}, false};
        CHECK(cycle_check(net, paths, candidate, flow));
    }
}

TEST_CASE("real (d,lambda)-MP verification via max flow") {
    const Network net = test::fixture_a();
    CHECK(verify_real_dlmp(net, {3, 2, 1, 1, 2, 1, 3, 1}, 6));
    CHECK_FALSE(verify_real_dlmp(net, net.max_state(), 6));
    CHECK(verify_real_dlmp(net, StateVector(8, 0), 0));
    CHECK_FALSE(verify_real_dlmp(net, {1, 0, 0, 0, 0, 0, 0, 0}, 0));
    for (const StateVector& ssv : fixture_a_66_vectors)
        CHECK(verify_real_dlmp(net, ssv, 6));
}

TEST_CASE("fixture A search reproduces the published solution set") {
    const Network net = test::fixture_a();
    const DlmpResult result = find_dlmps(net, Demand{6, 6});

    CHECK(as_set(result.dlmps) == as_set(fixture_a_66_vectors));
    CHECK(result.sigma == 6);
    CHECK(result.rejected_cyclic == 0);
    CHECK(result.duplicate_count == 0);
    CHECK(std::is_sorted(result.dlmps.begin(), result.dlmps.end()));
}

TEST_CASE("degenerate searches") {
    const Network net = test::fixture_a();
    SUBCASE("limit below every path length") {
        const DlmpResult result = find_dlmps(net, Demand{6, 1});
        CHECK(result.dlmps.empty());
        CHECK(result.sigma == 0);
    }
    SUBCASE("zero demand yields the zero vector") {
        const DlmpResult result = find_dlmps(net, Demand{0, 6});
        REQUIRE(result.dlmps.size() == 1);
        CHECK(result.dlmps[0] == StateVector(8, 0));
    }
    SUBCASE("disconnected network") {
        const Network cut = parse_network(std::string(
            R"({"nodes":3,"source":1,"sink":3,
                "arcs":[{"tail":1,"head":2,"max_capacity":1,"length":1}]})"));
        CHECK(find_dlmps(cut, Demand{1, unlimited_distance}).dlmps.empty());
        CHECK(find_dlmps(cut, Demand{0, unlimited_distance}).dlmps ==
              std::vector<StateVector>{StateVector{0}});
    }
    SUBCASE("negative demand is rejected") {
        CHECK_THROWS_AS(find_dlmps(net, Demand{-1, 6}), validation_error);
    }
}

TEST_CASE("zero-capacity arcs are routed around") {
    const Network net = parse_network(std::string(
        R"({"nodes":3,"source":1,"sink":3,"arcs":[
          {"id":"a1","tail":1,"head":2,"max_capacity":2,"length":1},
          {"id":"a2","tail":2,"head":3,"max_capacity":0,"length":1,"pmf":[1.0]},
          {"id":"a3","tail":2,"head":3,"max_capacity":2,"length":1}]})"));
    CHECK(max_flow(net, net.max_state()) == 2);

    const DlmpResult result = find_dlmps(net, Demand{2, unlimited_distance});
    CHECK(result.dlmps == std::vector<StateVector>{StateVector{2, 0, 2}});
    CHECK(result.dlmps == brute_force(net, Demand{2, unlimited_distance}).minimal_vectors);

    // with the dead arc as the only continuation the demand is infeasible
    const Network blocked = parse_network(std::string(
        R"({"nodes":3,"source":1,"sink":3,"arcs":[
          {"id":"a1","tail":1,"head":2,"max_capacity":2,"length":1},
          {"id":"a2","tail":2,"head":3,"max_capacity":0,"length":1}]})"));
    CHECK(find_dlmps(blocked, Demand{1, unlimited_distance}).dlmps.empty());
}

TEST_CASE("duplicate state vectors are removed and counted") {
    const DlmpResult result = find_dlmps(parallel_pairs_network(), Demand{2, unlimited_distance});
    CHECK(result.sigma == 2);
    CHECK(result.duplicate_count == 1);
    CHECK(result.rejected_cyclic == 0);
    CHECK(result.dlmps == std::vector<StateVector>{StateVector{1, 1, 1, 1}});
}

TEST_CASE("cyclic routings are rejected and counted") {
    const Network net = chord_network();
    const DlmpResult result = find_dlmps(net, Demand{2, unlimited_distance});
    CHECK(result.sigma == 2);
    CHECK(result.rejected_cyclic == 1);
    CHECK(result.duplicate_count == 0);
    CHECK(result.dlmps == std::vector<StateVector>{StateVector{1, 0, 1, 1, 1}});

    // the survivor matches the brute-force minimal vectors
    const OracleResult oracle = brute_force(net, Demand{2, unlimited_distance});
    CHECK(result.dlmps == oracle.minimal_vectors);
}

TEST_CASE("search output is an antichain that passes verification") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const Network net = test::random_connected_network(rng);
        const PathSet paths = enumerate_mps(net);
        const int top = max_flow(net, net.max_state());
        const int d = std::uniform_int_distribution<int>(1, top)(rng);
        const auto sweep = test::lambda_sweep(paths);
        const std::int64_t lambda =
            sweep[std::uniform_int_distribution<std::size_t>(0, sweep.size() - 1)(rng)];

        const DlmpResult result = find_dlmps(net, paths, Demand{d, lambda});
        for (std::size_t x = 0; x < result.dlmps.size(); ++x) {
            CHECK(verify_real_dlmp(net, result.dlmps[x], d));
            for (std::size_t y = 0; y < result.dlmps.size(); ++y) {
                if (x == y) continue;
                CHECK_FALSE(dominates(result.dlmps[x], result.dlmps[y]));
            }
        }
    }
}

TEST_CASE("results are identical for any worker count") {
    std::mt19937 rng(777);
    std::vector<Network> nets{test::fixture_a(), test::fixture_b()};
    for (int trial = 0; trial < 6; ++trial)
        nets.push_back(test::random_connected_network(rng));

    for (const Network& net : nets) {
        const PathSet paths = enumerate_mps(net);
        const int top = max_flow(net, net.max_state());
        for (int d : {0, 1, top}) {
            for (std::int64_t lambda : test::lambda_sweep(paths)) {
                const Demand demand{d, lambda};
                const DlmpResult sequential = find_dlmps(net, paths, demand, 1);
                for (int jobs : {2, 4, 0}) {
                    const DlmpResult parallel = find_dlmps(net, paths, demand, jobs);
                    CHECK(parallel.dlmps == sequential.dlmps);
                    CHECK(parallel.sigma == sequential.sigma);
                    CHECK(parallel.rejected_cyclic == sequential.rejected_cyclic);
                    CHECK(parallel.duplicate_count == sequential.duplicate_count);
                }
            }
        }
    }
}

TEST_CASE("no distance limit reduces to the classical search") {
    for (const Network& net : {test::fixture_a(), test::fixture_b()}) {
        const PathSet paths = enumerate_mps(net);
        std::int64_t total_length = 0;
        for (const Arc& arc : net.arcs) total_length += arc.length;
        for (int d = 1; d <= max_flow(net, net.max_state()); ++d) {
            // a limit no path can exceed leaves the system unconstrained
            const DlmpResult unlimited = find_dlmps(net, paths, Demand{d, unlimited_distance});
            const DlmpResult slack = find_dlmps(net, paths, Demand{d, total_length});
            CHECK(unlimited.dlmps == slack.dlmps);
            CHECK(unlimited.sigma == slack.sigma);
        }
    }
}

TEST_SUITE_END();
