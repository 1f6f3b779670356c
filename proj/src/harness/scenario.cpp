#include "roam/harness/scenario.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "roam/ers_schedule.hpp"
#include "roam/proto/node_factory.hpp"
#include "roam/sim/network.hpp"

namespace roam::harness {

std::uint64_t seed_for_run(std::uint64_t base_seed, int run_index) {
    return base_seed + 1000003ULL * static_cast<std::uint64_t>(run_index);
}

namespace {

// |hellos - active/interval| must stay within episodes + 1 on every
// node; this is the simulated counterpart of the link-monitoring ratio.
std::uint64_t hello_consistency_failures(const sim::Ledger& ledger, double interval) {
    std::uint64_t failures = 0;
    for (const auto& h : ledger.hello) {
        const double expected = h.active_time / interval;
        const double slack = static_cast<double>(h.episodes) + 1.0;
        if (std::abs(static_cast<double>(h.hellos_sent) - expected) > slack) ++failures;
    }
    return failures;
}

double mean_flow_hops(const sim::Topology& topology, const std::vector<sim::CbrFlow>& flows) {
    double sum = 0.0;
    int n = 0;
    for (const auto& f : flows) {
        const auto depths = sim::bfs_depths(topology, f.source);
        const int d = depths[static_cast<std::size_t>(f.destination)];
        if (d > 0) {
            sum += d;
            ++n;
        }
    }
    return n > 0 ? sum / n : 0.0;
}

}  // namespace

RunMetrics run_single(const ScenarioConfig& config, std::uint64_t run_seed, std::ostream* trace) {
    config.validate();

    sim::SimParams params;
    params.link_rate = config.link_rate;
    params.per_hop_delay = config.per_hop_delay;
    params.data_packet_bytes = config.packet_size;

    sim::Topology topology = sim::generate_topology(config.node_count, config.area_w,
                                                    config.area_h, config.radio_range, run_seed);
    sim::Network net(std::move(topology), params);
    if (trace) net.set_trace(trace);

    const RingSchedule schedule = build_schedule(config.constants);
    proto::NodeOptions options;
    options.p_forward = config.p_forward;
    proto::populate(net, config.constants, schedule, sim::Rng(run_seed), options);

    net.attach_mobility(config.area_w, config.area_h, config.speed, config.pause_time,
                        sim::Rng(run_seed));

    sim::Rng traffic = sim::Rng(run_seed).fork(0x74726166);
    std::vector<sim::CbrFlow> flows;
    for (int i = 0; i < config.flow_count; ++i) {
        sim::CbrFlow f;
        f.source = traffic.uniform_int(0, config.node_count - 1);
        if (config.node_count > 1) {
            do {
                f.destination = traffic.uniform_int(0, config.node_count - 1);
            } while (f.destination == f.source);
        }
        f.packet_size = config.packet_size;
        f.interval = config.cbr_interval;
        f.start_time = traffic.uniform(0.5, 2.5);
        f.stop_time = config.duration;
        flows.push_back(f);
        net.add_flow(f);
    }
    const double flow_hops = mean_flow_hops(net.topology(), flows);

    net.run_until(config.duration);

    RunMetrics m = RunMetrics::from_ledger(net.ledger(), net.monitor(), run_seed);
    m.hello_consistency_failures =
        hello_consistency_failures(net.ledger(), config.constants.hello_interval);
    if (config.scenario == "scenario1") m.x = flow_hops;
    else m.x = config.x;
    return m;
}

Metrics run_scenario(const ScenarioConfig& config, bool parallel) {
    config.validate();
    Metrics metrics;
    metrics.runs.resize(static_cast<std::size_t>(config.runs));
    if (parallel && config.runs > 1) {
        std::vector<std::future<RunMetrics>> futures;
        futures.reserve(static_cast<std::size_t>(config.runs));
        for (int r = 0; r < config.runs; ++r) {
            futures.push_back(std::async(std::launch::async, [&config, r] {
                return run_single(config, seed_for_run(config.seed, r));
            }));
        }
        for (int r = 0; r < config.runs; ++r)
            metrics.runs[static_cast<std::size_t>(r)] = futures[static_cast<std::size_t>(r)].get();
    } else {
        for (int r = 0; r < config.runs; ++r)
            metrics.runs[static_cast<std::size_t>(r)] = run_single(config, seed_for_run(config.seed, r));
    }
    return metrics;
}

std::vector<ScenarioConfig> desk_scenario(int which, Protocol protocol, std::uint64_t seed,
                                          int runs) {
    std::vector<ScenarioConfig> points;
    ScenarioConfig base;
    base.set_protocol(protocol);
    base.seed = seed;
    base.runs = runs;
    base.radio_range = 150.0;
    base.per_hop_delay = 0.005;
    switch (which) {
        case 1:
            base.scenario = "scenario1";
            base.area_w = 400.0;
            base.area_h = 300.0;
            base.node_count = 20;
            base.speed = 5.0;
            base.pause_time = 2.0;
            base.duration = 60.0;
            base.flow_count = 4;
            points.push_back(base);
            break;
        case 2:
            base.scenario = "scenario2";
            base.area_w = 500.0;
            base.area_h = 500.0;
            base.node_count = 20;
            base.speed = 15.0;
            base.duration = 120.0;
            base.flow_count = 6;
            for (double pause : {0.0, 30.0, 60.0, 120.0}) {
                base.pause_time = pause;
                base.x = pause;
                points.push_back(base);
            }
            break;
        case 3:
            base.scenario = "scenario3";
            base.area_w = 500.0;
            base.area_h = 500.0;
            base.speed = 15.0;
            base.pause_time = 2.0;
            base.duration = 120.0;
            base.flow_count = 6;
            for (int nodes : {5, 10, 20, 30}) {
                base.node_count = nodes;
                base.x = nodes;
                points.push_back(base);
            }
            break;
        default: throw std::invalid_argument("desk_scenario: scenario must be 1, 2 or 3");
    }
    return points;
}

}  // namespace roam::harness
