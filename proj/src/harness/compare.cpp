#include "roam/harness/compare.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "roam/ers_schedule.hpp"
#include "roam/proto/node_factory.hpp"
#include "roam/sim/network.hpp"

namespace roam::harness {

double relative_error(double simulated, double analytic) {
    return std::abs(simulated - analytic) / std::max(analytic, 1.0);
}

ComparisonReport compare_model_vs_sim(const ScenarioConfig& config, std::uint64_t seed,
                                      std::optional<int> destination) {
    ScenarioConfig c = config;
    c.speed = 0.0;  // profile must be stationary
    c.flow_count = 0;
    c.validate();

    sim::SimParams params;
    params.link_rate = c.link_rate;
    params.per_hop_delay = c.per_hop_delay;
    params.data_packet_bytes = c.packet_size;

    sim::Network net(sim::generate_topology(c.node_count, c.area_w, c.area_h, c.radio_range, seed),
                     params);
    const RingSchedule schedule = build_schedule(c.constants);
    proto::NodeOptions options;
    options.p_forward = c.p_forward;
    proto::populate(net, c.constants, schedule, sim::Rng(seed), options);

    const int source = 0;
    int dest;
    if (destination) {
        dest = *destination;
        if (dest < 0 || dest >= net.topology().size() || dest == source)
            throw std::invalid_argument("compare_model_vs_sim: bad destination");
    } else {
        // Farthest reachable node; lowest id on ties.
        const auto depths = sim::bfs_depths(net.topology(), source);
        dest = -1;
        int best = 0;
        for (int i = 0; i < net.topology().size(); ++i) {
            if (depths[static_cast<std::size_t>(i)] > best) {
                best = depths[static_cast<std::size_t>(i)];
                dest = i;
            }
        }
        if (dest < 0) dest = net.topology().size() > 1 ? 1 : 0;  // isolated source
        if (dest == source)
            throw std::invalid_argument("compare_model_vs_sim: single-node topology");
    }

    ComparisonReport report;
    report.protocol = c.protocol;
    report.source = source;
    report.destination = dest;
    report.profile = sim::measure_profile(net.topology(), source, c.p_forward);

    // One discovery, driven by a single queued data packet.
    net.events().schedule(1.0, sim::EventKind::TrafficEmit, [&net, dest] {
        proto::Packet data;
        data.kind = proto::PacketKind::Data;
        data.uid = net.new_uid();
        data.created_at = net.now();
        data.size_bytes = net.params().data_packet_bytes;
        net.node(0).send_data(dest, std::move(data));
    });
    net.run_until(c.duration);

    const std::map<int, proto::DiscoveryRecord>* log = nullptr;
    if (auto* table = dynamic_cast<proto::TableNode*>(&net.node(source))) {
        log = &table->discovery_log();
    } else if (auto* dsr = dynamic_cast<proto::DsrNode*>(&net.node(source))) {
        log = &dsr->discovery_log();
    }
    if (!log || !log->count(dest))
        throw std::runtime_error("compare_model_vs_sim: no discovery was recorded");
    const proto::DiscoveryRecord& rec = log->at(dest);
    if (!rec.completed)
        throw std::runtime_error("compare_model_vs_sim: discovery still pending; raise duration");

    report.outcome = rec.failed
                         ? DiscoveryOutcome::no_reply()
                         : DiscoveryOutcome::reply_at_ring(rec.reply_ring, rec.replier_hops);

    report.analytic_rreq_energy = ers_rreq_energy_cost(schedule, report.outcome, report.profile);
    report.analytic_rd_energy = rd_energy_cost(schedule, report.outcome, report.profile);
    report.sim_rreq_tx = net.ledger().rreq_tx;
    report.sim_rrep_tx = net.ledger().rrep_tx;
    report.rreq_relative_error =
        relative_error(static_cast<double>(report.sim_rreq_tx), report.analytic_rreq_energy);
    report.rd_relative_error =
        relative_error(static_cast<double>(report.sim_rreq_tx + report.sim_rrep_tx),
                       report.analytic_rd_energy);
    return report;
}

void print_report(std::ostream& os, const ComparisonReport& r) {
    os << "protocol: " << protocol_name(r.protocol) << "\n"
       << "pair: " << r.source << " -> " << r.destination << "\n"
       << "profile: p=" << r.profile.p_broadcast << " d_avg=" << r.profile.d_avg << " d_f=[";
    for (std::size_t i = 0; i < r.profile.d_f.size(); ++i)
        os << (i ? "," : "") << r.profile.d_f[i];
    os << "]\n";
    if (r.outcome.replied())
        os << "outcome: reply at ring " << *r.outcome.reply_ring << ", "
           << r.outcome.replier_hop_counts.size() << " replier(s)\n";
    else
        os << "outcome: no reply\n";
    os << "analytic rreq energy: " << r.analytic_rreq_energy << "\n"
       << "simulated rreq tx:    " << r.sim_rreq_tx << "  (rel err " << r.rreq_relative_error
       << ")\n"
       << "analytic rd energy:   " << r.analytic_rd_energy << "\n"
       << "simulated rreq+rrep:  " << (r.sim_rreq_tx + r.sim_rrep_tx) << "  (rel err "
       << r.rd_relative_error << ")\n";
}

}  // namespace roam::harness
