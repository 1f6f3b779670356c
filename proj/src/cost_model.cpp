#include "roam/cost_model.hpp"

#include <cmath>
#include <stdexcept>

namespace roam {

DiscoveryOutcome DiscoveryOutcome::reply_at_ring(int ring, std::vector<int> hops) {
    if (ring < 1) throw std::invalid_argument("DiscoveryOutcome: reply ring < 1");
    for (int h : hops)
        if (h < 1) throw std::invalid_argument("DiscoveryOutcome: replier hop count < 1");
    DiscoveryOutcome o;
    o.reply_ring = ring;
    o.replier_hop_counts = std::move(hops);
    return o;
}

double blind_flood_cost(int hops, const NetworkProfile& profile) {
    profile.validate();
    if (hops < 1) throw std::invalid_argument("blind_flood_cost: hops < 1");
    if (static_cast<int>(profile.d_f.size()) < hops - 1)
        throw std::invalid_argument("blind_flood_cost: profile d_f shorter than hops-1");

    const double p = profile.p_broadcast;
    double cost = p * profile.d_avg;
    double p_pow = p;        // p^(i+1) built incrementally
    double fwd_prod = 1.0;   // prod_{j<=i} d_f[j]
    for (int i = 1; i <= hops - 1; ++i) {
        p_pow *= p;
        fwd_prod *= profile.d_f[static_cast<std::size_t>(i - 1)];
        cost += profile.d_avg * p_pow * fwd_prod;
    }
    return cost;
}

double ring_energy_cost(int ttl, const NetworkProfile& profile) {
    return blind_flood_cost(ttl, profile);
}

namespace {

int rings_opened(const RingSchedule& schedule, const DiscoveryOutcome& outcome) {
    const int total = schedule.ring_count();
    if (!outcome.replied()) return total;
    const int r = *outcome.reply_ring;
    if (r < 1 || r > total)
        throw std::invalid_argument("DiscoveryOutcome: reply ring outside schedule");
    return r;
}

}  // namespace

double ers_rreq_energy_cost(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                            const NetworkProfile& profile) {
    const int upto = rings_opened(schedule, outcome);
    double cost = 0.0;
    for (int i = 0; i < upto; ++i) cost += ring_energy_cost(schedule.ttls[i], profile);
    return cost;
}

double rd_energy_cost(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                      const NetworkProfile& profile) {
    double cost = ers_rreq_energy_cost(schedule, outcome, profile);
    for (int h : outcome.replier_hop_counts) cost += h;  // one tx per RREP hop
    return cost;
}

double link_monitor_cost(const MaintenanceEvent& event, const ProtocolConstants& constants) {
    if (constants.protocol == Protocol::Dsr) return 0.0;
    if (constants.hello_interval <= 0.0)
        throw std::invalid_argument("link_monitor_cost: hello_interval <= 0");
    if (event.link_active_time < 0.0 || event.route_hop_count < 0)
        throw std::invalid_argument("link_monitor_cost: negative event field");
    return event.link_active_time / constants.hello_interval * event.route_hop_count;
}

int llr_ttl(int min_repair_ttl, int hops_to_sender, const ProtocolConstants& constants) {
    if (min_repair_ttl < 0 || hops_to_sender < 0)
        throw std::invalid_argument("llr_ttl: negative input");
    const int half_hops = (hops_to_sender + 1) / 2;  // ceil(0.5 * hops)
    return std::max(min_repair_ttl, half_hops) + constants.local_add_ttl;
}

double llr_energy_cost(int llr_ttl_value, const NetworkProfile& profile) {
    return ring_energy_cost(llr_ttl_value, profile);
}

double rm_energy_cost(Protocol protocol, const MaintenanceEvent& event,
                      const NetworkProfile& profile, const ProtocolConstants& constants) {
    if (event.rerr_transmissions < 0)
        throw std::invalid_argument("rm_energy_cost: negative rerr_transmissions");
    switch (protocol) {
        case Protocol::Aodv: {
            if (event.ps)
                throw std::invalid_argument("rm_energy_cost: PS attempt on an AODV event");
            double cost = link_monitor_cost(event, constants);
            if (event.llr) {
                const int ttl =
                    llr_ttl(event.llr->min_repair_ttl, event.llr->hops_to_sender, constants);
                cost += llr_energy_cost(ttl, profile);
            }
            return cost + event.rerr_transmissions;
        }
        case Protocol::Dsr: {
            if (event.llr)
                throw std::invalid_argument("rm_energy_cost: LLR attempt on a DSR event");
            double cost = 0.0;
            if (event.ps) {
                const int checked = event.ps->succeeded ? event.ps->nodes_checked_to_salvor
                                                        : event.ps->nodes_checked_to_origin;
                if (checked < 0)
                    throw std::invalid_argument("rm_energy_cost: negative PS node count");
                cost += checked;  // one salvage packet per checked node
            }
            return cost + event.rerr_transmissions;
        }
        case Protocol::Dymo: {
            if (event.llr || event.ps)
                throw std::invalid_argument("rm_energy_cost: repair attempt on a DYMO event");
            return link_monitor_cost(event, constants) + event.rerr_transmissions;
        }
    }
    throw std::invalid_argument("rm_energy_cost: unknown protocol");
}

double rd_time_cost_dsr(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                        const ProtocolConstants& constants) {
    const double tau = constants.nonprop_request_timeout;
    if (tau <= 0.0) throw std::invalid_argument("rd_time_cost_dsr: tau <= 0");
    const int upto = rings_opened(schedule, outcome);
    double cost = 0.0;
    for (int i = 1; i <= upto; ++i) cost += beb_timeout(i, tau);
    return cost;
}

double rd_time_cost_aodv_dymo(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                              const ProtocolConstants& constants) {
    const double tau1 = 2.0 * constants.node_traversal_time;
    const double tau2 = constants.timeout_buffer;
    const int upto = rings_opened(schedule, outcome);
    double cost = 0.0;
    for (int i = 0; i < upto; ++i) cost += tau1 * (schedule.ttls[i] + tau2);
    return cost;
}

double llr_time_cost(int llr_ttl_value, const ProtocolConstants& constants) {
    if (llr_ttl_value < 0) throw std::invalid_argument("llr_time_cost: negative ttl");
    return 2.0 * constants.node_traversal_time * (llr_ttl_value + constants.timeout_buffer);
}

double rm_time_cost(Protocol protocol, const MaintenanceEvent& event,
                    const RingSchedule& schedule, const ProtocolConstants& constants) {
    if (event.rerr_receive_time < 0.0)
        throw std::invalid_argument("rm_time_cost: negative rerr_receive_time");
    switch (protocol) {
        case Protocol::Aodv: {
            if (!event.llr)
                throw std::invalid_argument("rm_time_cost: AODV event without LLR attempt");
            const int ttl =
                llr_ttl(event.llr->min_repair_ttl, event.llr->hops_to_sender, constants);
            double cost = llr_time_cost(ttl, constants);  // case A
            if (event.llr->succeeded) return cost;
            cost += event.rerr_receive_time;  // case B
            if (event.rediscovery)            // case C
                cost += rd_time_cost_aodv_dymo(schedule, *event.rediscovery, constants);
            return cost;
        }
        case Protocol::Dsr: {
            if (!event.ps)
                throw std::invalid_argument("rm_time_cost: DSR event without PS attempt");
            if (event.ps->succeeded)
                return event.ps->nodes_checked_to_salvor * constants.ps_check_time_per_node;
            if (!event.rediscovery)
                throw std::invalid_argument(
                    "rm_time_cost: failed DSR salvage needs a rediscovery outcome");
            return event.ps->nodes_checked_to_origin * constants.ps_check_time_per_node +
                   rd_time_cost_dsr(schedule, *event.rediscovery, constants);
        }
        case Protocol::Dymo: {
            double cost = event.rerr_receive_time;
            if (event.rediscovery)
                cost += rd_time_cost_aodv_dymo(schedule, *event.rediscovery, constants);
            return cost;
        }
    }
    throw std::invalid_argument("rm_time_cost: unknown protocol");
}

CostBreakdown aggregate_costs(double e_rd, double e_rm, double t_rd, double t_rm) {
    if (e_rd < 0.0 || e_rm < 0.0 || t_rd < 0.0 || t_rm < 0.0)
        throw std::invalid_argument("aggregate_costs: negative input");
    CostBreakdown b;
    b.e_rd = e_rd;
    b.e_rm = e_rm;
    b.t_rd = t_rd;
    b.t_rm = t_rm;
    b.e_total = e_rd + e_rm;
    b.t_total = t_rd + t_rm;
    b.c_total = b.e_total * b.t_total;
    return b;
}

}  // namespace roam
