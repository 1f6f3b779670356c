#ifndef ROAM_COST_MODEL_HPP_
#define ROAM_COST_MODEL_HPP_

#include <optional>
#include <vector>

#include "roam/ers_schedule.hpp"
#include "roam/types.hpp"

namespace roam {

// How one expanding-ring discovery ended: either no reply at all, or the
// first reply arrived while ring `reply_ring` (1-based) was open.
// replier_hop_counts holds one hop distance per replying node.
struct DiscoveryOutcome {
    std::optional<int> reply_ring;
    std::vector<int> replier_hop_counts;

    static DiscoveryOutcome no_reply() { return {}; }
    static DiscoveryOutcome reply_at_ring(int ring, std::vector<int> hops);

    bool replied() const { return reply_ring.has_value(); }
};

struct LlrAttempt {
    int min_repair_ttl = 0;   // last known hop count to the destination
    int hops_to_sender = 0;   // hops from the undeliverable packet's sender
    bool succeeded = false;
};

struct PsAttempt {
    int nodes_checked_to_salvor = 0;  // n_BLB .. n_PS inclusive
    int nodes_checked_to_origin = 0;  // n_BLB .. n_orig inclusive
    bool succeeded = false;
};

// One route-maintenance episode, as the model sees it. At most one of
// llr/ps is populated, matching the protocol. `rediscovery` carries the
// outcome of the re-discovery that followed, when one was performed; its
// cost is priced against the schedule passed to rm_time_cost.
struct MaintenanceEvent {
    double link_active_time = 0.0;  // seconds the broken link carried traffic
    int route_hop_count = 0;
    int rerr_transmissions = 0;
    std::optional<LlrAttempt> llr;
    std::optional<PsAttempt> ps;
    double rerr_receive_time = 0.0;  // detection point -> originator
    std::optional<DiscoveryOutcome> rediscovery;
};

// Energy in control-packet transmissions, time in seconds, and their
// product. e_total/t_total/c_total are derived, never set directly.
struct CostBreakdown {
    double e_rd = 0.0;
    double e_rm = 0.0;
    double t_rd = 0.0;
    double t_rm = 0.0;
    double e_total = 0.0;
    double t_total = 0.0;
    double c_total = 0.0;
};

// Expected rebroadcast count of a blind flood reaching `hops` hops:
// P*d_avg for one hop, plus d_avg * sum_i P^(i+1) * prod_j d_f[j] beyond.
double blind_flood_cost(int hops, const NetworkProfile& profile);

// Blind-flood cost with the ring's TTL as the hop bound.
double ring_energy_cost(int ttl, const NetworkProfile& profile);

// Cumulative RREQ cost of an ERS discovery: all rings when no reply came,
// otherwise rings 1..reply_ring.
double ers_rreq_energy_cost(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                            const NetworkProfile& profile);

// ERS RREQ cost plus one unicast transmission per RREP forwarding hop.
double rd_energy_cost(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                      const NetworkProfile& profile);

// HELLO traffic paid to watch a route: (active time / interval) * hops.
// DSR pays nothing; its link layer reports breaks.
double link_monitor_cost(const MaintenanceEvent& event, const ProtocolConstants& constants);

// Repair-ring TTL: max(min_repair_ttl, ceil(hops/2)) + local_add_ttl.
int llr_ttl(int min_repair_ttl, int hops_to_sender, const ProtocolConstants& constants);

// Flood cost of the single local-repair ring.
double llr_energy_cost(int llr_ttl_value, const NetworkProfile& profile);

// Maintenance energy per protocol: AODV adds monitoring, the repair
// flood, and RERRs; DSR adds one salvage packet per checked node plus
// RERRs; DYMO adds monitoring plus RERRs.
double rm_energy_cost(Protocol protocol, const MaintenanceEvent& event,
                      const NetworkProfile& profile, const ProtocolConstants& constants);

// DSR discovery latency: flat nonprop timeout if ring 1 replied,
// otherwise the BEB partial (or full) sum 2^(i-1) * tau.
double rd_time_cost_dsr(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                        const ProtocolConstants& constants);

// AODV/DYMO discovery latency: sum of 2*node_traversal_time *
// (ttl + timeout_buffer) over the rings opened.
double rd_time_cost_aodv_dymo(const RingSchedule& schedule, const DiscoveryOutcome& outcome,
                              const ProtocolConstants& constants);

// Latency of the single local-repair ring.
double llr_time_cost(int llr_ttl_value, const ProtocolConstants& constants);

// Maintenance latency per protocol. AODV: repair ring, plus RERR travel
// when the repair failed, plus re-discovery when one ran. DSR: per-node
// cache checks, plus re-discovery on salvage failure. DYMO: RERR travel,
// plus re-discovery when one ran.
double rm_time_cost(Protocol protocol, const MaintenanceEvent& event,
                    const RingSchedule& schedule, const ProtocolConstants& constants);

// Fills a CostBreakdown with e/t sums and their product.
CostBreakdown aggregate_costs(double e_rd, double e_rm, double t_rd, double t_rm);

}  // namespace roam

#endif  // ROAM_COST_MODEL_HPP_
