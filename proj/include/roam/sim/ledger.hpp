#ifndef ROAM_SIM_LEDGER_HPP_
#define ROAM_SIM_LEDGER_HPP_

#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "roam/proto/packet.hpp"

namespace roam::sim {

// Per-node HELLO bookkeeping used by the Eq.-10 style consistency check:
// hellos actually sent versus exact time covered by route activity.
struct NodeHelloStats {
    std::uint64_t hellos_sent = 0;
    double active_time = 0.0;
    std::uint64_t episodes = 0;
    double cover_end = -1.0;  // end of the current activity interval
};

// Transmission counters for one run. Receptions are not charged; all
// energy accounting is per transmission.
struct Ledger {
    std::uint64_t rreq_tx = 0;
    std::uint64_t rrep_tx = 0;
    std::uint64_t rerr_tx = 0;
    std::uint64_t hello_tx = 0;
    std::uint64_t data_tx = 0;

    std::uint64_t salvage_probe_tx = 0;   // subset of rreq_tx
    std::uint64_t salvaged_data_tx = 0;   // salvage events, one per salvor re-send
    std::uint64_t grat_rrep_tx = 0;       // subset of rrep_tx

    std::uint64_t data_originated = 0;
    std::uint64_t data_delivered = 0;
    std::uint64_t data_dropped = 0;

    double e2ed_sum = 0.0;
    std::uint64_t e2ed_count = 0;

    std::vector<NodeHelloStats> hello;

    void count_tx(const proto::Packet& p);
    std::uint64_t control_tx() const { return rreq_tx + rrep_tx + rerr_tx + hello_tx; }
};

// Counts violations of the run-wide structural invariants instead of
// aborting mid-run; tests assert the counters stay at zero.
struct InvariantMonitor {
    std::uint64_t duplicate_rreq_tx = 0;
    std::uint64_t negative_ttl = 0;
    std::uint64_t routing_loops = 0;
    std::uint64_t dsr_route_node_repeats = 0;
    std::uint64_t clock_regressions = 0;

    std::set<std::tuple<int, int, std::uint32_t>> rreq_tx_seen;  // (node, origin, rreq_id)
    double last_event_time = 0.0;

    void on_rreq_tx(int node, int origin, std::uint32_t rreq_id);
    void on_tx_ttl(int ttl);
    void on_event_time(double t);

    std::uint64_t total() const {
        return duplicate_rreq_tx + negative_ttl + routing_loops + dsr_route_node_repeats +
               clock_regressions;
    }
};

}  // namespace roam::sim

#endif  // ROAM_SIM_LEDGER_HPP_
