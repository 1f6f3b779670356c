#include "roam/sim/ledger.hpp"

namespace roam::sim {

void Ledger::count_tx(const proto::Packet& p) {
    switch (p.kind) {
        case proto::PacketKind::Rreq:
            ++rreq_tx;
            if (p.salvage) ++salvage_probe_tx;
            break;
        case proto::PacketKind::Rrep:
            ++rrep_tx;
            if (p.gratuitous) ++grat_rrep_tx;
            break;
        case proto::PacketKind::Rerr: ++rerr_tx; break;
        case proto::PacketKind::Hello: ++hello_tx; break;
        case proto::PacketKind::Data: ++data_tx; break;
    }
}

void InvariantMonitor::on_rreq_tx(int node, int origin, std::uint32_t rreq_id) {
    if (!rreq_tx_seen.emplace(node, origin, rreq_id).second) ++duplicate_rreq_tx;
}

void InvariantMonitor::on_tx_ttl(int ttl) {
    if (ttl < 0) ++negative_ttl;
}

void InvariantMonitor::on_event_time(double t) {
    if (t < last_event_time) ++clock_regressions;
    last_event_time = t;
}

}  // namespace roam::sim
