#include "roam/sim/network.hpp"

#include <ostream>
#include <set>
#include <stdexcept>

namespace roam::sim {

Network::Network(Topology topology, SimParams params)
    : topology_(std::move(topology)), params_(params) {
    ledger_.hello.assign(static_cast<std::size_t>(topology_.size()), {});
    events_.set_observer([this](const SimEvent& ev) {
        monitor_.on_event_time(ev.time);
        if (trace_) {
            *trace_ << ev.time << '\t' << event_kind_name(ev.kind) << '\t' << ev.node_a << '\t'
                    << ev.node_b << '\t' << ev.packet_id << '\n';
        }
    });
}

void Network::add_node(std::unique_ptr<NodeAgent> agent) {
    if (agent->id() != static_cast<int>(agents_.size()))
        throw std::invalid_argument("Network: node ids must be added in order");
    agents_.push_back(std::move(agent));
}

void Network::attach_mobility(double area_w, double area_h, double speed, double pause_time,
                              Rng rng) {
    mobility_.emplace(area_w, area_h, speed, pause_time, rng.fork(0x6d6f7665));
    mobility_speed_ = speed;
    mobility_->init(topology_);
}

void Network::add_flow(const CbrFlow& flow) {
    if (flow.source == flow.destination) throw std::invalid_argument("CbrFlow: source == dest");
    if (flow.interval <= 0.0) throw std::invalid_argument("CbrFlow: interval <= 0");
    flows_.push_back(flow);
}

void Network::set_trace(std::ostream* sink) { trace_ = sink; }

double Network::latency_for(int size_bytes) const {
    return size_bytes * 8.0 / params_.link_rate + params_.per_hop_delay;
}

void Network::schedule_mobility_step() {
    if (!mobility_ || mobility_speed_ <= 0.0) return;
    const double t = now() + params_.mobility_dt;
    if (t > run_end_) return;
    events_.schedule(t, EventKind::MobilityStep, [this] {
        mobility_->step(topology_, now(), params_.mobility_dt);
        schedule_mobility_step();
    });
}

void Network::schedule_flow_emission(std::size_t flow_index, double t) {
    const CbrFlow& flow = flows_[flow_index];
    if (t > flow.stop_time || t > run_end_) return;
    events_.schedule(
        t, EventKind::TrafficEmit,
        [this, flow_index] {
            const CbrFlow& f = flows_[flow_index];
            proto::Packet data;
            data.kind = proto::PacketKind::Data;
            data.uid = new_uid();
            data.origin = f.source;
            data.target = f.destination;
            data.created_at = now();
            data.size_bytes = f.packet_size;
            node(f.source).send_data(f.destination, std::move(data));
            schedule_flow_emission(flow_index, now() + f.interval);
        },
        flow.source, flow.destination);
}

void Network::run_until(double t_end) {
    run_end_ = t_end;
    if (!started_) {
        started_ = true;
        for (auto& a : agents_) a->start();
        schedule_mobility_step();
        for (std::size_t i = 0; i < flows_.size(); ++i)
            schedule_flow_emission(i, flows_[i].start_time);
    }
    while (!events_.empty() && events_.next_time() <= t_end) events_.advance();
}

void Network::count_transmission(int from, const proto::Packet& p) {
    (void)from;
    ledger_.count_tx(p);
    monitor_.on_tx_ttl(p.ttl);
}

void Network::broadcast(int from, proto::Packet p) {
    count_transmission(from, p);
    if (p.kind == proto::PacketKind::Rreq && !p.salvage)
        monitor_.on_rreq_tx(from, p.origin, p.rreq_id);
    const double t = now() + latency_for(p.size_bytes);
    for (int v : topology_.neighbors(from)) {
        events_.schedule(
            t, EventKind::PacketDelivery, [this, v, from, p] { node(v).on_packet(from, p); }, from,
            v, p.uid);
    }
}

void Network::unicast(int from, int to, proto::Packet p) {
    count_transmission(from, p);
    const double t = now() + latency_for(p.size_bytes);
    if (topology_.adjacent(from, to)) {
        events_.schedule(
            t, EventKind::PacketDelivery, [this, to, from, p] { node(to).on_packet(from, p); },
            from, to, p.uid);
    } else {
        events_.schedule(
            t, EventKind::LinkFeedback, [this, from, to, p] { node(from).on_link_failure(to, p); },
            from, to, p.uid);
    }
}

void Network::check_route_loops(int destination) {
    const int n = node_count();
    for (int start = 0; start < n; ++start) {
        if (!agents_[static_cast<std::size_t>(start)]->table_next_hop(destination)) continue;
        std::set<int> visited{start};
        int cur = start;
        for (int steps = 0; steps <= n; ++steps) {
            if (cur == destination) break;
            const auto next = node(cur).table_next_hop(destination);
            if (!next) break;
            if (!visited.insert(*next).second) {
                ++monitor_.routing_loops;
                break;
            }
            cur = *next;
        }
    }
}

void Network::note_route_activity(int nodeid, double window) {
    auto& h = ledger_.hello.at(static_cast<std::size_t>(nodeid));
    const double t = now();
    if (t >= h.cover_end) {
        ++h.episodes;
        h.active_time += window;
    } else {
        h.active_time += t + window - h.cover_end;
    }
    h.cover_end = t + window;
}

bool Network::route_activity_covers(int nodeid, double t) const {
    return ledger_.hello.at(static_cast<std::size_t>(nodeid)).cover_end > t;
}

}  // namespace roam::sim
