#include "roam/proto/dsr_node.hpp"

#include <algorithm>

namespace roam::proto {

DsrNode::DsrNode(int id, sim::Network& net, const ProtocolConstants& constants,
                 RingSchedule schedule, sim::Rng rng, NodeOptions options)
    : id_(id),
      net_(net),
      constants_(constants),
      schedule_(std::move(schedule)),
      rng_(rng),
      opts_(options),
      cache_(id) {}

Packet DsrNode::make_control(PacketKind kind) const {
    Packet p;
    p.kind = kind;
    p.size_bytes = net_.params().control_packet_bytes;
    return p;
}

void DsrNode::learn(const std::vector<int>& path) {
    if (path.size() >= 2) cache_.learn(path);
}

// ---------------------------------------------------------------------------
// Data path
// ---------------------------------------------------------------------------

void DsrNode::send_data(int destination, Packet data) {
    ++net_.ledger().data_originated;
    data.origin = id_;
    data.target = destination;
    if (destination == id_) {
        ++net_.ledger().data_delivered;
        net_.ledger().e2ed_sum += net_.now() - data.created_at;
        ++net_.ledger().e2ed_count;
        return;
    }
    if (auto route = cache_.lookup(destination)) {
        send_source_routed(std::move(data), std::move(*route));
        return;
    }
    auto& q = data_queue_[destination];
    q.push_back(std::move(data));
    if (q.size() > opts_.queue_capacity) {
        q.pop_front();
        ++net_.ledger().data_dropped;
    }
    ensure_session(destination);
}

void DsrNode::send_source_routed(Packet data, std::vector<int> route) {
    if (has_node_repeats(route)) {
        ++net_.monitor().dsr_route_node_repeats;
        ++net_.ledger().data_dropped;
        return;
    }
    data.route = std::move(route);
    data.route_pos = 1;  // receiver's index
    const int next = data.route[1];
    net_.unicast(id_, next, std::move(data));
}

void DsrNode::handle_data(Packet p) {
    learn(p.route);
    const int my_index = p.route_pos;
    if (p.target == id_ || my_index + 1 >= static_cast<int>(p.route.size())) {
        ++net_.ledger().data_delivered;
        net_.ledger().e2ed_sum += net_.now() - p.created_at;
        ++net_.ledger().e2ed_count;
        return;
    }
    ++p.hop_count;
    p.route_pos = my_index + 1;
    const int next = p.route[static_cast<std::size_t>(my_index + 1)];
    net_.unicast(id_, next, std::move(p));
}

// ---------------------------------------------------------------------------
// Discovery (ERS over the DSR schedule)
// ---------------------------------------------------------------------------

void DsrNode::ensure_session(int dest) {
    if (sessions_.count(dest)) return;  // coalesced
    Session s;
    sessions_[dest] = s;
    DiscoveryRecord rec;
    rec.destination = dest;
    discovery_log_[dest] = rec;
    emit_ring(dest);
}

void DsrNode::emit_ring(int dest) {
    // A route overheard since the last ring satisfies the discovery.
    if (cache_.lookup(dest)) {
        finish_discovery(dest);
        return;
    }
    Session& s = sessions_.at(dest);
    s.gen = ++gen_counter_;
    const int ring_ttl = schedule_.ttls[static_cast<std::size_t>(s.ring_index)];
    discovery_log_[dest].rings_opened = s.ring_index + 1;

    Packet rreq = make_control(PacketKind::Rreq);
    rreq.uid = net_.new_uid();
    rreq.origin = id_;
    rreq.target = dest;
    rreq.rreq_id = ++rreq_counter_;
    rreq.ttl = ring_ttl - 1;
    rreq.hop_count = 0;
    rreq.route = {id_};
    rreq.broken_links = pending_broken_;  // piggybacked RERR metadata
    seen_rreqs_.emplace(id_, rreq.rreq_id);
    net_.broadcast(id_, rreq);

    const double timeout = schedule_.timeouts[static_cast<std::size_t>(s.ring_index)];
    const std::uint64_t gen = s.gen;
    net_.events().schedule(net_.now() + timeout, sim::EventKind::Timer,
                           [this, dest, gen] { on_ring_timeout(dest, gen); }, id_, dest);
}

void DsrNode::on_ring_timeout(int dest, std::uint64_t gen) {
    auto it = sessions_.find(dest);
    if (it == sessions_.end() || it->second.gen != gen) return;
    if (cache_.lookup(dest)) {
        finish_discovery(dest);
        return;
    }
    ++it->second.ring_index;
    if (it->second.ring_index >= schedule_.ring_count()) {
        fail_discovery(dest);
        return;
    }
    emit_ring(dest);
}

void DsrNode::finish_discovery(int dest) {
    auto it = sessions_.find(dest);
    if (it == sessions_.end()) return;
    auto& rec = discovery_log_[dest];
    if (rec.reply_ring == 0) rec.reply_ring = it->second.ring_index + 1;
    rec.completed = true;
    sessions_.erase(it);
    pending_broken_.clear();
    flush_queue(dest);
}

void DsrNode::fail_discovery(int dest) {
    sessions_.erase(dest);
    auto& rec = discovery_log_[dest];
    rec.failed = true;
    rec.completed = true;
    pending_broken_.clear();
    auto q = data_queue_.find(dest);
    if (q != data_queue_.end()) {
        net_.ledger().data_dropped += q->second.size();
        data_queue_.erase(q);
    }
}

void DsrNode::flush_queue(int dest) {
    auto it = data_queue_.find(dest);
    if (it == data_queue_.end()) return;
    while (!it->second.empty()) {
        auto route = cache_.lookup(dest);
        if (!route) {
            ensure_session(dest);
            return;
        }
        Packet p = std::move(it->second.front());
        it->second.pop_front();
        send_source_routed(std::move(p), std::move(*route));
    }
    data_queue_.erase(it);
}

// ---------------------------------------------------------------------------
// Packet handling
// ---------------------------------------------------------------------------

void DsrNode::on_packet(int from, const Packet& packet) {
    switch (packet.kind) {
        case PacketKind::Hello: return;  // never sent by DSR
        case PacketKind::Rreq: handle_rreq(from, packet); return;
        case PacketKind::Rrep: handle_rrep(packet); return;
        case PacketKind::Rerr:
            for (const auto& [a, b] : packet.broken_links) cache_.purge_link(a, b);
            return;
        case PacketKind::Data: handle_data(packet); return;
    }
}

void DsrNode::handle_rreq(int from, const Packet& p) {
    (void)from;
    for (const auto& [a, b] : p.broken_links) cache_.purge_link(a, b);

    // Salvage probes are unicast route requests walking upstream.
    if (p.salvage) {
        Packet data = p;
        data.kind = PacketKind::Data;
        data.salvage = true;
        data.size_bytes = net_.params().data_packet_bytes;
        salvage_or_walk_back(p.route_pos, std::move(data), p.broken_links);
        return;
    }

    std::vector<int> full = p.route;
    full.push_back(id_);
    learn(full);  // every node on the request path learns the route

    if (!seen_rreqs_.emplace(p.origin, p.rreq_id).second) return;  // duplicate

    if (p.target == id_) {
        Packet rrep = make_control(PacketKind::Rrep);
        rrep.uid = net_.new_uid();
        rrep.origin = p.origin;
        rrep.target = id_;
        rrep.route = full;
        rrep.route_pos = static_cast<int>(full.size()) - 2;
        rrep.hop_count = 0;
        rrep.ttl = 0;
        net_.unicast(id_, full[full.size() - 2], std::move(rrep));
        return;
    }

    if (p.origin != id_) {
        if (auto tail = cache_.lookup(p.target)) {
            std::vector<int> spliced = full;
            spliced.insert(spliced.end(), tail->begin() + 1, tail->end());
            if (!has_node_repeats(spliced)) {
                Packet grat = make_control(PacketKind::Rrep);
                grat.uid = net_.new_uid();
                grat.origin = p.origin;
                grat.target = p.target;
                grat.gratuitous = true;
                grat.route = std::move(spliced);
                grat.route_pos = static_cast<int>(full.size()) - 2;
                grat.hop_count = 0;
                grat.ttl = 0;
                net_.unicast(id_, full[full.size() - 2], std::move(grat));
                return;  // no rebroadcast
            }
        }
    }

    if (p.ttl > 0 && p.origin != id_ &&
        std::find(p.route.begin(), p.route.end(), id_) == p.route.end() &&
        rng_.bernoulli(opts_.p_forward)) {
        Packet fwd = p;
        fwd.route = std::move(full);
        --fwd.ttl;
        ++fwd.hop_count;
        net_.broadcast(id_, std::move(fwd));
    }
}

void DsrNode::handle_rrep(const Packet& p) {
    learn(p.route);
    const int my_index = p.route_pos;
    if (my_index == 0 || p.origin == id_) {
        auto& rec = discovery_log_[p.target];
        rec.replier_hops.push_back(p.hop_count + 1);
        if (sessions_.count(p.target) && cache_.lookup(p.target)) finish_discovery(p.target);
        return;
    }
    Packet fwd = p;
    fwd.route_pos = my_index - 1;
    ++fwd.hop_count;
    net_.unicast(id_, p.route[static_cast<std::size_t>(my_index - 1)], std::move(fwd));
}

// ---------------------------------------------------------------------------
// Link feedback, salvaging, walk-back
// ---------------------------------------------------------------------------

void DsrNode::on_link_failure(int next_hop, const Packet& undelivered) {
    cache_.purge_link(id_, next_hop);

    if (undelivered.kind == PacketKind::Data) {
        const int my_index = undelivered.route_pos - 1;  // route_pos held the receiver
        salvage_or_walk_back(my_index, undelivered, {{id_, next_hop}});
        return;
    }
    if (undelivered.kind == PacketKind::Rreq && undelivered.salvage) {
        // Walk-back handoff failed too; the packet inside is lost.
        ++net_.ledger().data_dropped;
        return;
    }
    // A lost RREP/RERR: the ring timer or a later break covers it.
}

// Common salvage logic for the detecting node (with the failed packet in
// hand) and for upstream nodes reached by the walk-back probe.
void DsrNode::salvage_or_walk_back(int my_index, Packet data,
                                   std::vector<std::pair<int, int>> broken) {
    for (const auto& [a, b] : broken) cache_.purge_link(a, b);

    if (data.salvage_count < opts_.max_salvage) {
        if (auto alt = cache_.lookup(data.target)) {
            Packet salvaged = std::move(data);
            salvaged.kind = PacketKind::Data;
            salvaged.salvage = true;
            ++salvaged.salvage_count;
            salvaged.size_bytes = net_.params().data_packet_bytes;
            ++salvaged.hop_count;
            send_source_routed(std::move(salvaged), std::move(*alt));

            // Successful salvage: tell the neighborhood to drop the link.
            Packet rerr = make_control(PacketKind::Rerr);
            rerr.uid = net_.new_uid();
            rerr.origin = id_;
            rerr.ttl = 0;
            rerr.broken_links = std::move(broken);
            net_.broadcast(id_, rerr);
            return;
        }
    }

    if (my_index > 0) {
        // Hand the packet to the previous hop; Eq.-8-style salvage probe.
        Packet probe = std::move(data);
        probe.kind = PacketKind::Rreq;
        probe.salvage = true;
        probe.size_bytes = net_.params().control_packet_bytes;
        probe.route_pos = my_index - 1;
        probe.broken_links = std::move(broken);
        probe.ttl = 0;
        const int upstream = probe.route[static_cast<std::size_t>(my_index - 1)];
        net_.unicast(id_, upstream, std::move(probe));
        return;
    }

    // Back at the originator with no alternate anywhere: re-discover and
    // piggyback the broken links on the coming RREQs.
    for (const auto& link : broken) pending_broken_.push_back(link);
    Packet retry = std::move(data);
    retry.kind = PacketKind::Data;
    retry.salvage = false;
    retry.route.clear();
    retry.route_pos = 0;
    retry.size_bytes = net_.params().data_packet_bytes;
    const int dest = retry.target;
    auto& q = data_queue_[dest];
    q.push_front(std::move(retry));
    if (q.size() > opts_.queue_capacity) {
        q.pop_back();
        ++net_.ledger().data_dropped;
    }
    ensure_session(dest);
}

}  // namespace roam::proto
