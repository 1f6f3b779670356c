#include "roam/proto/table_node.hpp"

#include <algorithm>

#include "roam/cost_model.hpp"

namespace roam::proto {

TableNode::TableNode(int id, sim::Network& net, const ProtocolConstants& constants,
                     RingSchedule schedule, sim::Rng rng, NodeOptions options)
    : id_(id),
      net_(net),
      constants_(constants),
      schedule_(std::move(schedule)),
      rng_(rng),
      opts_(options),
      use_grat_(constants.protocol == Protocol::Aodv),
      use_llr_(constants.protocol == Protocol::Aodv),
      table_(options.route_lifetime) {}

Packet TableNode::make_control(PacketKind kind) const {
    Packet p;
    p.kind = kind;
    p.size_bytes = net_.params().control_packet_bytes;
    return p;
}

void TableNode::start() {
    // Staggered HELLO phase keeps same-tick broadcasts deterministic
    // without synchronizing every node on the exact same timestamp.
    const double phase = constants_.hello_interval + (id_ % 97) * 1e-3;
    net_.events().schedule(net_.now() + phase, sim::EventKind::Timer, [this] { hello_tick(); },
                           id_);
}

void TableNode::hello_tick() {
    const double now = net_.now();
    if (net_.route_activity_covers(id_, now)) {
        auto& stats = net_.ledger().hello[static_cast<std::size_t>(id_)];
        ++stats.hellos_sent;
        Packet hello = make_control(PacketKind::Hello);
        hello.uid = net_.new_uid();
        hello.origin = id_;
        hello.ttl = 0;
        net_.broadcast(id_, hello);
    }

    // A next hop that fell silent while its route was actively carrying
    // traffic is declared broken after hello_loss_tolerance quiet
    // intervals (plus half an interval of phase slack).
    const double interval = constants_.hello_interval;
    const double silence_limit = (opts_.hello_loss_tolerance + 0.5) * interval;
    std::vector<int> broken;
    for (const auto& [dest, e] : table_.entries()) {
        if (e.state != RouteState::Valid || e.expiry <= now) continue;
        if (now - e.last_used > interval) continue;          // idle, nothing expected
        if (now - e.installed_at <= silence_limit) continue; // too young to judge
        auto heard = last_heard_.find(e.next_hop);
        const double last = heard == last_heard_.end() ? e.installed_at : heard->second;
        if (now - last > silence_limit) broken.push_back(e.next_hop);
    }
    for (int hop : broken) break_link(hop, -1);

    net_.events().schedule(now + interval, sim::EventKind::Timer, [this] { hello_tick(); }, id_);
}

void TableNode::install_route(int dest, int next_hop, int hop_count, int seq_no) {
    table_.update(dest, next_hop, hop_count, seq_no, net_.now());
    net_.check_route_loops(dest);
}

std::optional<int> TableNode::table_next_hop(int destination) const {
    const RouteEntry* e = table_.usable(destination, net_.now());
    if (!e) return std::nullopt;
    return e->next_hop;
}

// ---------------------------------------------------------------------------
// Data path
// ---------------------------------------------------------------------------

void TableNode::send_data(int destination, Packet data) {
    ++net_.ledger().data_originated;
    data.origin = id_;
    data.target = destination;
    if (destination == id_) {
        ++net_.ledger().data_delivered;
        net_.ledger().e2ed_sum += net_.now() - data.created_at;
        ++net_.ledger().e2ed_count;
        return;
    }
    if (table_.usable(destination, net_.now())) {
        forward_data(std::move(data));
        return;
    }
    if (auto it = repairs_.find(destination); it != repairs_.end()) {
        it->second.buffered.push_back(std::move(data));
        if (it->second.buffered.size() > opts_.queue_capacity) {
            it->second.buffered.pop_front();
            ++net_.ledger().data_dropped;
        }
        return;
    }
    enqueue_data(std::move(data));
    ensure_session(destination);
}

void TableNode::forward_data(Packet p) {
    const RouteEntry* e = table_.usable(p.target, net_.now());
    ++p.hop_count;
    const int next = e->next_hop;
    table_.refresh(p.target, net_.now());
    if (const RouteEntry* rev = table_.usable(p.origin, net_.now()); rev && p.origin != id_)
        table_.refresh(p.origin, net_.now());
    net_.unicast(id_, next, std::move(p));
}

void TableNode::enqueue_data(Packet p) {
    auto& q = data_queue_[p.target];
    q.push_back(std::move(p));
    if (q.size() > opts_.queue_capacity) {
        q.pop_front();  // oldest goes first
        ++net_.ledger().data_dropped;
    }
}

void TableNode::flush_queue(int dest) {
    auto it = data_queue_.find(dest);
    if (it == data_queue_.end()) return;
    while (!it->second.empty() && table_.usable(dest, net_.now())) {
        Packet p = std::move(it->second.front());
        it->second.pop_front();
        forward_data(std::move(p));
    }
    if (it->second.empty()) data_queue_.erase(it);
}

// ---------------------------------------------------------------------------
// Discovery (ERS)
// ---------------------------------------------------------------------------

void TableNode::ensure_session(int dest) {
    if (sessions_.count(dest)) return;  // coalesced
    Session s;
    s.ring_index = 0;
    sessions_[dest] = s;
    DiscoveryRecord rec;
    rec.destination = dest;
    discovery_log_[dest] = rec;
    emit_ring(dest);
}

void TableNode::emit_ring(int dest) {
    Session& s = sessions_.at(dest);
    s.gen = ++gen_counter_;
    const int ring_ttl = schedule_.ttls[static_cast<std::size_t>(s.ring_index)];
    discovery_log_[dest].rings_opened = s.ring_index + 1;

    ++own_seq_;
    Packet rreq = make_control(PacketKind::Rreq);
    rreq.uid = net_.new_uid();
    rreq.origin = id_;
    rreq.target = dest;
    rreq.rreq_id = ++rreq_counter_;
    rreq.orig_seq = own_seq_;
    // Re-requesting after a loss asks for a fresher sequence number, so
    // stale intermediate routes stay quiet.
    rreq.dest_seq = table_.ever_had(dest) ? table_.last_known_seq(dest) + 1 : 0;
    rreq.ttl = ring_ttl - 1;
    rreq.hop_count = 0;
    seen_rreqs_.emplace(id_, rreq.rreq_id);
    net_.broadcast(id_, rreq);

    const double timeout = schedule_.timeouts[static_cast<std::size_t>(s.ring_index)];
    const std::uint64_t gen = s.gen;
    net_.events().schedule(net_.now() + timeout, sim::EventKind::Timer,
                           [this, dest, gen] { on_ring_timeout(dest, gen); }, id_, dest);
}

void TableNode::on_ring_timeout(int dest, std::uint64_t gen) {
    auto it = sessions_.find(dest);
    if (it == sessions_.end() || it->second.gen != gen) return;
    if (table_.usable(dest, net_.now())) {  // answered through another path
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

void TableNode::finish_discovery(int dest) {
    auto it = sessions_.find(dest);
    if (it == sessions_.end()) return;
    auto& rec = discovery_log_[dest];
    if (rec.reply_ring == 0) rec.reply_ring = it->second.ring_index + 1;
    rec.completed = true;
    sessions_.erase(it);
    flush_queue(dest);
}

void TableNode::fail_discovery(int dest) {
    sessions_.erase(dest);
    auto& rec = discovery_log_[dest];
    rec.failed = true;
    rec.completed = true;
    auto q = data_queue_.find(dest);
    if (q != data_queue_.end()) {
        net_.ledger().data_dropped += q->second.size();
        data_queue_.erase(q);
    }
}

// ---------------------------------------------------------------------------
// Packet handling
// ---------------------------------------------------------------------------

void TableNode::on_packet(int from, const Packet& packet) {
    last_heard_[from] = net_.now();
    switch (packet.kind) {
        case PacketKind::Hello: return;
        case PacketKind::Rreq: handle_rreq(from, packet); return;
        case PacketKind::Rrep:
            net_.note_route_activity(id_, constants_.hello_interval);
            handle_rrep(from, packet);
            return;
        case PacketKind::Rerr: handle_rerr(from, packet); return;
        case PacketKind::Data:
            net_.note_route_activity(id_, constants_.hello_interval);
            handle_data(from, packet);
            return;
    }
}

void TableNode::handle_rreq(int from, const Packet& p) {
    // Reverse route to the originator, learned from the traversed copy.
    if (table_.update(p.origin, from, p.hop_count + 1, p.orig_seq, net_.now()))
        net_.check_route_loops(p.origin);

    if (!seen_rreqs_.emplace(p.origin, p.rreq_id).second) return;  // duplicate

    if (p.target == id_) {
        own_seq_ = std::max(own_seq_ + 1, p.dest_seq);
        const RouteEntry* rev = table_.usable(p.origin, net_.now());
        if (!rev) return;
        Packet rrep = make_control(PacketKind::Rrep);
        rrep.uid = net_.new_uid();
        rrep.origin = p.origin;
        rrep.target = id_;
        rrep.dest_seq = own_seq_;
        rrep.hop_count = 0;
        rrep.ttl = 0;
        net_.unicast(id_, rev->next_hop, std::move(rrep));
        return;
    }

    if (use_grat_ && p.origin != id_) {
        const RouteEntry* e = table_.usable(p.target, net_.now());
        if (e && e->seq_no >= p.dest_seq && e->next_hop != from) {
            const RouteEntry* rev = table_.usable(p.origin, net_.now());
            if (rev) {
                Packet grat = make_control(PacketKind::Rrep);
                grat.uid = net_.new_uid();
                grat.origin = p.origin;
                grat.target = p.target;
                grat.dest_seq = e->seq_no;
                grat.hop_count = e->hop_count;
                grat.gratuitous = true;
                net_.unicast(id_, rev->next_hop, std::move(grat));
                return;  // answered; no rebroadcast
            }
        }
    }

    if (p.ttl > 0 && p.origin != id_ && rng_.bernoulli(opts_.p_forward)) {
        Packet fwd = p;
        --fwd.ttl;
        ++fwd.hop_count;
        net_.broadcast(id_, std::move(fwd));
    }
}

void TableNode::handle_rrep(int from, const Packet& p) {
    if (table_.update(p.target, from, p.hop_count + 1, p.dest_seq, net_.now()))
        net_.check_route_loops(p.target);

    if (p.origin == id_) {
        auto& rec = discovery_log_[p.target];
        rec.replier_hops.push_back(p.hop_count + 1);

        if (auto rit = repairs_.find(p.target); rit != repairs_.end()) {
            if (table_.usable(p.target, net_.now())) {
                auto buffered = std::move(rit->second.buffered);
                repairs_.erase(rit);
                while (!buffered.empty() && table_.usable(p.target, net_.now())) {
                    forward_data(std::move(buffered.front()));
                    buffered.pop_front();
                }
                net_.ledger().data_dropped += buffered.size();
            }
            return;
        }
        if (sessions_.count(p.target) && table_.usable(p.target, net_.now()))
            finish_discovery(p.target);
        return;
    }

    const RouteEntry* rev = table_.usable(p.origin, net_.now());
    if (!rev) return;  // reverse path evaporated
    table_.refresh(p.origin, net_.now());
    Packet fwd = p;
    ++fwd.hop_count;
    net_.unicast(id_, rev->next_hop, std::move(fwd));
}

void TableNode::handle_rerr(int from, const Packet& p) {
    for (const auto& [dest, bumped_seq] : p.unreachable) {
        const RouteEntry* e = table_.find(dest);
        if (!e || e->state != RouteState::Valid || e->next_hop != from) continue;
        table_.invalidate(dest, bumped_seq);
        // Re-start discovery when traffic is waiting; otherwise the next
        // data packet will trigger it.
        if (data_queue_.count(dest) && !sessions_.count(dest)) {
            ensure_session(dest);
        } else {
            send_rerr_upstream(dest, bumped_seq);
        }
    }
}

void TableNode::send_rerr_upstream(int dest, int bumped_seq) {
    auto up = last_upstream_.find(dest);
    if (up == last_upstream_.end()) return;
    Packet rerr = make_control(PacketKind::Rerr);
    rerr.uid = net_.new_uid();
    rerr.origin = id_;
    rerr.ttl = 0;
    rerr.unreachable.emplace_back(dest, bumped_seq);
    net_.unicast(id_, up->second, std::move(rerr));
}

void TableNode::handle_data(int from, Packet p) {
    last_upstream_[p.target] = from;
    if (p.target == id_) {
        ++net_.ledger().data_delivered;
        net_.ledger().e2ed_sum += net_.now() - p.created_at;
        ++net_.ledger().e2ed_count;
        return;
    }
    if (table_.usable(p.target, net_.now())) {
        forward_data(std::move(p));
        return;
    }
    if (auto it = repairs_.find(p.target); it != repairs_.end()) {
        it->second.buffered.push_back(std::move(p));
        if (it->second.buffered.size() > opts_.queue_capacity) {
            it->second.buffered.pop_front();
            ++net_.ledger().data_dropped;
        }
        return;
    }
    // Mid-route with no usable entry: report back and drop.
    ++net_.ledger().data_dropped;
    const int bumped = table_.last_known_seq(p.target) + 1;
    table_.invalidate(p.target, bumped);
    Packet rerr = make_control(PacketKind::Rerr);
    rerr.uid = net_.new_uid();
    rerr.origin = id_;
    rerr.ttl = 0;
    rerr.unreachable.emplace_back(p.target, bumped);
    net_.unicast(id_, from, std::move(rerr));
}

// ---------------------------------------------------------------------------
// Link breaks and local repair
// ---------------------------------------------------------------------------

void TableNode::on_link_failure(int next_hop, const Packet& undelivered) {
    last_heard_.erase(next_hop);
    if (undelivered.kind == PacketKind::Data) {
        Packet data = undelivered;
        if (use_llr_ && data.origin != id_) {
            start_local_repair(next_hop, std::move(data));
            return;
        }
        break_link(next_hop, data.target);
        if (data.origin == id_) {
            // Re-queue ahead of newer traffic and re-discover.
            auto& q = data_queue_[data.target];
            q.push_front(std::move(data));
            if (q.size() > opts_.queue_capacity) {
                q.pop_back();
                ++net_.ledger().data_dropped;
            }
            ensure_session(data.target);
        } else {
            ++net_.ledger().data_dropped;
            send_rerr_upstream(data.target, table_.last_known_seq(data.target));
        }
        return;
    }
    break_link(next_hop, -1);
}

// Invalidates every valid entry through `next_hop`; `spare_dest` is left
// to the caller's own handling.
void TableNode::break_link(int next_hop, int spare_dest) {
    std::vector<int> affected;
    for (auto& [dest, e] : table_.entries()) {
        if (dest == spare_dest) continue;
        if (e.state == RouteState::Valid && e.next_hop == next_hop) affected.push_back(dest);
    }
    for (int dest : affected) {
        const int bumped = table_.last_known_seq(dest) + 1;
        table_.invalidate(dest, bumped);
        if (data_queue_.count(dest) && !sessions_.count(dest))
            ensure_session(dest);
        else if (last_upstream_.count(dest))
            send_rerr_upstream(dest, bumped);
    }
}

void TableNode::start_local_repair(int next_hop, Packet data) {
    const int dest = data.target;
    break_link(next_hop, dest);

    if (auto it = repairs_.find(dest); it != repairs_.end()) {
        it->second.buffered.push_back(std::move(data));  // coalesce
        if (it->second.buffered.size() > opts_.queue_capacity) {
            it->second.buffered.pop_front();
            ++net_.ledger().data_dropped;
        }
        return;
    }

    RouteEntry* e = table_.find(dest);
    const int min_repair = e ? e->hop_count : 1;
    const int repair_ttl = llr_ttl(min_repair, data.hop_count, constants_);
    const int requested_seq = table_.last_known_seq(dest) + 1;
    if (e) {
        e->state = RouteState::UnderRepair;
        e->seq_no = std::max(e->seq_no, requested_seq - 1);
    }

    RepairSession repair;
    repair.gen = ++gen_counter_;
    repair.buffered.push_back(std::move(data));
    const std::uint64_t gen = repair.gen;
    repairs_[dest] = std::move(repair);

    ++own_seq_;
    Packet rreq = make_control(PacketKind::Rreq);
    rreq.uid = net_.new_uid();
    rreq.origin = id_;
    rreq.target = dest;
    rreq.rreq_id = ++rreq_counter_;
    rreq.orig_seq = own_seq_;
    rreq.dest_seq = requested_seq;
    rreq.ttl = repair_ttl - 1;
    rreq.hop_count = 0;
    seen_rreqs_.emplace(id_, rreq.rreq_id);
    net_.broadcast(id_, rreq);

    const double timeout = llr_time_cost(repair_ttl, constants_);
    net_.events().schedule(net_.now() + timeout, sim::EventKind::Timer,
                           [this, dest, gen] { on_repair_timeout(dest, gen); }, id_, dest);
}

void TableNode::on_repair_timeout(int dest, std::uint64_t gen) {
    auto it = repairs_.find(dest);
    if (it == repairs_.end() || it->second.gen != gen) return;
    if (table_.usable(dest, net_.now())) {  // repaired just in time
        auto buffered = std::move(it->second.buffered);
        repairs_.erase(it);
        while (!buffered.empty() && table_.usable(dest, net_.now())) {
            forward_data(std::move(buffered.front()));
            buffered.pop_front();
        }
        net_.ledger().data_dropped += buffered.size();
        return;
    }
    const int bumped = table_.last_known_seq(dest) + 1;
    table_.invalidate(dest, bumped);
    net_.ledger().data_dropped += it->second.buffered.size();
    repairs_.erase(it);
    send_rerr_upstream(dest, bumped);
}

}  // namespace roam::proto
