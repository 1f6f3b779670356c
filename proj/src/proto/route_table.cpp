#include "roam/proto/route_table.hpp"

#include <algorithm>

namespace roam::proto {

RouteEntry* RouteTable::find(int dest) {
    auto it = entries_.find(dest);
    return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RouteTable::find(int dest) const {
    auto it = entries_.find(dest);
    return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RouteTable::usable(int dest, double now) const {
    const RouteEntry* e = find(dest);
    if (!e || e->state != RouteState::Valid || e->expiry <= now) return nullptr;
    return e;
}

bool RouteTable::update(int dest, int next_hop, int hop_count, int seq_no, double now) {
    RouteEntry* e = find(dest);
    if (!e) {
        RouteEntry fresh;
        fresh.destination = dest;
        fresh.next_hop = next_hop;
        fresh.hop_count = hop_count;
        fresh.seq_no = seq_no;
        fresh.expiry = now + lifetime_;
        fresh.state = RouteState::Valid;
        fresh.last_used = now;
        fresh.installed_at = now;
        entries_.emplace(dest, fresh);
        return true;
    }
    const bool stale_entry = e->state != RouteState::Valid || e->expiry <= now;
    const bool accept = seq_no > e->seq_no ||
                        (seq_no == e->seq_no && (stale_entry || hop_count < e->hop_count));
    e->seq_no = std::max(e->seq_no, seq_no);
    if (!accept) return false;
    e->next_hop = next_hop;
    e->hop_count = hop_count;
    e->expiry = now + lifetime_;
    e->state = RouteState::Valid;
    e->last_used = now;
    e->installed_at = now;
    return true;
}

void RouteTable::invalidate(int dest, int bumped_seq) {
    RouteEntry* e = find(dest);
    if (!e) return;
    e->state = RouteState::Invalid;
    e->seq_no = std::max(e->seq_no, bumped_seq);
}

int RouteTable::last_known_seq(int dest) const {
    const RouteEntry* e = find(dest);
    return e ? e->seq_no : 0;
}

void RouteTable::refresh(int dest, double now) {
    RouteEntry* e = find(dest);
    if (!e || e->state != RouteState::Valid) return;
    e->last_used = now;
    e->expiry = now + lifetime_;
}

}  // namespace roam::proto
