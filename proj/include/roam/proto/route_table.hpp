#ifndef ROAM_PROTO_ROUTE_TABLE_HPP_
#define ROAM_PROTO_ROUTE_TABLE_HPP_

#include <map>

namespace roam::proto {

enum class RouteState { Valid, Invalid, UnderRepair };

struct RouteEntry {
    int destination = -1;
    int next_hop = -1;
    int hop_count = 0;
    int seq_no = 0;
    double expiry = 0.0;
    RouteState state = RouteState::Invalid;
    double last_used = -1.0;
    double installed_at = 0.0;
};

// AODV/DYMO distance-vector table. The sequence number stored for a
// destination never decreases; fresher or equal-and-shorter information
// replaces an entry, anything staler is ignored.
class RouteTable {
  public:
    explicit RouteTable(double lifetime) : lifetime_(lifetime) {}

    double lifetime() const { return lifetime_; }

    RouteEntry* find(int dest);
    const RouteEntry* find(int dest) const;

    // Entry usable for forwarding: Valid and not expired.
    const RouteEntry* usable(int dest, double now) const;

    // Applies the update rule; returns true when the route changed.
    bool update(int dest, int next_hop, int hop_count, int seq_no, double now);

    // Marks the entry Invalid and raises its sequence number.
    void invalidate(int dest, int bumped_seq);

    // Last sequence number ever seen for dest (0 when unknown).
    int last_known_seq(int dest) const;
    bool ever_had(int dest) const { return entries_.count(dest) > 0; }

    void refresh(int dest, double now);

    std::map<int, RouteEntry>& entries() { return entries_; }
    const std::map<int, RouteEntry>& entries() const { return entries_; }

  private:
    double lifetime_;
    std::map<int, RouteEntry> entries_;
};

}  // namespace roam::proto

#endif  // ROAM_PROTO_ROUTE_TABLE_HPP_
