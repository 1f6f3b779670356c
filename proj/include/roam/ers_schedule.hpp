#ifndef ROAM_ERS_SCHEDULE_HPP_
#define ROAM_ERS_SCHEDULE_HPP_

#include <iosfwd>
#include <vector>

#include "roam/types.hpp"

namespace roam {

// Ordered expanding-ring plan for one discovery attempt: ring TTLs, the
// timeout armed per ring, the retry budget folded in as trailing
// full-diameter rings, and the TTL cap. Immutable once built.
struct RingSchedule {
    Protocol protocol = Protocol::Aodv;
    std::vector<int> ttls;
    std::vector<double> timeouts;
    int retries_at_max = 0;
    int max_ttl_cap = 0;

    int ring_count() const { return static_cast<int>(ttls.size()); }
    void validate() const;  // throws std::invalid_argument
};

// Builds the per-protocol ring ladder from its constants.
// AODV/DYMO: ttl_start, +ttl_increment while <= ttl_threshold, then
// net_diameter plus rreq_retries repeats; ring timeout is
// 2*node_traversal_time*(ttl + timeout_buffer).
// DSR: one non-propagating TTL-1 ring with a flat nonprop timeout, then
// 1 + rreq_retries propagating rings at discovery_hop_limit with BEB
// timeouts doubling from the nonprop value.
RingSchedule build_schedule(const ProtocolConstants& constants);

// 2^(ring_index-1) * tau, ring_index >= 1.
double beb_timeout(int ring_index, double tau);

// Diagnostic table: ring index, TTL, timeout.
void print_schedule(std::ostream& os, const RingSchedule& schedule);

}  // namespace roam

#endif  // ROAM_ERS_SCHEDULE_HPP_
