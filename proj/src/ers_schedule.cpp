#include "roam/ers_schedule.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace roam {

void RingSchedule::validate() const {
    if (ttls.size() != timeouts.size())
        throw std::invalid_argument("RingSchedule: ttls/timeouts length mismatch");
    for (std::size_t i = 0; i < ttls.size(); ++i) {
        if (ttls[i] < 1) throw std::invalid_argument("RingSchedule: ttl < 1");
        if (ttls[i] > max_ttl_cap) throw std::invalid_argument("RingSchedule: ttl above cap");
        if (i > 0 && ttls[i] < ttls[i - 1])
            throw std::invalid_argument("RingSchedule: ttls decrease");
        if (timeouts[i] <= 0.0) throw std::invalid_argument("RingSchedule: non-positive timeout");
    }
}

double beb_timeout(int ring_index, double tau) {
    if (ring_index < 1) throw std::invalid_argument("beb_timeout: ring_index < 1");
    if (tau <= 0.0) throw std::invalid_argument("beb_timeout: tau <= 0");
    return std::ldexp(tau, ring_index - 1);
}

RingSchedule build_schedule(const ProtocolConstants& k) {
    k.validate();
    RingSchedule s;
    s.protocol = k.protocol;
    s.retries_at_max = k.rreq_retries;

    if (k.protocol == Protocol::Dsr) {
        s.max_ttl_cap = k.discovery_hop_limit;
        const double tau = k.nonprop_request_timeout;
        // Ring 1: non-propagating, flat tau. Propagating attempts jump
        // straight to the hop limit; their timers double from tau.
        s.ttls.push_back(1);
        s.timeouts.push_back(tau);
        for (int attempt = 0; attempt <= k.rreq_retries; ++attempt) {
            s.ttls.push_back(k.discovery_hop_limit);
            s.timeouts.push_back(beb_timeout(attempt + 1, tau));
        }
        s.validate();
        return s;
    }

    s.max_ttl_cap = k.net_diameter;
    const double tau1 = 2.0 * k.node_traversal_time;
    auto ring_timeout = [&](int ttl) { return tau1 * (ttl + k.timeout_buffer); };

    for (int ttl = k.ttl_start; ttl <= k.ttl_threshold; ttl += k.ttl_increment) {
        s.ttls.push_back(ttl);
        s.timeouts.push_back(ring_timeout(ttl));
    }
    for (int attempt = 0; attempt <= k.rreq_retries; ++attempt) {
        s.ttls.push_back(k.net_diameter);
        s.timeouts.push_back(ring_timeout(k.net_diameter));
    }
    s.validate();
    return s;
}

void print_schedule(std::ostream& os, const RingSchedule& s) {
    os << "# protocol=" << protocol_name(s.protocol) << " rings=" << s.ring_count()
       << " max_ttl_cap=" << s.max_ttl_cap << " retries_at_max=" << s.retries_at_max << "\n";
    os << "ring\tttl\ttimeout_s\n";
    for (int i = 0; i < s.ring_count(); ++i)
        os << (i + 1) << "\t" << s.ttls[i] << "\t" << s.timeouts[i] << "\n";
}

}  // namespace roam
