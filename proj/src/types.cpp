#include "roam/types.hpp"

#include <stdexcept>

namespace roam {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Aodv: return "aodv";
        case Protocol::Dsr: return "dsr";
        case Protocol::Dymo: return "dymo";
    }
    return "unknown";
}

std::optional<Protocol> protocol_from_name(std::string_view name) {
    if (name == "aodv" || name == "AODV") return Protocol::Aodv;
    if (name == "dsr" || name == "DSR") return Protocol::Dsr;
    if (name == "dymo" || name == "DYMO") return Protocol::Dymo;
    return std::nullopt;
}

void NetworkProfile::validate() const {
    if (p_broadcast < 0.0 || p_broadcast > 1.0)
        throw std::invalid_argument("NetworkProfile: p_broadcast outside [0,1]");
    if (d_avg < 0.0)
        throw std::invalid_argument("NetworkProfile: negative d_avg");
    for (double f : d_f)
        if (f < 0.0) throw std::invalid_argument("NetworkProfile: negative d_f entry");
}

void ProtocolConstants::validate() const {
    if (ttl_start < 1) throw std::invalid_argument("ProtocolConstants: ttl_start < 1");
    if (ttl_increment < 1) throw std::invalid_argument("ProtocolConstants: ttl_increment < 1");
    if (ttl_threshold > net_diameter)
        throw std::invalid_argument("ProtocolConstants: ttl_threshold > net_diameter");
    if (rreq_retries < 0) throw std::invalid_argument("ProtocolConstants: rreq_retries < 0");
    if (nonprop_request_timeout <= 0.0 || node_traversal_time <= 0.0 || hello_interval <= 0.0 ||
        ps_check_time_per_node <= 0.0)
        throw std::invalid_argument("ProtocolConstants: non-positive time constant");
    if (discovery_hop_limit < 1)
        throw std::invalid_argument("ProtocolConstants: discovery_hop_limit < 1");
}

ProtocolConstants ProtocolConstants::aodv_defaults() {
    ProtocolConstants k;
    k.protocol = Protocol::Aodv;
    k.ttl_start = 2;
    k.ttl_increment = 2;
    k.ttl_threshold = 7;
    k.net_diameter = 35;
    k.rreq_retries = 2;  // RREQ_TRIES
    k.discovery_hop_limit = 35;
    return k;
}

ProtocolConstants ProtocolConstants::dsr_defaults() {
    ProtocolConstants k;
    k.protocol = Protocol::Dsr;
    k.ttl_start = 1;  // non-propagating first ring
    k.ttl_increment = 2;
    k.ttl_threshold = 7;
    k.net_diameter = 255;
    k.rreq_retries = 2;  // MaxMainRexmt
    k.discovery_hop_limit = 255;
    return k;
}

ProtocolConstants ProtocolConstants::dymo_defaults() {
    ProtocolConstants k;
    k.protocol = Protocol::Dymo;
    k.ttl_start = 2;
    k.ttl_increment = 2;
    k.ttl_threshold = 7;
    k.net_diameter = 10;
    k.rreq_retries = 3;  // RREQ_RETRIES
    k.discovery_hop_limit = 10;
    return k;
}

ProtocolConstants ProtocolConstants::defaults_for(Protocol p) {
    switch (p) {
        case Protocol::Aodv: return aodv_defaults();
        case Protocol::Dsr: return dsr_defaults();
        case Protocol::Dymo: return dymo_defaults();
    }
    return aodv_defaults();
}

}  // namespace roam
