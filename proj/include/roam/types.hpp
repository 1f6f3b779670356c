#ifndef ROAM_TYPES_HPP_
#define ROAM_TYPES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace roam {

enum class Protocol { Aodv, Dsr, Dymo };

const char* protocol_name(Protocol p);
std::optional<Protocol> protocol_from_name(std::string_view name);

// Flooding statistics of a network as seen from one source: broadcast
// probability P_r (= P_S), mean node degree, and expected forward degree
// per hop. d_f is 1-indexed conceptually; d_f[0] holds the hop-1 value.
struct NetworkProfile {
    double p_broadcast = 1.0;
    double d_avg = 0.0;
    std::vector<double> d_f;

    void validate() const;  // throws std::invalid_argument
};

// Per-protocol routing constants. Times are seconds; timeout_buffer is a
// dimensionless TTL pad added inside ring-timeout terms.
struct ProtocolConstants {
    Protocol protocol = Protocol::Aodv;
    int ttl_start = 2;
    int ttl_increment = 2;
    int ttl_threshold = 7;
    int net_diameter = 35;
    int rreq_retries = 2;
    double nonprop_request_timeout = 0.030;
    int discovery_hop_limit = 255;
    double node_traversal_time = 0.040;
    double timeout_buffer = 2.0;
    int local_add_ttl = 2;
    double hello_interval = 1.0;
    double ps_check_time_per_node = 0.001;

    void validate() const;  // throws std::invalid_argument

    static ProtocolConstants aodv_defaults();
    static ProtocolConstants dsr_defaults();
    static ProtocolConstants dymo_defaults();
    static ProtocolConstants defaults_for(Protocol p);
};

}  // namespace roam

#endif  // ROAM_TYPES_HPP_
