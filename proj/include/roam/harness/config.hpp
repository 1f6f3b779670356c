#ifndef ROAM_HARNESS_CONFIG_HPP_
#define ROAM_HARNESS_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "roam/types.hpp"

namespace roam::harness {

// Full description of one scenario point: area, population, movement,
// traffic, radio, protocol, and batch settings.
struct ScenarioConfig {
    std::string scenario = "custom";
    double area_w = 500.0;
    double area_h = 500.0;
    int node_count = 20;
    double speed = 15.0;       // m/s
    double pause_time = 2.0;   // s
    double duration = 120.0;   // s
    int flow_count = 6;
    int packet_size = 512;     // bytes
    double link_rate = 2e6;    // bits/s
    double cbr_interval = 0.25;
    double radio_range = 250.0;
    double per_hop_delay = 0.040;
    double p_forward = 1.0;
    Protocol protocol = Protocol::Aodv;
    ProtocolConstants constants = ProtocolConstants::aodv_defaults();
    std::uint64_t seed = 1;
    int runs = 5;
    double x = 0.0;  // x-axis value this point represents

    void validate() const;  // throws std::invalid_argument
    void set_protocol(Protocol p);
};

// Flat `key = value` sections: [scenario1] style headers, '#' comments.
using ConfigSections = std::map<std::string, std::map<std::string, std::string>>;

ConfigSections parse_config_text(const std::string& text);
ConfigSections parse_config_file(const std::string& path);

// Builds a scenario from `section`, also applying any
// [protocol.<name>] constants overrides present in the file.
ScenarioConfig scenario_from_config(const ConfigSections& sections, const std::string& section);

void apply_constant_overrides(ProtocolConstants& constants,
                              const std::map<std::string, std::string>& keys);

}  // namespace roam::harness

#endif  // ROAM_HARNESS_CONFIG_HPP_
