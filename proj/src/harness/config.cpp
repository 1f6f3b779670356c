#include "roam/harness/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace roam::harness {

void ScenarioConfig::validate() const {
    if (area_w <= 0.0 || area_h <= 0.0)
        throw std::invalid_argument("ScenarioConfig: non-positive area");
    if (node_count < 1) throw std::invalid_argument("ScenarioConfig: node_count < 1");
    if (speed < 0.0) throw std::invalid_argument("ScenarioConfig: negative speed");
    if (pause_time < 0.0) throw std::invalid_argument("ScenarioConfig: negative pause");
    if (duration <= 0.0) throw std::invalid_argument("ScenarioConfig: non-positive duration");
    if (flow_count < 0) throw std::invalid_argument("ScenarioConfig: negative flow_count");
    if (packet_size < 1) throw std::invalid_argument("ScenarioConfig: packet_size < 1");
    if (link_rate <= 0.0) throw std::invalid_argument("ScenarioConfig: non-positive link_rate");
    if (cbr_interval <= 0.0)
        throw std::invalid_argument("ScenarioConfig: non-positive cbr_interval");
    if (radio_range <= 0.0) throw std::invalid_argument("ScenarioConfig: non-positive range");
    if (per_hop_delay <= 0.0) throw std::invalid_argument("ScenarioConfig: non-positive delay");
    if (p_forward < 0.0 || p_forward > 1.0)
        throw std::invalid_argument("ScenarioConfig: p_forward outside [0,1]");
    if (runs < 1) throw std::invalid_argument("ScenarioConfig: runs < 1");
    if (constants.protocol != protocol)
        throw std::invalid_argument("ScenarioConfig: constants/protocol mismatch");
    constants.validate();
}

void ScenarioConfig::set_protocol(Protocol p) {
    protocol = p;
    constants = ProtocolConstants::defaults_for(p);
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
}

int to_int(const std::string& key, const std::string& value) {
    const double v = to_double(key, value);
    return static_cast<int>(v);
}

}  // namespace

ConfigSections parse_config_text(const std::string& text) {
    ConfigSections sections;
    std::istringstream in(text);
    std::string line;
    std::string current = "";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config: unterminated section at line " +
                                            std::to_string(lineno));
            current = trim(line.substr(1, line.size() - 2));
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config: empty key at line " + std::to_string(lineno));
        sections[current][key] = value;
    }
    return sections;
}

ConfigSections parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void apply_constant_overrides(ProtocolConstants& k,
                              const std::map<std::string, std::string>& keys) {
    for (const auto& [key, value] : keys) {
        if (key == "ttl_start") k.ttl_start = to_int(key, value);
        else if (key == "ttl_increment") k.ttl_increment = to_int(key, value);
        else if (key == "ttl_threshold") k.ttl_threshold = to_int(key, value);
        else if (key == "net_diameter") k.net_diameter = to_int(key, value);
        else if (key == "rreq_retries") k.rreq_retries = to_int(key, value);
        else if (key == "nonprop_request_timeout") k.nonprop_request_timeout = to_double(key, value);
        else if (key == "discovery_hop_limit") k.discovery_hop_limit = to_int(key, value);
        else if (key == "node_traversal_time") k.node_traversal_time = to_double(key, value);
        else if (key == "timeout_buffer") k.timeout_buffer = to_double(key, value);
        else if (key == "local_add_ttl") k.local_add_ttl = to_int(key, value);
        else if (key == "hello_interval") k.hello_interval = to_double(key, value);
        else if (key == "ps_check_time_per_node") k.ps_check_time_per_node = to_double(key, value);
        else throw std::invalid_argument("config: unknown constant '" + key + "'");
    }
}

ScenarioConfig scenario_from_config(const ConfigSections& sections, const std::string& section) {
    auto sit = sections.find(section);
    if (sit == sections.end())
        throw std::invalid_argument("config: missing section [" + section + "]");

    ScenarioConfig c;
    c.scenario = section;
    for (const auto& [key, value] : sit->second) {
        if (key == "area_w") c.area_w = to_double(key, value);
        else if (key == "area_h") c.area_h = to_double(key, value);
        else if (key == "nodes") c.node_count = to_int(key, value);
        else if (key == "speed") c.speed = to_double(key, value);
        else if (key == "pause") c.pause_time = to_double(key, value);
        else if (key == "duration") c.duration = to_double(key, value);
        else if (key == "flows") c.flow_count = to_int(key, value);
        else if (key == "packet_size") c.packet_size = to_int(key, value);
        else if (key == "link_rate") c.link_rate = to_double(key, value);
        else if (key == "cbr_interval") c.cbr_interval = to_double(key, value);
        else if (key == "radio_range") c.radio_range = to_double(key, value);
        else if (key == "per_hop_delay") c.per_hop_delay = to_double(key, value);
        else if (key == "p_forward") c.p_forward = to_double(key, value);
        else if (key == "seed") c.seed = static_cast<std::uint64_t>(to_double(key, value));
        else if (key == "runs") c.runs = to_int(key, value);
        else if (key == "x") c.x = to_double(key, value);
        else if (key == "protocol") {
            const auto p = protocol_from_name(value);
            if (!p) throw std::invalid_argument("config: unknown protocol '" + value + "'");
            c.set_protocol(*p);
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "' in [" + section + "]");
        }
    }
    const std::string proto_section = std::string("protocol.") + protocol_name(c.protocol);
    if (auto pit = sections.find(proto_section); pit != sections.end())
        apply_constant_overrides(c.constants, pit->second);
    c.validate();
    return c;
}

}  // namespace roam::harness
