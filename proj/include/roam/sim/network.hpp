#ifndef ROAM_SIM_NETWORK_HPP_
#define ROAM_SIM_NETWORK_HPP_

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "roam/proto/packet.hpp"
#include "roam/sim/event_queue.hpp"
#include "roam/sim/ledger.hpp"
#include "roam/sim/mobility.hpp"
#include "roam/sim/rng.hpp"
#include "roam/sim/topology.hpp"

namespace roam::sim {

// Radio / substrate knobs shared by every node in a run.
struct SimParams {
    double link_rate = 2e6;        // bits per second
    double per_hop_delay = 0.040;  // fixed propagation + processing, seconds
    int control_packet_bytes = 64;
    int data_packet_bytes = 512;
    double mobility_dt = 0.1;
};

// Constant-rate traffic source.
struct CbrFlow {
    int source = 0;
    int destination = 0;
    int packet_size = 512;
    double interval = 0.25;
    double start_time = 0.0;
    double stop_time = 0.0;
};

// Protocol-side interface a node plugs into the substrate.
class NodeAgent {
  public:
    virtual ~NodeAgent() = default;
    virtual int id() const = 0;
    virtual void start() = 0;
    virtual void on_packet(int from, const proto::Packet& packet) = 0;
    virtual void on_link_failure(int next_hop, const proto::Packet& undelivered) = 0;
    virtual void send_data(int destination, proto::Packet data) = 0;
    // Next hop the node would use toward dest, for the loop walker;
    // nullopt when it holds no usable route (or source-routes).
    virtual std::optional<int> table_next_hop(int destination) const = 0;
};

// One simulation run: time-varying unit-disk topology, the event loop,
// the attached protocol agents, and the packet ledger. Broadcast reaches
// the neighbors at transmit time; unicast to a node out of range comes
// back as link-failure feedback after one attempt latency.
class Network {
  public:
    Network(Topology topology, SimParams params);

    Topology& topology() { return topology_; }
    const Topology& topology() const { return topology_; }
    EventQueue& events() { return events_; }
    double now() const { return events_.now(); }
    const SimParams& params() const { return params_; }

    void add_node(std::unique_ptr<NodeAgent> agent);
    NodeAgent& node(int id) { return *agents_.at(static_cast<std::size_t>(id)); }
    int node_count() const { return static_cast<int>(agents_.size()); }

    void attach_mobility(double area_w, double area_h, double speed, double pause_time, Rng rng);
    void add_flow(const CbrFlow& flow);
    void set_trace(std::ostream* sink);

    // Starts agents, mobility, and traffic, then drains events up to
    // t_end (events beyond it stay queued).
    void run_until(double t_end);

    void broadcast(int from, proto::Packet packet);
    void unicast(int from, int to, proto::Packet packet);

    long new_uid() { return next_uid_++; }
    double latency_for(int size_bytes) const;

    Ledger& ledger() { return ledger_; }
    const Ledger& ledger() const { return ledger_; }
    InvariantMonitor& monitor() { return monitor_; }
    const InvariantMonitor& monitor() const { return monitor_; }

    // Walks every holder's next-hop chain toward dest; cycles increment
    // the loop violation counter. Agents call this after table changes.
    void check_route_loops(int destination);

    void note_route_activity(int node, double window);
    bool route_activity_covers(int node, double t) const;

  private:
    void schedule_mobility_step();
    void schedule_flow_emission(std::size_t flow_index, double t);
    void count_transmission(int from, const proto::Packet& packet);

    Topology topology_;
    SimParams params_;
    EventQueue events_;
    std::vector<std::unique_ptr<NodeAgent>> agents_;
    std::optional<RandomWaypoint> mobility_;
    double mobility_speed_ = 0.0;
    std::vector<CbrFlow> flows_;
    Ledger ledger_;
    InvariantMonitor monitor_;
    std::ostream* trace_ = nullptr;
    long next_uid_ = 0;
    double run_end_ = 0.0;
    bool started_ = false;
};

}  // namespace roam::sim

#endif  // ROAM_SIM_NETWORK_HPP_
