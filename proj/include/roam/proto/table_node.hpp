#ifndef ROAM_PROTO_TABLE_NODE_HPP_
#define ROAM_PROTO_TABLE_NODE_HPP_

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "roam/ers_schedule.hpp"
#include "roam/proto/packet.hpp"
#include "roam/proto/route_table.hpp"
#include "roam/sim/network.hpp"
#include "roam/sim/rng.hpp"
#include "roam/types.hpp"

namespace roam::proto {

// Protocol knobs the spec leaves configurable.
struct NodeOptions {
    double p_forward = 1.0;       // RREQ rebroadcast probability (P_r)
    double route_lifetime = 10.0; // AODV-style active-route lifetime, seconds
    int hello_loss_tolerance = 2; // missed HELLOs before a break is declared
    std::size_t queue_capacity = 64;
    int max_salvage = 3;          // DSR only
};

// What one discovery looked like, for the model-vs-sim comparison.
struct DiscoveryRecord {
    int destination = -1;
    int rings_opened = 0;
    int reply_ring = 0;  // 0 while unanswered
    std::vector<int> replier_hops;
    bool failed = false;
    bool completed = false;
};

// AODV / DYMO control plane: ERS discovery over a distance-vector table
// with destination sequence numbers, HELLO link monitoring, RERR
// dissemination, and (AODV only) gratuitous RREPs and local link repair.
class TableNode : public sim::NodeAgent {
  public:
    TableNode(int id, sim::Network& net, const ProtocolConstants& constants,
              RingSchedule schedule, sim::Rng rng, NodeOptions options = {});

    int id() const override { return id_; }
    void start() override;
    void on_packet(int from, const Packet& packet) override;
    void on_link_failure(int next_hop, const Packet& undelivered) override;
    void send_data(int destination, Packet data) override;
    std::optional<int> table_next_hop(int destination) const override;

    RouteTable& table() { return table_; }
    const RouteTable& table() const { return table_; }
    // Test hook: seeds a Valid entry directly.
    void install_route(int dest, int next_hop, int hop_count, int seq_no);

    const std::map<int, DiscoveryRecord>& discovery_log() const { return discovery_log_; }
    bool has_session(int dest) const { return sessions_.count(dest) > 0; }

  private:
    struct Session {
        int ring_index = 0;
        std::uint64_t gen = 0;
    };
    struct RepairSession {
        std::uint64_t gen = 0;
        std::deque<Packet> buffered;
    };

    bool is_aodv() const { return constants_.protocol == Protocol::Aodv; }

    void handle_rreq(int from, const Packet& p);
    void handle_rrep(int from, const Packet& p);
    void handle_rerr(int from, const Packet& p);
    void handle_data(int from, Packet p);

    void ensure_session(int dest);
    void emit_ring(int dest);
    void on_ring_timeout(int dest, std::uint64_t gen);
    void finish_discovery(int dest);
    void fail_discovery(int dest);

    void start_local_repair(int next_hop, Packet data);
    void on_repair_timeout(int dest, std::uint64_t gen);

    void forward_data(Packet p);
    void enqueue_data(Packet p);
    void flush_queue(int dest);
    void send_rerr_upstream(int dest, int bumped_seq);
    void break_link(int next_hop, int spare_dest);

    void hello_tick();

    Packet make_control(PacketKind kind) const;

    int id_;
    sim::Network& net_;
    ProtocolConstants constants_;
    RingSchedule schedule_;
    sim::Rng rng_;
    NodeOptions opts_;
    bool use_grat_;
    bool use_llr_;

    RouteTable table_;
    int own_seq_ = 0;
    std::uint32_t rreq_counter_ = 0;
    std::uint64_t gen_counter_ = 0;

    std::set<std::pair<int, std::uint32_t>> seen_rreqs_;
    std::map<int, Session> sessions_;
    std::map<int, RepairSession> repairs_;
    std::map<int, std::deque<Packet>> data_queue_;
    std::map<int, double> last_heard_;
    std::map<int, int> last_upstream_;
    std::map<int, DiscoveryRecord> discovery_log_;
};

}  // namespace roam::proto

#endif  // ROAM_PROTO_TABLE_NODE_HPP_
