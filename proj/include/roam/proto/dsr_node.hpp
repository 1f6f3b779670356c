#ifndef ROAM_PROTO_DSR_NODE_HPP_
#define ROAM_PROTO_DSR_NODE_HPP_

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "roam/ers_schedule.hpp"
#include "roam/proto/packet.hpp"
#include "roam/proto/route_cache.hpp"
#include "roam/proto/table_node.hpp"
#include "roam/sim/network.hpp"
#include "roam/sim/rng.hpp"
#include "roam/types.hpp"

namespace roam::proto {

// DSR control plane: source-routed forwarding over a route cache, ERS
// discovery with accumulated routes, gratuitous replies from cache,
// link-layer failure feedback, packet salvaging with an upstream
// walk-back, and RERRs piggybacked on re-discovery RREQs. No HELLOs.
class DsrNode : public sim::NodeAgent {
  public:
    DsrNode(int id, sim::Network& net, const ProtocolConstants& constants, RingSchedule schedule,
            sim::Rng rng, NodeOptions options = {});

    int id() const override { return id_; }
    void start() override {}
    void on_packet(int from, const Packet& packet) override;
    void on_link_failure(int next_hop, const Packet& undelivered) override;
    void send_data(int destination, Packet data) override;
    std::optional<int> table_next_hop(int) const override { return std::nullopt; }

    RouteCache& cache() { return cache_; }
    const RouteCache& cache() const { return cache_; }

    const std::map<int, DiscoveryRecord>& discovery_log() const { return discovery_log_; }
    bool has_session(int dest) const { return sessions_.count(dest) > 0; }

  private:
    struct Session {
        int ring_index = 0;
        std::uint64_t gen = 0;
    };

    void handle_rreq(int from, const Packet& p);
    void handle_rrep(const Packet& p);
    void handle_data(Packet p);
    void salvage_or_walk_back(int my_index, Packet data,
                              std::vector<std::pair<int, int>> broken);

    void ensure_session(int dest);
    void emit_ring(int dest);
    void on_ring_timeout(int dest, std::uint64_t gen);
    void finish_discovery(int dest);
    void fail_discovery(int dest);
    void flush_queue(int dest);

    void send_source_routed(Packet data, std::vector<int> route);
    void learn(const std::vector<int>& path);

    Packet make_control(PacketKind kind) const;

    int id_;
    sim::Network& net_;
    ProtocolConstants constants_;
    RingSchedule schedule_;
    sim::Rng rng_;
    NodeOptions opts_;

    RouteCache cache_;
    std::uint32_t rreq_counter_ = 0;
    std::uint64_t gen_counter_ = 0;

    std::set<std::pair<int, std::uint32_t>> seen_rreqs_;
    std::map<int, Session> sessions_;
    std::map<int, std::deque<Packet>> data_queue_;
    std::vector<std::pair<int, int>> pending_broken_;  // piggybacked on next RREQs
    std::map<int, DiscoveryRecord> discovery_log_;
};

}  // namespace roam::proto

#endif  // ROAM_PROTO_DSR_NODE_HPP_
