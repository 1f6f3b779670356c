#ifndef ROAM_PROTO_PACKET_HPP_
#define ROAM_PROTO_PACKET_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace roam::proto {

enum class PacketKind { Rreq, Rrep, Rerr, Hello, Data };

const char* packet_kind_name(PacketKind kind);

// Control and data packets share one record; unused fields stay at their
// defaults for a given kind. `ttl` counts hops the packet may still
// travel after the current transmission: a receiver seeing ttl == 0
// consumes, ttl > 0 may forward with ttl - 1.
struct Packet {
    PacketKind kind = PacketKind::Data;
    long uid = -1;  // stable across forwards of the same packet

    int origin = -1;  // end-to-end source
    int target = -1;  // end-to-end destination
    int ttl = 0;
    int hop_count = 0;  // hops traveled so far

    std::uint32_t rreq_id = 0;
    int orig_seq = 0;
    int dest_seq = 0;
    bool gratuitous = false;

    bool salvage = false;  // DSR: salvage probe / salvaged data
    int salvage_count = 0;

    std::vector<int> route;  // DSR source route, origin..target orientation
    int route_pos = 0;       // index of the node currently holding the packet

    // DSR broken-link notices (RERR payload or RREQ piggyback).
    std::vector<std::pair<int, int>> broken_links;
    // AODV/DYMO RERR payload: (destination, bumped sequence number).
    std::vector<std::pair<int, int>> unreachable;

    double created_at = 0.0;  // data origination time, for E2ED
    int size_bytes = 64;
};

}  // namespace roam::proto

#endif  // ROAM_PROTO_PACKET_HPP_
