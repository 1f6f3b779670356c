#ifndef ROAM_SIM_TOPOLOGY_HPP_
#define ROAM_SIM_TOPOLOGY_HPP_

#include <cstdint>
#include <vector>

#include "roam/sim/rng.hpp"
#include "roam/types.hpp"

namespace roam::sim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

// Unit-disk connectivity over planar node positions: two nodes are
// neighbors iff their distance is within the radio range. Neighbor lists
// stay sorted so iteration order is deterministic.
class Topology {
  public:
    Topology(std::vector<Vec2> positions, double radio_range);

    int size() const { return static_cast<int>(positions_.size()); }
    double radio_range() const { return range_; }
    const Vec2& position(int node) const { return positions_.at(static_cast<std::size_t>(node)); }
    void set_position(int node, const Vec2& p);

    // Full O(n^2) recompute; call after a batch of position updates.
    void rebuild_adjacency();

    const std::vector<int>& neighbors(int node) const;
    bool adjacent(int a, int b) const;
    int degree(int node) const;
    double mean_degree() const;

  private:
    std::vector<Vec2> positions_;
    double range_;
    std::vector<std::vector<int>> adjacency_;
};

// n positions drawn uniformly from the area with the placement stream of
// `seed`. Same inputs give an identical topology.
Topology generate_topology(int n, double area_w, double area_h, double radio_range,
                           std::uint64_t seed);

// BFS layers from `source`: d_avg is the mean degree over all nodes,
// d_f[j] the mean count, over depth-j nodes, of their depth-(j+1)
// neighbors. Entries run j = 1 .. max(1, eccentricity-1); an unreachable
// remainder just truncates the layering.
NetworkProfile measure_profile(const Topology& topology, int source, double p_broadcast = 1.0);

// Hop distances from source; -1 where unreachable.
std::vector<int> bfs_depths(const Topology& topology, int source);

}  // namespace roam::sim

#endif  // ROAM_SIM_TOPOLOGY_HPP_
