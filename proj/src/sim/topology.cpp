#include "roam/sim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace roam::sim {

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology::Topology(std::vector<Vec2> positions, double radio_range)
    : positions_(std::move(positions)), range_(radio_range) {
    if (positions_.empty()) throw std::invalid_argument("Topology: no nodes");
    if (range_ <= 0.0) throw std::invalid_argument("Topology: radio_range <= 0");
    rebuild_adjacency();
}

void Topology::set_position(int node, const Vec2& p) {
    positions_.at(static_cast<std::size_t>(node)) = p;
}

void Topology::rebuild_adjacency() {
    const int n = size();
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(positions_[static_cast<std::size_t>(i)],
                         positions_[static_cast<std::size_t>(j)]) <= range_) {
                adjacency_[static_cast<std::size_t>(i)].push_back(j);
                adjacency_[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
}

const std::vector<int>& Topology::neighbors(int node) const {
    return adjacency_.at(static_cast<std::size_t>(node));
}

bool Topology::adjacent(int a, int b) const {
    const auto& na = neighbors(a);
    return std::binary_search(na.begin(), na.end(), b);
}

int Topology::degree(int node) const { return static_cast<int>(neighbors(node).size()); }

double Topology::mean_degree() const {
    double sum = 0.0;
    for (int i = 0; i < size(); ++i) sum += degree(i);
    return sum / size();
}

Topology generate_topology(int n, double area_w, double area_h, double radio_range,
                           std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_topology: n < 1");
    if (area_w <= 0.0 || area_h <= 0.0)
        throw std::invalid_argument("generate_topology: non-positive area");
    Rng placement = Rng(seed).fork(0x706c6163);  // placement stream
    std::vector<Vec2> pos;
    pos.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pos.push_back({placement.uniform(0.0, area_w), placement.uniform(0.0, area_h)});
    return Topology(std::move(pos), radio_range);
}

std::vector<int> bfs_depths(const Topology& topology, int source) {
    std::vector<int> depth(static_cast<std::size_t>(topology.size()), -1);
    depth.at(static_cast<std::size_t>(source)) = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : topology.neighbors(u)) {
            if (depth[static_cast<std::size_t>(v)] < 0) {
                depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return depth;
}

NetworkProfile measure_profile(const Topology& topology, int source, double p_broadcast) {
    NetworkProfile profile;
    profile.p_broadcast = p_broadcast;
    profile.d_avg = topology.mean_degree();

    const auto depth = bfs_depths(topology, source);
    int ecc = 0;
    for (int d : depth) ecc = std::max(ecc, d);
    if (ecc == 0) return profile;  // isolated source: empty d_f

    const int levels = std::max(1, ecc - 1);
    for (int j = 1; j <= levels; ++j) {
        double forward_sum = 0.0;
        int layer_size = 0;
        for (int u = 0; u < topology.size(); ++u) {
            if (depth[static_cast<std::size_t>(u)] != j) continue;
            ++layer_size;
            for (int v : topology.neighbors(u))
                if (depth[static_cast<std::size_t>(v)] == j + 1) forward_sum += 1.0;
        }
        profile.d_f.push_back(layer_size > 0 ? forward_sum / layer_size : 0.0);
    }
    return profile;
}

}  // namespace roam::sim
