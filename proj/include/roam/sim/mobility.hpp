#ifndef ROAM_SIM_MOBILITY_HPP_
#define ROAM_SIM_MOBILITY_HPP_

#include <vector>

#include "roam/sim/rng.hpp"
#include "roam/sim/topology.hpp"

namespace roam::sim {

struct WaypointState {
    Vec2 target;
    double pause_until = 0.0;
    bool moving = false;
};

// Random waypoint: move straight at fixed speed toward the target, pause
// on arrival, then draw the next target from the waypoint stream.
class RandomWaypoint {
  public:
    RandomWaypoint(double area_w, double area_h, double speed, double pause_time, Rng rng);

    void init(const Topology& topology);

    // Advances every node by dt and refreshes adjacency once.
    void step(Topology& topology, double now, double dt);

    const WaypointState& state(int node) const {
        return states_.at(static_cast<std::size_t>(node));
    }

  private:
    Vec2 draw_target();

    double area_w_;
    double area_h_;
    double speed_;
    double pause_time_;
    Rng rng_;
    std::vector<WaypointState> states_;
};

}  // namespace roam::sim

#endif  // ROAM_SIM_MOBILITY_HPP_
