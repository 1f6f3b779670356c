#include "roam/sim/mobility.hpp"

#include <cmath>
#include <stdexcept>

namespace roam::sim {

RandomWaypoint::RandomWaypoint(double area_w, double area_h, double speed, double pause_time,
                               Rng rng)
    : area_w_(area_w), area_h_(area_h), speed_(speed), pause_time_(pause_time), rng_(rng) {
    if (speed_ < 0.0) throw std::invalid_argument("RandomWaypoint: negative speed");
    if (pause_time_ < 0.0) throw std::invalid_argument("RandomWaypoint: negative pause");
}

Vec2 RandomWaypoint::draw_target() {
    return {rng_.uniform(0.0, area_w_), rng_.uniform(0.0, area_h_)};
}

void RandomWaypoint::init(const Topology& topology) {
    states_.assign(static_cast<std::size_t>(topology.size()), {});
    if (speed_ <= 0.0) return;
    for (auto& st : states_) {
        st.target = draw_target();
        st.moving = true;
    }
}

void RandomWaypoint::step(Topology& topology, double now, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("RandomWaypoint: dt <= 0");
    if (speed_ <= 0.0) return;  // static network

    for (int i = 0; i < topology.size(); ++i) {
        auto& st = states_[static_cast<std::size_t>(i)];
        if (!st.moving) {
            if (now + dt < st.pause_until) continue;
            st.target = draw_target();
            st.moving = true;
            continue;  // starts moving next step
        }
        const Vec2 pos = topology.position(i);
        const double dist = distance(pos, st.target);
        const double step_len = speed_ * dt;
        if (dist <= step_len) {
            topology.set_position(i, st.target);
            st.moving = false;
            st.pause_until = now + dt + pause_time_;
        } else {
            const double f = step_len / dist;
            topology.set_position(
                i, {pos.x + (st.target.x - pos.x) * f, pos.y + (st.target.y - pos.y) * f});
        }
    }
    topology.rebuild_adjacency();
}

}  // namespace roam::sim
