#ifndef ROAM_PROTO_NODE_FACTORY_HPP_
#define ROAM_PROTO_NODE_FACTORY_HPP_

#include <memory>

#include "roam/ers_schedule.hpp"
#include "roam/proto/dsr_node.hpp"
#include "roam/proto/table_node.hpp"
#include "roam/sim/network.hpp"

namespace roam::proto {

// Builds the right control plane for the protocol; each node gets its
// own forked RNG stream.
std::unique_ptr<sim::NodeAgent> make_node(int id, sim::Network& net,
                                          const ProtocolConstants& constants,
                                          const RingSchedule& schedule, sim::Rng rng,
                                          const NodeOptions& options);

// Convenience: populates the whole network.
void populate(sim::Network& net, const ProtocolConstants& constants, const RingSchedule& schedule,
              sim::Rng rng, const NodeOptions& options);

}  // namespace roam::proto

#endif  // ROAM_PROTO_NODE_FACTORY_HPP_
