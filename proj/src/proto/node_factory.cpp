#include "roam/proto/node_factory.hpp"

namespace roam::proto {

std::unique_ptr<sim::NodeAgent> make_node(int id, sim::Network& net,
                                          const ProtocolConstants& constants,
                                          const RingSchedule& schedule, sim::Rng rng,
                                          const NodeOptions& options) {
    if (constants.protocol == Protocol::Dsr)
        return std::make_unique<DsrNode>(id, net, constants, schedule, rng, options);
    return std::make_unique<TableNode>(id, net, constants, schedule, rng, options);
}

void populate(sim::Network& net, const ProtocolConstants& constants, const RingSchedule& schedule,
              sim::Rng rng, const NodeOptions& options) {
    for (int i = 0; i < net.topology().size(); ++i)
        net.add_node(make_node(i, net, constants, schedule,
                               rng.fork(0x6e6f6465ULL + static_cast<std::uint64_t>(i)), options));
}

}  // namespace roam::proto
