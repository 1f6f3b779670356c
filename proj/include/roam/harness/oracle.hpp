#ifndef ROAM_HARNESS_ORACLE_HPP_
#define ROAM_HARNESS_ORACLE_HPP_

#include <cstdint>

#include "roam/sim/topology.hpp"

namespace roam::harness {

struct FloodSample {
    double mean = 0.0;        // transmissions per trial, source included
    double stderr_mean = 0.0;
    int trials = 0;
};

// Monte-Carlo blind flood: the source transmits, every first-time
// receiver rebroadcasts with probability p_broadcast, transmissions are
// counted. Independent of the closed-form flood cost; this is the
// oracle the formula is checked against (formula value = rebroadcasts,
// i.e. oracle mean minus the source's own transmission).
FloodSample flooding_oracle(const sim::Topology& topology, int source, double p_broadcast,
                            int trials, std::uint64_t seed);

}  // namespace roam::harness

#endif  // ROAM_HARNESS_ORACLE_HPP_
