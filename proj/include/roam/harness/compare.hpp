#ifndef ROAM_HARNESS_COMPARE_HPP_
#define ROAM_HARNESS_COMPARE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "roam/cost_model.hpp"
#include "roam/harness/config.hpp"

namespace roam::harness {

// Analytic prediction next to simulated counts for one discovery on a
// static topology. Informational: the degree-averaged formula and a
// specific topology differ by construction.
struct ComparisonReport {
    Protocol protocol = Protocol::Aodv;
    int source = 0;
    int destination = 0;
    NetworkProfile profile;              // measured from the topology
    DiscoveryOutcome outcome;            // observed in the simulator
    double analytic_rreq_energy = 0.0;   // cumulative expanding-ring cost
    double analytic_rd_energy = 0.0;     // plus per-RREP hop cost
    std::uint64_t sim_rreq_tx = 0;
    std::uint64_t sim_rrep_tx = 0;
    double rreq_relative_error = 0.0;
    double rd_relative_error = 0.0;
};

double relative_error(double sim, double analytic);

// Runs one discovery in a static network (config.speed is ignored and
// treated as 0), measures the profile, and evaluates the cost model on
// the same schedule and outcome. A disconnected pair exercises the
// no-reply branches on both sides.
ComparisonReport compare_model_vs_sim(const ScenarioConfig& config, std::uint64_t seed,
                                      std::optional<int> destination = std::nullopt);

void print_report(std::ostream& os, const ComparisonReport& report);

}  // namespace roam::harness

#endif  // ROAM_HARNESS_COMPARE_HPP_
