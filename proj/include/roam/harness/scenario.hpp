#ifndef ROAM_HARNESS_SCENARIO_HPP_
#define ROAM_HARNESS_SCENARIO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "roam/harness/config.hpp"
#include "roam/harness/metrics.hpp"

namespace roam::harness {

// One scenario point with its per-run metrics.
struct ScenarioResult {
    ScenarioConfig config;
    Metrics metrics;
};

// Executes one seeded run; fully deterministic for (config, run_seed).
RunMetrics run_single(const ScenarioConfig& config, std::uint64_t run_seed,
                      std::ostream* trace = nullptr);

// Executes config.runs independent seeded runs (in parallel when
// `parallel`), aggregating by arithmetic mean.
Metrics run_scenario(const ScenarioConfig& config, bool parallel = true);

// Desk-scaled variants of the paper's three scenarios, one config per
// x-axis point. Scenario 1 has a single point; 2 sweeps pause times;
// 3 sweeps node counts.
std::vector<ScenarioConfig> desk_scenario(int which, Protocol protocol, std::uint64_t seed,
                                          int runs);

// The seed a given run index uses; exposed so tests can reproduce runs.
std::uint64_t seed_for_run(std::uint64_t base_seed, int run_index);

}  // namespace roam::harness

#endif  // ROAM_HARNESS_SCENARIO_HPP_
