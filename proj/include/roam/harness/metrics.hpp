#ifndef ROAM_HARNESS_METRICS_HPP_
#define ROAM_HARNESS_METRICS_HPP_

#include <cstdint>
#include <vector>

#include "roam/sim/ledger.hpp"

namespace roam::harness {

// One run's worth of scenario metrics. nrl is NaN when nothing was
// delivered (the undefined sentinel); e2ed averages delivered packets.
struct RunMetrics {
    std::uint64_t seed = 0;
    double x = 0.0;  // x-axis value (pause | node count | measured hops)
    std::uint64_t rreq = 0;
    std::uint64_t rrep = 0;
    std::uint64_t rerr = 0;
    std::uint64_t hello = 0;
    std::uint64_t data_sent = 0;
    std::uint64_t data_delivered = 0;
    std::uint64_t data_dropped = 0;
    double e2ed_mean = 0.0;  // seconds
    double nrl = 0.0;
    std::uint64_t invariant_violations = 0;
    std::uint64_t hello_consistency_failures = 0;

    static RunMetrics from_ledger(const sim::Ledger& ledger, const sim::InvariantMonitor& monitor,
                                  std::uint64_t seed);
};

// Per-run values plus their arithmetic means.
struct Metrics {
    std::vector<RunMetrics> runs;

    double mean_rreq() const;
    double mean_rrep() const;
    double mean_rerr() const;
    double mean_hello() const;
    double mean_data_sent() const;
    double mean_data_delivered() const;
    double mean_e2ed() const;  // over runs with delivered traffic
    double mean_nrl() const;   // over runs with defined NRL
    std::uint64_t total_violations() const;
};

}  // namespace roam::harness

#endif  // ROAM_HARNESS_METRICS_HPP_
