#include "roam/harness/metrics.hpp"

#include <cmath>
#include <limits>

namespace roam::harness {

RunMetrics RunMetrics::from_ledger(const sim::Ledger& ledger, const sim::InvariantMonitor& monitor,
                                   std::uint64_t seed) {
    RunMetrics m;
    m.seed = seed;
    m.rreq = ledger.rreq_tx;
    m.rrep = ledger.rrep_tx;
    m.rerr = ledger.rerr_tx;
    m.hello = ledger.hello_tx;
    m.data_sent = ledger.data_originated;
    m.data_delivered = ledger.data_delivered;
    m.data_dropped = ledger.data_dropped;
    m.e2ed_mean = ledger.e2ed_count > 0 ? ledger.e2ed_sum / ledger.e2ed_count : 0.0;
    m.nrl = ledger.data_delivered > 0
                ? static_cast<double>(ledger.control_tx()) / ledger.data_delivered
                : std::numeric_limits<double>::quiet_NaN();
    m.invariant_violations = monitor.total();
    return m;
}

namespace {

template <typename Get>
double mean_over(const std::vector<RunMetrics>& runs, Get get) {
    if (runs.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : runs) sum += static_cast<double>(get(r));
    return sum / static_cast<double>(runs.size());
}

}  // namespace

double Metrics::mean_rreq() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.rreq; });
}
double Metrics::mean_rrep() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.rrep; });
}
double Metrics::mean_rerr() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.rerr; });
}
double Metrics::mean_hello() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.hello; });
}
double Metrics::mean_data_sent() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.data_sent; });
}
double Metrics::mean_data_delivered() const {
    return mean_over(runs, [](const RunMetrics& r) { return r.data_delivered; });
}

double Metrics::mean_e2ed() const {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : runs) {
        if (r.data_delivered == 0) continue;
        sum += r.e2ed_mean;
        ++n;
    }
    return n > 0 ? sum / n : 0.0;
}

double Metrics::mean_nrl() const {
    double sum = 0.0;
    int n = 0;
    for (const auto& r : runs) {
        if (std::isnan(r.nrl)) continue;
        sum += r.nrl;
        ++n;
    }
    return n > 0 ? sum / n : std::numeric_limits<double>::quiet_NaN();
}

std::uint64_t Metrics::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& r : runs) total += r.invariant_violations + r.hello_consistency_failures;
    return total;
}

}  // namespace roam::harness
