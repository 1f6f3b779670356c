#include "roam/harness/oracle.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

#include "roam/sim/rng.hpp"

namespace roam::harness {

namespace {

int flood_once(const sim::Topology& topo, int source, double p, sim::Rng& rng) {
    std::vector<char> received(static_cast<std::size_t>(topo.size()), 0);
    received[static_cast<std::size_t>(source)] = 1;
    std::deque<int> transmitters{source};
    int transmissions = 0;
    while (!transmitters.empty()) {
        const int u = transmitters.front();
        transmitters.pop_front();
        ++transmissions;
        for (int v : topo.neighbors(u)) {
            if (received[static_cast<std::size_t>(v)]) continue;
            received[static_cast<std::size_t>(v)] = 1;
            if (rng.bernoulli(p)) transmitters.push_back(v);
        }
    }
    return transmissions;
}

}  // namespace

FloodSample flooding_oracle(const sim::Topology& topology, int source, double p_broadcast,
                            int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("flooding_oracle: trials < 1");
    if (source < 0 || source >= topology.size())
        throw std::invalid_argument("flooding_oracle: source outside topology");
    sim::Rng rng = sim::Rng(seed).fork(0x6f7261636cULL);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const double x = flood_once(topology, source, p_broadcast, rng);
        sum += x;
        sum_sq += x * x;
    }
    FloodSample s;
    s.trials = trials;
    s.mean = sum / trials;
    const double var = trials > 1 ? std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1))
                                  : 0.0;
    s.stderr_mean = std::sqrt(var / trials);
    return s;
}

}  // namespace roam::harness
