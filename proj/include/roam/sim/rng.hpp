#ifndef ROAM_SIM_RNG_HPP_
#define ROAM_SIM_RNG_HPP_

#include <cstdint>

namespace roam::sim {

// xoshiro256** seeded through splitmix64. Self-contained so streams are
// bit-identical across standard libraries; std distributions are
// implementation-defined and would break pinned expected values.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform();
    // Uniform in [lo, hi).
    double uniform(double lo, double hi);
    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);
    bool bernoulli(double p);

    // Independent deterministic substream; splitting one stream per
    // concern keeps e.g. waypoint draws stable when traffic changes.
    Rng fork(std::uint64_t stream) const;

  private:
    std::uint64_t s_[4];
    std::uint64_t seed_origin_;
};

}  // namespace roam::sim

#endif  // ROAM_SIM_RNG_HPP_
