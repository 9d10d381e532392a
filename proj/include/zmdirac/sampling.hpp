#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zmdirac/momentum.hpp"

namespace zmdirac {

// Deterministic per-purpose random stream.  The master seed is mixed with a
// hash of the stream label, so independently drawn sequences never depend on
// the order in which suites run.
class Rng {
public:
    Rng(std::uint64_t seed, const std::string& stream);

    double u01();
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 gen_;
};

// Isotropic direction with magnitude log-uniform in [scale_min, scale_max].
Momentum3 random_momentum(Rng& rng, double scale_min, double scale_max);

// `count` momenta drawn serially from a fresh stream, so the sample is
// identical no matter how the consumer iterates it.
std::vector<Momentum3> momentum_sample(std::uint64_t seed, const std::string& stream, int count,
                                       double scale_min, double scale_max);

}  // namespace zmdirac
