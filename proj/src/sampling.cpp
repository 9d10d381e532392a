#include "zmdirac/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace zmdirac {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, const std::string& stream)
    : gen_(splitmix64(seed ^ fnv1a(stream))) {}

double Rng::u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

double Rng::log_uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("log-uniform range must be positive and ordered");
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

Momentum3 random_momentum(Rng& rng, double scale_min, double scale_max) {
    const double magnitude = rng.log_uniform(scale_min, scale_max);
    const double z = 2.0 * rng.u01() - 1.0;
    const double phi = 2.0 * M_PI * rng.u01();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Momentum3(rho * std::cos(phi), rho * std::sin(phi), z).scaled(magnitude);
}

std::vector<Momentum3> momentum_sample(std::uint64_t seed, const std::string& stream, int count,
                                       double scale_min, double scale_max) {
    if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
    Rng rng(seed, stream);
    std::vector<Momentum3> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_momentum(rng, scale_min, scale_max));
    return out;
}

}  // namespace zmdirac
