#include "circlecheb/random.hpp"

#include <algorithm>

namespace circlecheb {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

AngleSet random_configuration(std::size_t n, Rng& rng, double min_gap) {
    std::vector<double> raw(n);
    for (;;) {
        for (double& a : raw) a = kTwoPi * uniform01(rng);
        std::vector<double> sorted = raw;
        std::sort(sorted.begin(), sorted.end());
        double smallest = sorted.front() + kTwoPi - sorted.back();
        for (std::size_t i = 0; i + 1 < n; ++i) smallest = std::min(smallest, sorted[i + 1] - sorted[i]);
        if (n == 1 || smallest >= min_gap) return AngleSet::from_raw(raw);
    }
}

AngleSet clustered_configuration(std::size_t n, Rng& rng, double width) {
    const double start = kTwoPi * uniform01(rng);
    std::vector<double> raw(n);
    for (double& a : raw) a = start + width * uniform01(rng);
    return AngleSet::from_raw(raw);
}

AngleSet jittered_uniform(std::size_t n, Rng& rng, double jitter) {
    const double rot = kTwoPi * uniform01(rng);
    std::vector<double> raw(n);
    for (std::size_t k = 0; k < n; ++k)
        raw[k] = rot + kTwoPi * static_cast<double>(k) / static_cast<double>(n) + jitter * (2.0 * uniform01(rng) - 1.0);
    return AngleSet::from_raw(raw);
}

}  // namespace circlecheb
