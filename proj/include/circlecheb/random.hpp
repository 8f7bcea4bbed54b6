#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circlecheb/angle_set.hpp"

namespace circlecheb {

/// Deterministic 64-bit generator; the same seed yields the same stream on every platform.
using Rng = std::mt19937_64;

/// Independent stream seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// n i.i.d. uniform angles, redrawn until every cyclic gap is at least min_gap.
AngleSet random_configuration(std::size_t n, Rng& rng, double min_gap = 1e-6);

/// n points packed into an arc of the given width starting at a random angle.
AngleSet clustered_configuration(std::size_t n, Rng& rng, double width);

/// Uniform set rotated by a random angle with each point jittered by up to `jitter`.
AngleSet jittered_uniform(std::size_t n, Rng& rng, double jitter);

}  // namespace circlecheb
