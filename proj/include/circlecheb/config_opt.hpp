#pragma once

#include <cstdint>
#include <vector>

#include "circlecheb/angle_set.hpp"
#include "circlecheb/equioscillation.hpp"
#include "circlecheb/kernel.hpp"

namespace circlecheb {

struct SearchParams {
    int max_iters = 10000;
    double step_tol = 1e-14;             // relative width at which the step search stops
    double equioscillation_tol = 1e-10;  // on max - min of local minima, scaled by max(1, |M|)
    int restarts = 32;
    std::uint64_t seed = 0;
};

/// Moves the two atoms bounding arc `arc_index` (in arc_partition order) apart:
/// left atom by -eps, right atom by +eps. A negative eps pulls them together.
/// Throws StepTooLarge unless |eps| is below half of the arc's length and of
/// both neighbouring arcs; Degenerate for fewer than two distinct atoms.
AngleSet spread_move(const AngleSet& set, std::size_t arc_index, double eps);

struct SearchResult {
    AngleSet angles;
    EquioscillationReport report;
    bool converged = false;
    int iterations = 0;
    /// M_f after each accepted move, starting with M_f of the initial set.
    std::vector<double> min_history;
};

/// Repeatedly spreads the arc with the highest local minimum, choosing the
/// step so that its local minimum meets the lowest of the others, until the
/// local minima agree. M_f never decreases across accepted moves.
/// Throws Degenerate if the initial set has coincident atoms.
SearchResult equalize_search(const AngleSet& initial, const Kernel& kernel, const SearchParams& params = {});

/// True iff all cyclic gaps equal 2pi/n within tol.
bool is_uniform(const AngleSet& set, double tol);

struct ScanRun {
    double min_value = 0.0;
    double deviation = 0.0;
    int iterations = 0;
    bool converged = false;
    bool uniform = false;
};

struct ScanReport {
    int n = 0;
    double max_found = 0.0;
    double uniform_value = 0.0;
    double gap = 0.0;  // max_found - uniform_value
    bool all_converged = false;
    bool all_uniform = false;
    std::vector<ScanRun> runs;
};

/// Tolerance on the gap vector used to call a search result uniform.
inline constexpr double kUniformGapTol = 1e-5;

/// equalize_search from params.restarts seeded random starts.
ScanReport conjecture_scan(int n, const Kernel& kernel, const SearchParams& params = {});

struct FejesTothSums {
    double double_sum = 0.0;  // sum_j sum_k sin^{-2}((s_j - t_k)/2)
    double target = 0.0;      // n^3
};

/// s_j are the per-arc minimizers of sum |z - z_j|^{-2}. Throws Degenerate on coincident atoms.
FejesTothSums fejes_toth_check(const AngleSet& set);

}  // namespace circlecheb
