#pragma once

#include <optional>
#include <vector>

#include "circlecheb/angle_set.hpp"
#include "circlecheb/equioscillation.hpp"
#include "circlecheb/kernel.hpp"

namespace circlecheb {

inline constexpr double kDefaultMinTol = 1e-12;

/// Open arc between consecutive distinct atoms. `right` may exceed 2pi when the
/// arc wraps past zero; right - left is in (0, 2pi].
struct Arc {
    double left = 0.0;
    double right = 0.0;

    double length() const noexcept { return right - left; }
    double midpoint() const noexcept { return 0.5 * (left + right); }
};

struct ArcMinimum {
    Arc arc;
    double argmin = 0.0;  // in [left, right], not wrapped
    double value = 0.0;
};

struct MinimizationResult {
    std::vector<ArcMinimum> per_arc;
    double global_min = 0.0;
    double global_argmin = 0.0;  // wrapped into [0, 2pi)
};

std::vector<Arc> arc_partition(const AngleSet& set);

/// Unique minimizer of S_f on the open arc, by safeguarded Newton on S_f'.
/// `hint`, when given and inside the arc, is used as the starting point.
/// Throws ConvexityViolation if S_f' has the wrong sign pattern or S_f'' < 0.
ArcMinimum minimize_on_arc(const AngleSet& set, const Kernel& kernel, const Arc& arc,
                           double tol = kDefaultMinTol, std::optional<double> hint = std::nullopt);

/// M_f(set) = min over the circle of S_f, minimized arc by arc.
MinimizationResult chebyshev_min(const AngleSet& set, const Kernel& kernel,
                                 double tol = kDefaultMinTol);

/// Per-arc local minima and their spread (max - min).
EquioscillationReport local_minima_report(const AngleSet& set, const Kernel& kernel,
                                          double tol = kDefaultMinTol);

}  // namespace circlecheb
