#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace circlecheb {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance (radians) under which two angles are treated as the same atom.
inline constexpr double kAngleTol = 1e-12;

/// Reduce an arbitrary real angle into [0, 2pi).
double wrap_angle(double a);

/// Signed difference a - b reduced into (-pi, pi].
double angle_diff(double a, double b);

/// Sorted multiset of angles in [0, 2pi), representing the points e^{i theta_j}
/// on the unit circle. Coincident atoms are kept with multiplicity.
class AngleSet {
public:
    /// Reduces each angle mod 2pi and sorts. Throws EmptySet / InvalidAngle.
    static AngleSet from_raw(std::span<const double> raw);

    /// The n-th roots of unity rotated by `rotation`.
    static AngleSet uniform(std::size_t n, double rotation = 0.0);

    std::size_t size() const noexcept { return angles_.size(); }
    double operator[](std::size_t i) const { return angles_[i]; }
    std::span<const double> angles() const noexcept { return angles_; }
    auto begin() const noexcept { return angles_.begin(); }
    auto end() const noexcept { return angles_.end(); }

    /// Distinct atom positions (merged within kAngleTol, including across 0/2pi).
    std::vector<double> distinct() const;

    /// Cyclic gaps between consecutive distinct atoms; sums to 2pi.
    std::vector<double> gaps() const;

    bool has_coincident_atoms() const;

    /// Every angle shifted by delta and re-normalized.
    AngleSet rotated(double delta) const;

private:
    explicit AngleSet(std::vector<double> sorted) : angles_(std::move(sorted)) {}
    std::vector<double> angles_;
};

/// Free-function form of AngleSet::from_raw.
AngleSet normalize_angles(std::span<const double> raw);

}  // namespace circlecheb
