#include "circlecheb/angle_set.hpp"

#include <algorithm>
#include <cmath>

#include "circlecheb/errors.hpp"

namespace circlecheb {

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative number plus 2pi can round up to 2pi itself
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double angle_diff(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -kPi) d += kTwoPi;
    return d;
}

AngleSet AngleSet::from_raw(std::span<const double> raw) {
    if (raw.empty()) throw CircleError(ErrorCode::EmptySet, "angle list is empty");
    std::vector<double> out;
    out.reserve(raw.size());
    for (double a : raw) {
        if (!std::isfinite(a)) throw CircleError(ErrorCode::InvalidAngle, "non-finite angle");
        out.push_back(wrap_angle(a));
    }
    std::sort(out.begin(), out.end());
    return AngleSet(std::move(out));
}

AngleSet AngleSet::uniform(std::size_t n, double rotation) {
    if (n == 0) throw CircleError(ErrorCode::EmptySet, "uniform set needs n >= 1");
    std::vector<double> raw(n);
    for (std::size_t k = 0; k < n; ++k)
        raw[k] = rotation + kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    return from_raw(raw);
}

std::vector<double> AngleSet::distinct() const {
    std::vector<double> out;
    for (double a : angles_) {
        if (out.empty() || a - out.back() > kAngleTol) out.push_back(a);
    }
    // merge across the 0 / 2pi seam
    if (out.size() > 1 && out.front() + kTwoPi - out.back() <= kAngleTol) out.pop_back();
    return out;
}

std::vector<double> AngleSet::gaps() const {
    const auto d = distinct();
    std::vector<double> g(d.size());
    for (std::size_t i = 0; i + 1 < d.size(); ++i) g[i] = d[i + 1] - d[i];
    g.back() = d.front() + kTwoPi - d.back();
    return g;
}

bool AngleSet::has_coincident_atoms() const { return distinct().size() != angles_.size(); }

AngleSet AngleSet::rotated(double delta) const {
    std::vector<double> raw(angles_.begin(), angles_.end());
    for (double& a : raw) a += delta;
    return from_raw(raw);
}

AngleSet normalize_angles(std::span<const double> raw) { return AngleSet::from_raw(raw); }

}  // namespace circlecheb
