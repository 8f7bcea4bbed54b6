#include "circlecheb/kernel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "circlecheb/angle_set.hpp"
#include "circlecheb/errors.hpp"

namespace circlecheb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Reduce to delta in (-pi, pi]; the kernels are even so we work with |delta|
// and restore the sign of the odd first derivative.
struct Reduced {
    double x;     // |delta| in [0, pi]
    double sign;  // sign of delta
};

Reduced reduce(double theta) {
    const double d = angle_diff(theta, 0.0);
    return {std::abs(d), d < 0.0 ? -1.0 : 1.0};
}

}  // namespace

RieszKernel::RieszKernel(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw CircleError(ErrorCode::OutOfDomain, "Riesz exponent must be positive");
}

KernelSample RieszKernel::eval(double theta) const {
    const auto [x, sign] = reduce(theta);
    if (x <= kAngleTol) return {kInf, std::numeric_limits<double>::quiet_NaN(), kInf};
    const double s = 2.0 * std::sin(0.5 * x);  // chord length
    const double ds = std::cos(0.5 * x);
    const double d2s = -0.25 * s;
    if (p_ == 2.0) {
        const double inv = 1.0 / s;
        const double f = inv * inv;
        const double f1 = -2.0 * f * inv * ds;
        const double f2 = 6.0 * f * f * ds * ds - 2.0 * f * inv * d2s;
        return {f, sign * f1, f2};
    }
    const double f = std::pow(s, -p_);
    const double f_over_s = f / s;
    const double f1 = -p_ * f_over_s * ds;
    const double f2 = p_ * (p_ + 1.0) * (f_over_s / s) * ds * ds - p_ * f_over_s * d2s;
    return {f, sign * f1, f2};
}

std::string RieszKernel::name() const {
    std::ostringstream os;
    os << "riesz(" << p_ << ")";
    return os.str();
}

KernelSample LogKernel::eval(double theta) const {
    const auto [x, sign] = reduce(theta);
    if (x <= kAngleTol) return {kInf, std::numeric_limits<double>::quiet_NaN(), kInf};
    const double h = 0.5 * x;
    const double sn = std::sin(h);
    const double cs = std::cos(h);
    return {-std::log(2.0 * sn), sign * (-0.5 * cs / sn), 0.25 / (sn * sn)};
}

std::unique_ptr<Kernel> make_kernel(KernelKind kind, double p) {
    switch (kind) {
        case KernelKind::Riesz: return std::make_unique<RieszKernel>(p);
        case KernelKind::Log: return std::make_unique<LogKernel>();
    }
    throw CircleError(ErrorCode::OutOfDomain, "unknown kernel kind");
}

}  // namespace circlecheb
