#pragma once

#include <memory>
#include <string>

namespace circlecheb {

struct KernelSample {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

/// Even, 2pi-periodic kernel f that is convex on (0, 2pi). The potential of a
/// point set is S_f(theta) = sum_k f(theta - theta_k).
class Kernel {
public:
    virtual ~Kernel() = default;

    /// f, f', f'' at an arbitrary real theta. For a pole kernel at theta = 0
    /// (mod 2pi) the value is +inf.
    virtual KernelSample eval(double theta) const = 0;
    virtual bool has_pole_at_zero() const noexcept = 0;
    virtual std::string name() const = 0;
};

/// f(theta) = (2 sin(theta/2))^{-p} = |e^{i theta} - 1|^{-p}, p > 0.
class RieszKernel final : public Kernel {
public:
    explicit RieszKernel(double p);
    KernelSample eval(double theta) const override;
    bool has_pole_at_zero() const noexcept override { return true; }
    std::string name() const override;
    double p() const noexcept { return p_; }

private:
    double p_;
};

/// f(theta) = -ln(2 sin(theta/2)) = -ln|e^{i theta} - 1|.
class LogKernel final : public Kernel {
public:
    KernelSample eval(double theta) const override;
    bool has_pole_at_zero() const noexcept override { return true; }
    std::string name() const override { return "log"; }
};

enum class KernelKind { Riesz, Log };

std::unique_ptr<Kernel> make_kernel(KernelKind kind, double p = 2.0);

}  // namespace circlecheb
