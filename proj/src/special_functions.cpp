#include "circlecheb/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "circlecheb/errors.hpp"

namespace circlecheb {

namespace {

// B_{2j} / (2j)!, j = 1..10
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
};

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

double zeta(double p) {
    if (!(p > 1.0 + 1e-9)) throw CircleError(ErrorCode::OutOfDomain, "zeta needs p > 1");
    // Direct head sum, then Euler-Maclaurin tail from N with ten Bernoulli terms.
    const int N = 20;
    double head = 0.0;
    for (int k = N - 1; k >= 1; --k) head += std::pow(static_cast<double>(k), -p);
    const double nd = N;
    double tail = std::pow(nd, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(nd, -p);
    // term_j = B_{2j}/(2j)! * p (p+1) ... (p+2j-2) * N^{-p-2j+1}
    double rising = p;
    double npow = std::pow(nd, -p - 1.0);
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        tail += kBernoulliOverFactorial[j] * rising * npow;
        rising *= (p + 2.0 * j + 1.0) * (p + 2.0 * j + 2.0);
        npow /= nd * nd;
    }
    return head + tail;
}

double gamma_fn(double x) {
    if (!std::isfinite(x)) throw CircleError(ErrorCode::OutOfDomain, "gamma of non-finite value");
    if (x <= 0.0 && x == std::floor(x))
        throw CircleError(ErrorCode::OutOfDomain, "gamma pole at non-positive integer");
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double a = kLanczos[0];
    const double t = z + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace circlecheb
