#include "circlecheb/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "circlecheb/errors.hpp"

namespace circlecheb {

namespace {

void strip(std::vector<cplx>& c) {
    while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

ComplexPoly ComplexPoly::monomial(int degree, cplx c) {
    std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx(0.0));
    v.back() = c;
    return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::from_roots(std::span<const cplx> roots) {
    std::vector<cplx> c{1.0};
    for (const cplx r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return ComplexPoly(std::move(c));
}

cplx ComplexPoly::operator[](int k) const {
    if (k < 0 || k > degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

cplx ComplexPoly::leading() const { return coeffs_.empty() ? cplx(0.0) : coeffs_.back(); }

cplx ComplexPoly::operator()(cplx z) const {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::trimmed(double rel_tol) const {
    const double cutoff = rel_tol * max_coeff();
    std::vector<cplx> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
    return ComplexPoly(std::move(c));
}

double ComplexPoly::max_coeff() const {
    double m = 0.0;
    for (const cplx c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return a + cplx(-1.0) * b; }

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ComplexPoly(std::move(c));
}

ComplexPoly operator*(cplx s, const ComplexPoly& a) {
    std::vector<cplx> c = a.coeffs_;
    for (cplx& x : c) x *= s;
    return ComplexPoly(std::move(c));
}

ComplexPoly reciprocal(const ComplexPoly& g, int order) {
    if (order < g.degree())
        throw CircleError(ErrorCode::OrderTooSmall, "reciprocal order below polynomial degree");
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = std::conj(g[order - k]);
    return ComplexPoly(std::move(c));
}

ComplexPoly reciprocal(const ComplexPoly& g) { return reciprocal(g, std::max(g.degree(), 0)); }

std::vector<cplx> polynomial_roots(const ComplexPoly& g) {
    const int n = g.degree();
    if (n < 1) throw CircleError(ErrorCode::Degenerate, "constant polynomial has no roots");
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -g[i] / g.leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

}  // namespace circlecheb
