#pragma once

#include <complex>
#include <span>
#include <vector>

namespace circlecheb {

using cplx = std::complex<double>;

/// Complex polynomial, coefficients in ascending degree. The stored vector is
/// kept normalized: no zero leading coefficient except for the zero polynomial,
/// which is represented by an empty vector.
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> coeffs);

    static ComplexPoly constant(cplx c) { return ComplexPoly({c}); }
    static ComplexPoly monomial(int degree, cplx c = 1.0);

    /// Monic polynomial with exactly the given roots (with multiplicity).
    static ComplexPoly from_roots(std::span<const cplx> roots);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^k (zero beyond the degree).
    cplx operator[](int k) const;
    cplx leading() const;

    cplx operator()(cplx z) const;  // Horner
    ComplexPoly derivative() const;

    /// Drops leading coefficients with |c| <= rel_tol * max|c|.
    ComplexPoly trimmed(double rel_tol) const;

    /// Largest coefficient modulus, or 0 for the zero polynomial.
    double max_coeff() const;

    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(cplx s, const ComplexPoly& a);

private:
    std::vector<cplx> coeffs_;
};

/// Reciprocal polynomial of the given order:
///   g*(z) = conj(a_order) + conj(a_{order-1}) z + ... + conj(a_0) z^order,
/// i.e. g*(z) = z^order conj(g(1/conj z)). Throws OrderTooSmall if order < deg g.
ComplexPoly reciprocal(const ComplexPoly& g, int order);
ComplexPoly reciprocal(const ComplexPoly& g);

/// Roots of a nonconstant polynomial (companion-matrix eigenvalues).
std::vector<cplx> polynomial_roots(const ComplexPoly& g);

}  // namespace circlecheb
