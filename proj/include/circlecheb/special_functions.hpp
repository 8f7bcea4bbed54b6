#pragma once

namespace circlecheb {

/// Riemann zeta at real p > 1. Throws OutOfDomain for p <= 1 + 1e-9.
double zeta(double p);

/// Real gamma function; Lanczos approximation with reflection below 1/2.
/// Throws OutOfDomain at the poles 0, -1, -2, ...
double gamma_fn(double x);

}  // namespace circlecheb
