#pragma once

#include "vsmooth/exact/int_poly.hpp"
#include "vsmooth/exact/report.hpp"

namespace vsmooth::exact {

/// Exact integer identity qq_terms(q) * (1-t)^3 == pq_poly(q), coefficient by
/// coefficient (both sides dehomogenized at L = 1; valid because both are
/// homogeneous of total degree 3q-1). Requires q >= 2.
VerificationReport verify_factorization(int q);

/// Every coefficient of qq_terms(q) is a positive integer, plus the exact
/// rational self-checks of the boundary closed forms:
///   C2(q)      = q^4 + q^3 - 6q^2 + 5q - 1 > 0
///   C2(2q-1)   = q^4 - (5/2)q^3 + 2q^2 - q/2 > 0
///   C3(3q-3)   = 2q^2 - 3q + 1 > 0
/// Requires q >= 2.
VerificationReport verify_positivity(int q);

}  // namespace vsmooth::exact
