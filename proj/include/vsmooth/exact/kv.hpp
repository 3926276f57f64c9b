#pragma once

#include <vector>

#include "vsmooth/exact/algebraic.hpp"
#include "vsmooth/exact/report.hpp"

namespace vsmooth::exact {

/// The radicals and block values behind the transformed polynomial
/// K_v(v) = (v+1)^{3q} K_u(beta / (v+1)):
///   Q    = (2q/b)^{1/(q-1)},  beta = (1 + Q^q)^{1/q}
///   V    = d beta^{3q}
///   W    = -3 d beta^{2q} Q^q - c beta^{2q}
///   X    = 3 d beta^q Q^{2q} + 2 c beta^q Q^q + b beta^q
///   Y    = -a beta
///   Z    = -d Q^{3q} - c Q^{2q} - b Q^q + a Q
/// Powers of Q and beta are built through the exact reductions
/// Q^{q-1} = 2q/b and beta^q = 1 + Q^q, keeping the expression DAG shallow.
struct KvParts {
  AlgebraicValue Q;
  AlgebraicValue beta;
  AlgebraicValue V, W, X, Y, Z;
};

KvParts kv_parts(int q);

/// All 3q+1 coefficients of K_v, ascending degree: coefficient i is
///   [i = 0] V + C(q,i) W + C(2q,i) X + C(3q-1,i) Y + C(3q,i) Z
/// with binomials outside their range equal to zero. Requires q >= 2.
std::vector<AlgebraicValue> kv_coefficients(int q);

/// Builds K_u(u) = d (u^q - Q^q)^3 - c (u^q - Q^q)^2 + b (u^q - Q^q)
///                 - a (u - Q) for an arbitrary argument expression
/// (Q^q formed by a plain power of the Q radical, no reduction).
AlgebraicValue ku_value(int q, const AlgebraicValue& u);

/// Derivative K_u'(u) = 3dq (u^q-Q^q)^2 u^{q-1} - 2cq (u^q-Q^q) u^{q-1}
///                      + bq u^{q-1} - a.
AlgebraicValue ku_deriv_value(int q, const AlgebraicValue& u);

/// Descartes certificate: verified iff the coefficient signs resolve with no
/// indeterminate entries and show exactly two sign changes, capping the
/// positive roots of K_v at the known double root.
VerificationReport verify_better_bound(int q, const SignOptions& opts = {});

/// Certifies the double root of K_u at Q: the exact rational identity
/// b*q*(2q/b) = 2q^2 = a, plus enclosures of K_u(Q) and K_u'(Q) that contain
/// zero with width below 2^-(bits-8).
VerificationReport ku_double_root_check(int q, mpfr_prec_t bits = 256);

/// Exhaustive positive-root search for K_v used to sanity-check the Descartes
/// count on small q: certified-sign crossings of K_v on a log grid over
/// (0, v_max], plus a certificate that the image of the double root is a
/// sign-touching local minimum (K_v' flips sign across it while K_v stays
/// nonnegative nearby).
struct KvRootSearch {
  int q = 0;
  int crossing_roots = 0;          // strict sign changes of K_v
  bool double_root_certified = false;
  double double_root_location = 0; // v* = beta/Q - 1 (approximate)
  int total_roots_found() const {
    return crossing_roots + (double_root_certified ? 2 : 0);
  }
};

KvRootSearch kv_root_search(int q, double v_max = 1e6, int grid_points = 4096,
                            mpfr_prec_t bits = 384);

}  // namespace vsmooth::exact
