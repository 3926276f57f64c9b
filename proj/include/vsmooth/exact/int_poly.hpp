#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace vsmooth::exact {

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients (index = degree in t). total_degree fixes the implied
/// homogeneous complement in L, so two polynomials are equal only when both
/// the coefficient vectors and the total degrees agree.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;

  /// Pads (or validates) the coefficient vector to total_degree + 1 entries.
  /// Throws std::invalid_argument if coeffs has more entries than that.
  ExactPolynomial(std::vector<mpz_class> coeffs, int total_degree);

  int total_degree() const { return total_degree_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  /// Coefficient of t^i; zero beyond the stored range.
  const mpz_class& coeff(std::size_t i) const;

  mpz_class coeff_sum() const;

  bool operator==(const ExactPolynomial& other) const;

 private:
  std::vector<mpz_class> coeffs_;
  int total_degree_ = -1;
};

/// The four integer parameters of the lower-bound factorization for a given q.
struct QuadCoeffs {
  mpz_class a;  // 2q^2
  mpz_class b;  // 6q^2 - 5q + 1
  mpz_class c;  // 6q^2 - 8q + 2
  mpz_class d;  // 2q^2 - 3q + 1

  static QuadCoeffs from_q(int q);

  /// a - b + c - d; always 0 (the quartic-term polynomial vanishes at t = L).
  mpz_class alternating_sum() const { return a - b + c - d; }
};

/// C(n, 2) = n(n-1)/2 for n >= 2, else 0.
mpz_class binom2(long n);

/// The cofactor polynomial with 3q - 3 terms: coefficient of t^i is
///   C(i+2,2) a - C(i-q+3,2) b + C(i-2q+3,2) c
/// over i = 0 .. 3q-4 (binomials vanish below their range). Requires q >= 2.
ExactPolynomial qq_terms(int q);

/// The sparse quartic-term polynomial: a at degree 0, -b at q-1, c at 2q-1,
/// -d at 3q-1 (total degree 3q-1). Requires q >= 2.
ExactPolynomial pq_poly(int q);

/// qq_terms(q) * (1 - t)^3, exactly.
ExactPolynomial multiply_by_one_minus_t_cubed(const ExactPolynomial& p);

}  // namespace vsmooth::exact
