#include "vsmooth/exact/int_poly.hpp"

#include <stdexcept>

namespace vsmooth::exact {

namespace {
const mpz_class kZero = 0;
}

ExactPolynomial::ExactPolynomial(std::vector<mpz_class> coeffs,
                                 int total_degree)
    : coeffs_(std::move(coeffs)), total_degree_(total_degree) {
  if (total_degree_ < 0)
    throw std::invalid_argument("total degree must be nonnegative");
  if (coeffs_.size() > static_cast<std::size_t>(total_degree_) + 1)
    throw std::invalid_argument("more coefficients than total_degree + 1");
  coeffs_.resize(static_cast<std::size_t>(total_degree_) + 1);
}

const mpz_class& ExactPolynomial::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) return kZero;
  return coeffs_[i];
}

mpz_class ExactPolynomial::coeff_sum() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool ExactPolynomial::operator==(const ExactPolynomial& other) const {
  return total_degree_ == other.total_degree_ && coeffs_ == other.coeffs_;
}

QuadCoeffs QuadCoeffs::from_q(int q) {
  const long lq = q;
  QuadCoeffs out;
  out.a = 2 * lq * lq;
  out.b = 6 * lq * lq - 5 * lq + 1;
  out.c = 6 * lq * lq - 8 * lq + 2;
  out.d = 2 * lq * lq - 3 * lq + 1;
  return out;
}

mpz_class binom2(long n) {
  if (n < 2) return 0;
  mpz_class out = n;
  out *= n - 1;
  return out / 2;
}

ExactPolynomial qq_terms(int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  const long n = 3L * q - 3;  // term count; degrees 0 .. 3q-4
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    coeffs[static_cast<std::size_t>(i)] = binom2(i + 2) * k.a -
                                          binom2(i - q + 3) * k.b +
                                          binom2(i - 2 * q + 3) * k.c;
  }
  return ExactPolynomial(std::move(coeffs), 3 * q - 4);
}

ExactPolynomial pq_poly(int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(3 * q));
  coeffs[0] = k.a;
  coeffs[static_cast<std::size_t>(q - 1)] = -k.b;
  coeffs[static_cast<std::size_t>(2 * q - 1)] = k.c;
  coeffs[static_cast<std::size_t>(3 * q - 1)] = -k.d;
  return ExactPolynomial(std::move(coeffs), 3 * q - 1);
}

ExactPolynomial multiply_by_one_minus_t_cubed(const ExactPolynomial& p) {
  // (1 - t)^3 = 1 - 3t + 3t^2 - t^3
  const auto& in = p.coeffs();
  std::vector<mpz_class> out(in.size() + 3);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const mpz_class& c = in[i];
    if (c == 0) continue;
    out[i] += c;
    out[i + 1] -= 3 * c;
    out[i + 2] += 3 * c;
    out[i + 3] -= c;
  }
  return ExactPolynomial(std::move(out), p.total_degree() + 3);
}

}  // namespace vsmooth::exact
