#include "vsmooth/exact/verify.hpp"

#include <chrono>
#include <stdexcept>

namespace vsmooth::exact {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

VerificationReport verify_factorization(int q) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.q = q;
  rep.check = Check::factorization;

  const ExactPolynomial product = multiply_by_one_minus_t_cubed(qq_terms(q));
  const ExactPolynomial target = pq_poly(q);
  rep.status = Status::verified;
  for (std::size_t i = 0; i < product.coeffs().size(); ++i) {
    if (product.coeff(i) != target.coeff(i)) {
      rep.status = Status::failed;
      rep.offending_index = static_cast<long>(i);
      rep.detail = "coefficient mismatch at degree " + std::to_string(i);
      break;
    }
  }
  if (rep.status == Status::verified)
    rep.detail = std::to_string(3 * q) + " coefficients identical";
  rep.millis = elapsed_ms(t0);
  return rep;
}

VerificationReport verify_positivity(int q) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.q = q;
  rep.check = Check::positivity;
  rep.status = Status::verified;

  const ExactPolynomial terms = qq_terms(q);
  for (std::size_t i = 0; i < terms.coeffs().size(); ++i) {
    if (terms.coeff(i) <= 0) {
      rep.status = Status::failed;
      rep.offending_index = static_cast<long>(i);
      rep.detail = "nonpositive coefficient at degree " + std::to_string(i);
      break;
    }
  }

  if (rep.status == Status::verified) {
    // Boundary closed forms of the coefficient ranges, evaluated in exact
    // rational arithmetic as self-checks.
    const QuadCoeffs k = QuadCoeffs::from_q(q);
    const mpq_class qq(q);
    const mpq_class c2_left = binom2(q + 1) * k.a - binom2(2) * k.b;
    const mpq_class c2_left_form =
        qq * qq * qq * qq + qq * qq * qq - 6 * qq * qq + 5 * qq - 1;
    const mpq_class c2_right = binom2(2 * q) * k.a - binom2(q + 1) * k.b;
    const mpq_class c2_right_form = qq * qq * qq * qq -
                                    mpq_class(5, 2) * qq * qq * qq +
                                    2 * qq * qq - qq / 2;
    const mpq_class c3_right =
        binom2(3 * q - 2) * k.a - binom2(2 * q - 1) * k.b + binom2(q - 1) * k.c;
    const mpq_class c3_right_form = 2 * qq * qq - 3 * qq + 1;
    const bool forms_ok = c2_left == c2_left_form && c2_left > 0 &&
                          c2_right == c2_right_form && c2_right > 0 &&
                          c3_right == c3_right_form && c3_right > 0;
    if (!forms_ok) {
      rep.status = Status::failed;
      rep.detail = "boundary closed-form self-check failed";
    } else {
      rep.detail = std::to_string(3 * q - 3) + " positive coefficients";
    }
  }
  rep.millis = elapsed_ms(t0);
  return rep;
}

}  // namespace vsmooth::exact
