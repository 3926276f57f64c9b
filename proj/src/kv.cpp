#include "vsmooth/exact/kv.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "vsmooth/exact/int_poly.hpp"

namespace vsmooth::exact {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

mpq_class rho_of(int q) {
  const long lq = q;
  return mpq_class(2 * lq, 6 * lq * lq - 5 * lq + 1);
}

// C(n, i) -> C(n, i+1) in place; zero once i passes n.
void binomial_step(mpz_class& bin, long n, long i) {
  if (i >= n) {
    bin = 0;
    return;
  }
  bin *= (n - i);
  mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(),
                  static_cast<unsigned long>(i + 1));
}

}  // namespace

KvParts kv_parts(int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  const auto a = AlgebraicValue::rational(mpq_class(k.a));
  const auto b = AlgebraicValue::rational(mpq_class(k.b));
  const auto c = AlgebraicValue::rational(mpq_class(k.c));
  const auto d = AlgebraicValue::rational(mpq_class(k.d));

  const mpq_class rho = rho_of(q);
  const auto rho_av = AlgebraicValue::rational(rho);
  const auto Q = rho_av.root(static_cast<unsigned long>(q - 1));

  // Q^{q-1} = rho exactly, so Q^{mq} = rho^m Q^m for m = 1, 2, 3.
  const auto Qq = rho_av * Q;
  const auto Q2q = AlgebraicValue::rational(rho * rho) * Q.pow(2);
  const auto Q3q = AlgebraicValue::rational(rho * rho * rho) * Q.pow(3);

  // S = beta^q = 1 + Q^q; beta^{2q} = S^2, beta^{3q} = S^3.
  const auto S = AlgebraicValue::integer(1) + Qq;
  const auto S2 = S.pow(2);
  const auto S3 = S.pow(3);
  const auto beta = S.root(static_cast<unsigned long>(q));

  KvParts parts{
      Q,
      beta,
      /*V=*/d * S3,
      /*W=*/-(AlgebraicValue::integer(3) * d * S2 * Qq) - c * S2,
      /*X=*/AlgebraicValue::integer(3) * d * S * Q2q +
          AlgebraicValue::integer(2) * c * S * Qq + b * S,
      /*Y=*/-(a * beta),
      /*Z=*/-(d * Q3q) - c * Q2q - b * Qq + a * Q,
  };
  return parts;
}

std::vector<AlgebraicValue> kv_coefficients(int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  const KvParts parts = kv_parts(q);
  const long n = 3L * q;

  std::vector<AlgebraicValue> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);

  // Running binomial rows C(q,i), C(2q,i), C(3q-1,i), C(3q,i).
  mpz_class row_q = 1, row_2q = 1, row_3qm1 = 1, row_3q = 1;
  for (long i = 0; i <= n; ++i) {
    AlgebraicValue coeff;
    if (i == 0) coeff = coeff + parts.V;
    if (row_q != 0)
      coeff = coeff + AlgebraicValue::rational(mpq_class(row_q)) * parts.W;
    if (row_2q != 0)
      coeff = coeff + AlgebraicValue::rational(mpq_class(row_2q)) * parts.X;
    if (row_3qm1 != 0)
      coeff = coeff + AlgebraicValue::rational(mpq_class(row_3qm1)) * parts.Y;
    if (row_3q != 0)
      coeff = coeff + AlgebraicValue::rational(mpq_class(row_3q)) * parts.Z;
    coeffs.push_back(std::move(coeff));

    binomial_step(row_q, q, i);
    binomial_step(row_2q, 2L * q, i);
    binomial_step(row_3qm1, 3L * q - 1, i);
    binomial_step(row_3q, 3L * q, i);
  }
  return coeffs;
}

AlgebraicValue ku_value(int q, const AlgebraicValue& u) {
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  const auto a = AlgebraicValue::rational(mpq_class(k.a));
  const auto b = AlgebraicValue::rational(mpq_class(k.b));
  const auto c = AlgebraicValue::rational(mpq_class(k.c));
  const auto d = AlgebraicValue::rational(mpq_class(k.d));
  const auto Q = AlgebraicValue::rational(rho_of(q))
                     .root(static_cast<unsigned long>(q - 1));
  const auto t = u.pow(static_cast<unsigned long>(q)) -
                 Q.pow(static_cast<unsigned long>(q));
  return d * t.pow(3) - c * t.pow(2) + b * t - a * (u - Q);
}

AlgebraicValue ku_deriv_value(int q, const AlgebraicValue& u) {
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  const auto aq = AlgebraicValue::rational(mpq_class(k.a));
  const auto bq = AlgebraicValue::rational(mpq_class(k.b * q));
  const auto cq = AlgebraicValue::rational(mpq_class(k.c * q));
  const auto dq = AlgebraicValue::rational(mpq_class(k.d * q));
  const auto Q = AlgebraicValue::rational(rho_of(q))
                     .root(static_cast<unsigned long>(q - 1));
  const auto t = u.pow(static_cast<unsigned long>(q)) -
                 Q.pow(static_cast<unsigned long>(q));
  const auto um1 = u.pow(static_cast<unsigned long>(q - 1));
  return AlgebraicValue::integer(3) * dq * t.pow(2) * um1 -
         AlgebraicValue::integer(2) * cq * t * um1 + bq * um1 - aq;
}

VerificationReport verify_better_bound(int q, const SignOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.q = q;
  rep.check = Check::descartes;

  const std::vector<AlgebraicValue> coeffs = kv_coefficients(q);
  const SignSequence seq = certified_signs(coeffs, opts);

  if (seq.has_indeterminate()) {
    rep.status = Status::indeterminate;
    for (std::size_t i = 0; i < seq.signs.size(); ++i) {
      if (seq.signs[i] == Sign::indeterminate) {
        rep.offending_index = static_cast<long>(i);
        break;
      }
    }
    rep.precision_bits = opts.max_bits;
    rep.detail = "sign not resolved within the precision cap";
  } else {
    const int changes = *seq.sign_changes();
    rep.sign_changes = changes;
    rep.precision_bits = static_cast<long>(seq.max_bits_used());
    rep.status = changes == 2 ? Status::verified : Status::failed;
    if (rep.status == Status::failed)
      rep.detail = "expected exactly 2 sign changes";
  }
  rep.millis = elapsed_ms(t0);
  return rep;
}

VerificationReport ku_double_root_check(int q, mpfr_prec_t bits) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.q = q;
  rep.check = Check::double_root;
  rep.precision_bits = static_cast<long>(bits);

  // Exact rational identity behind K_u'(Q) = 0: b q Q^{q-1} = b q (2q/b)
  // = 2q^2 = a.
  const QuadCoeffs k = QuadCoeffs::from_q(q);
  const mpq_class identity = mpq_class(k.b) * q * rho_of(q);
  if (identity != mpq_class(k.a) || mpq_class(k.a) != 2 * mpq_class(q) * q) {
    rep.status = Status::failed;
    rep.detail = "exact identity b*q*(2q/b) = 2q^2 = a failed";
    rep.millis = elapsed_ms(t0);
    return rep;
  }

  // Enclosures of K_u(Q) and K_u'(Q). The requested width bound is
  // 2^-(bits-8); integer powers amplify endpoint rounding roughly q-fold and
  // the terms carry magnitudes up to ~q^3, so evaluate with guard bits and
  // report against the caller's bound.
  const mpfr_prec_t guard =
      bits + 64 + 4 * static_cast<mpfr_prec_t>(std::ceil(std::log2(q)));
  const auto Q = AlgebraicValue::rational(rho_of(q))
                     .root(static_cast<unsigned long>(q - 1));
  const Interval ku_at_q = ku_value(q, Q).enclosure(guard);
  const Interval kup_at_q = ku_deriv_value(q, Q).enclosure(guard);

  const double width_cap = std::ldexp(1.0, -static_cast<int>(bits - 8));
  const bool ok = ku_at_q.contains_zero() && kup_at_q.contains_zero() &&
                  ku_at_q.width_upper() <= width_cap &&
                  kup_at_q.width_upper() <= width_cap;
  rep.status = ok ? Status::verified : Status::failed;
  rep.detail = "width(K_u(Q)) <= " + std::to_string(ku_at_q.width_upper()) +
               ", width(K_u'(Q)) <= " + std::to_string(kup_at_q.width_upper());
  rep.millis = elapsed_ms(t0);
  return rep;
}

namespace {

Interval horner(const std::vector<Interval>& coeffs, const Interval& v) {
  Interval acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * v + coeffs[i];
  return acc;
}

}  // namespace

KvRootSearch kv_root_search(int q, double v_max, int grid_points,
                            mpfr_prec_t bits) {
  if (grid_points < 16) throw std::invalid_argument("grid too coarse");
  KvRootSearch out;
  out.q = q;

  const std::vector<AlgebraicValue> coeffs = kv_coefficients(q);
  EvalCache cache(bits);
  std::vector<Interval> c(coeffs.size(), Interval(bits));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c[i] = coeffs[i].enclosure(cache);
  std::vector<Interval> dc(coeffs.size() - 1, Interval(bits));
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    dc[i - 1] = Interval::from_long(static_cast<long>(i), bits) * c[i];

  // Certified-sign crossings of K_v on a log grid over (0, v_max].
  const double lo = 1e-9;
  int prev_sign = 0;
  double prev_v = 0;
  for (int j = 0; j < grid_points; ++j) {
    const double x = std::log(lo) + (std::log(v_max) - std::log(lo)) *
                                        static_cast<double>(j) /
                                        (grid_points - 1);
    const double v = std::exp(x);
    const int s = horner(c, Interval::from_double(v, bits)).sign();
    if (s != 0) {
      if (prev_sign != 0 && s != prev_sign) {
        // refine by certified bisection, counting one crossing
        double a = prev_v, b = v;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (a + b);
          const int sm = horner(c, Interval::from_double(mid, bits)).sign();
          if (sm == 0) break;  // touching zero; stop refining
          if (sm == prev_sign)
            a = mid;
          else
            b = mid;
        }
        ++out.crossing_roots;
      }
      prev_sign = s;
      prev_v = v;
    }
  }

  // Certify the image of the double root: v* = beta/Q - 1 is a sign-touching
  // local minimum of K_v.
  const KvParts parts = kv_parts(q);
  const AlgebraicValue vstar =
      parts.beta / parts.Q - AlgebraicValue::integer(1);
  out.double_root_location = vstar.enclosure(cache).midpoint_double();

  // offset 2^-(bits/4): far enough for signs to resolve, close enough that
  // no other root can interpose
  const mpq_class h(mpz_class(1),
                    mpz_class(1) << static_cast<unsigned long>(bits / 4));
  const AlgebraicValue v_left =
      vstar * AlgebraicValue::rational(mpq_class(1) - h);
  const AlgebraicValue v_right =
      vstar * AlgebraicValue::rational(mpq_class(1) + h);

  const Interval kv_at_star = horner(c, vstar.enclosure(cache));
  const Interval kvp_left = horner(dc, v_left.enclosure(cache));
  const Interval kvp_right = horner(dc, v_right.enclosure(cache));
  const Interval kv_left = horner(c, v_left.enclosure(cache));
  const Interval kv_right = horner(c, v_right.enclosure(cache));

  out.double_root_certified =
      kv_at_star.contains_zero() && kvp_left.sign() < 0 &&
      kvp_right.sign() > 0 && kv_left.sign() > 0 && kv_right.sign() > 0;
  return out;
}

}  // namespace vsmooth::exact
