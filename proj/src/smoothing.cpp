#include "vsmooth/smoothing.hpp"

#include <cmath>
#include <stdexcept>

namespace vsmooth {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
}

}  // namespace

double CubicSmoothing::eval(double w) const {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
  if (w < delta) return ((A * w + B) * w + C) * w;
  return tail.eval(w);
}

double CubicSmoothing::deriv1(double w) const {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
  if (w < delta) return (3.0 * A * w + 2.0 * B) * w + C;
  return tail.deriv1(w);
}

double CubicSmoothing::deriv2(double w) const {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
  if (w < delta) return 6.0 * A * w + 2.0 * B;
  return tail.deriv2(w);
}

CubicSmoothing build_cubic(const FunctionModel& f, double delta) {
  require_delta(delta);
  if (!f.twice_differentiable_at(delta))
    throw std::domain_error("f is not twice differentiable at delta");

  const double fd = f.eval(delta);
  const double f1 = f.deriv1(delta);
  const double f2 = f.deriv2(delta);

  // Taylor form around delta: g(w) = fd + f1 (w-d) + f2/2 (w-d)^2 + E (w-d)^3
  // with E fixed by g(0) = 0. Expanding this form keeps the matching
  // conditions at delta exact to roundoff even when the monomial coefficients
  // themselves are ill-conditioned (they cancel symbolically, not
  // numerically).
  const double E =
      (fd - delta * f1 + 0.5 * delta * delta * f2) / (delta * delta * delta);
  const double A = E;
  const double B = 0.5 * f2 - 3.0 * delta * E;
  const double C = f1 - delta * f2 + 3.0 * delta * delta * E;
  return CubicSmoothing{delta, A, B, C, f};
}

CubicSmoothing build_cubic_root(double p, double delta) {
  require_delta(delta);
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("root exponent must lie in (0, 1)");
  const double A = std::pow(delta, p - 3.0) * (p * p - 3.0 * p + 2.0) / 2.0;
  const double B = -std::pow(delta, p - 2.0) * (p * p - 4.0 * p + 3.0);
  const double C = std::pow(delta, p - 1.0) * (p * p - 5.0 * p + 6.0) / 2.0;
  return CubicSmoothing{delta, A, B, C, make_root(p)};
}

TdeltaResult check_tdelta(const FunctionModel& f, double delta) {
  require_delta(delta);
  if (!f.twice_differentiable_at(delta))
    throw std::domain_error("f is not twice differentiable at delta");
  const double margin =
      f.deriv2(delta) -
      (2.0 / delta) * (f.deriv1(delta) - f.eval(delta) / delta);
  return TdeltaResult{margin >= 0.0, margin};
}

namespace {

// f' is decreasing, so a sign check on the bracket certifies the bisection.
double invert_deriv1_by_bisection(const FunctionModel& f, double target,
                                  double delta) {
  double lo = 1e-300;
  double hi = delta * 1e6;
  const double at_lo = f.deriv1(lo);
  const double at_hi = f.deriv1(hi);
  if (!(at_lo >= target) || !(at_hi <= target))
    throw std::domain_error("target value outside the range of f'");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f.deriv1(mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double lambda_hat(const FunctionModel& f, const CubicSmoothing& s) {
  const double c = s.C;
  if (!(c > 0.0))
    throw std::domain_error("g'(0) is not positive; no matching shift exists");
  const double lam = f.has_inverse_deriv1()
                         ? f.inverse_deriv1(c)
                         : invert_deriv1_by_bisection(f, c, s.delta);
  const double resid = std::fabs(f.deriv1(lam) - c);
  if (!(resid <= 1e-10 * std::fmax(1.0, std::fabs(c))))
    throw std::runtime_error("shift residual check failed: |f'(lambda)-C| = " +
                             std::to_string(resid));
  return lam;
}

double lambda_hat_root(double p, double delta) {
  require_delta(delta);
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("root exponent must lie in (0, 1)");
  return delta *
         std::pow((p * p - 5.0 * p + 6.0) / (2.0 * p), 1.0 / (p - 1.0));
}

double ShiftedBound::eval(double w) const {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
  return base.eval(w + lambda) - base.eval(lambda);
}

double ShiftedBound::deriv1(double w) const {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
  return base.deriv1(w + lambda);
}

ShiftedBound shifted_bound(const FunctionModel& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  return ShiftedBound{lambda, f};
}

double OddExtension::eval(double w) const {
  if (w >= 0.0) return core.eval(w);
  return -core.eval(-w);
}

double OddExtension::deriv1(double w) const {
  // derivative of an odd function is even
  return core.deriv1(std::fabs(w));
}

double OddExtension::deriv2(double w) const {
  if (w >= 0.0) return core.deriv2(w);
  return -core.deriv2(-w);
}

OddExtension build_odd_extension(double p, double delta) {
  return OddExtension{build_cubic_root(p, delta)};
}

}  // namespace vsmooth
