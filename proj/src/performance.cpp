#include "vsmooth/performance.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <stdexcept>

#include "vsmooth/quadrature.hpp"

namespace vsmooth {

namespace {

void require_p(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("exponent p must lie in (0, 1)");
}

}  // namespace

double avg_perf_g(double p) {
  require_p(p);
  return 3.0 / (4.0 - p);
}

double avg_perf_h(double p, double abs_tol) {
  require_p(p);
  const double P =
      std::pow((p * p - 5.0 * p + 6.0) / (2.0 * p), 1.0 / (p - 1.0));
  const double Pp = std::pow(P, p);
  const auto integrand = [p, P, Pp](double v) {
    if (v <= 0.0) return 0.0;  // removable endpoint: ratio ~ v^{1-p}
    return (std::pow(v + P, p) - Pp) / std::pow(v, p);
  };
  const QuadResult r = integrate_adaptive(integrand, 0.0, 1.0, abs_tol);
  if (!r.converged)
    throw std::runtime_error("quadrature did not reach the requested tolerance");
  return r.value;
}

PerfResult perf_point(double p, double abs_tol) {
  require_p(p);
  const double P =
      std::pow((p * p - 5.0 * p + 6.0) / (2.0 * p), 1.0 / (p - 1.0));
  const double Pp = std::pow(P, p);
  const auto integrand = [p, P, Pp](double v) {
    if (v <= 0.0) return 0.0;
    return (std::pow(v + P, p) - Pp) / std::pow(v, p);
  };
  const QuadResult r = integrate_adaptive(integrand, 0.0, 1.0, abs_tol);
  if (!r.converged)
    throw std::runtime_error("quadrature did not reach the requested tolerance");
  return PerfResult{p, avg_perf_g(p), r.value, r.abs_err_estimate};
}

std::vector<PerfResult> perf_sweep(std::span<const double> p_grid,
                                   double abs_tol, int jobs) {
  for (double p : p_grid) require_p(p);
  std::vector<PerfResult> out(p_grid.size());
  const int n = static_cast<int>(p_grid.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] =
          perf_point(p_grid[static_cast<std::size_t>(i)], abs_tol);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<PerfResult> perf_sweep_serial(std::span<const double> p_grid,
                                          double abs_tol) {
  for (double p : p_grid) require_p(p);
  std::vector<PerfResult> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) out.push_back(perf_point(p, abs_tol));
  return out;
}

}  // namespace vsmooth
