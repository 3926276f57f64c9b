#pragma once

#include <span>
#include <vector>

namespace vsmooth {

/// Average relative performance of the cubic smoothing and the shifted bound
/// on [0, delta] for f(w) = w^p; both measures are independent of delta.
struct PerfResult {
  double p = 0.0;
  double g_measure = 0.0;            // exactly 3 / (4 - p)
  double h_measure = 0.0;            // quadrature value
  double quad_abs_err_estimate = 0.0;
  double gap() const { return g_measure - h_measure; }
};

/// (1/delta) Int_0^delta g/f dw = 3/(4-p). Requires 0 < p < 1.
double avg_perf_g(double p);

/// (1/delta) Int_0^delta h/f dw, delta-free form: Int_0^1 ((v+P)^p - P^p)/v^p dv
/// with P = ((p^2-5p+6)/(2p))^(1/(p-1)); the removable v=0 endpoint evaluates
/// to 0. Throws std::runtime_error if the quadrature misses abs_tol.
double avg_perf_h(double p, double abs_tol = 1e-10);

PerfResult perf_point(double p, double abs_tol = 1e-10);

/// Both measures for each grid value; OpenMP across the grid.
std::vector<PerfResult> perf_sweep(std::span<const double> p_grid,
                                   double abs_tol = 1e-10, int jobs = 0);

/// Serial reference (testing / benchmark baseline).
std::vector<PerfResult> perf_sweep_serial(std::span<const double> p_grid,
                                          double abs_tol = 1e-10);

}  // namespace vsmooth
