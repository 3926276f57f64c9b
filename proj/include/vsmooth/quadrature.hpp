#pragma once

#include <functional>

namespace vsmooth {

struct QuadResult {
  double value = 0.0;
  double abs_err_estimate = 0.0;
  int panels = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) quadrature on [a, b]: worst-panel-first
/// bisection until the summed error estimate drops below abs_tol or the panel
/// budget runs out. The integrand must be finite on (a, b); endpoints are
/// never sampled exactly by the rule's interior nodes.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol,
                              int max_panels = 200000);

}  // namespace vsmooth
