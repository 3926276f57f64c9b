#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vsmooth {

enum class FunctionKind {
  root,                // w^p, 0 < p < 1
  log1p,               // log(1 + w)
  arcsinh_sqrt,        // asinh(sqrt(w))
  counterexample,      // piecewise linear / shifted square root
  linear_combination,  // positive combination of other models
  custom,              // caller-supplied closed forms
};

struct RootParams {
  double p = 0.0;
  // Set when the exponent was constructed as 1/q; p is then exactly 1.0/q
  // and exact-arithmetic verification can use q directly.
  std::optional<int> q;
};

struct CounterexampleParams {
  double eps = 0.0;
  double phi = 0.0;
  double breakpoint() const { return 1.0 + eps; }
  // Smallest delta at which the model is meant to be smoothed.
  double delta_min() const { return 1.0 + eps + phi; }
};

namespace detail {
class FnImpl;
}

/// A univariate function on [0, +inf) with closed-form value and first two
/// derivatives, plus an optional closed-form inverse of the first derivative.
/// Instances are immutable and cheap to copy; evaluation is reentrant.
class FunctionModel {
 public:
  double eval(double w) const;
  double deriv1(double w) const;
  double deriv2(double w) const;

  bool has_inverse_deriv1() const;
  double inverse_deriv1(double y) const;

  /// True when both derivatives are defined at w.
  bool twice_differentiable_at(double w) const;

  FunctionKind kind() const;
  const RootParams* root_params() const;
  const CounterexampleParams* counterexample_params() const;

  explicit FunctionModel(std::shared_ptr<const detail::FnImpl> impl);

 private:
  std::shared_ptr<const detail::FnImpl> impl_;
};

/// f(w) = w^p with 0 < p < 1. Throws std::invalid_argument outside (0,1).
FunctionModel make_root(double p);

/// f(w) = w^(1/q) for integer q >= 2; the exponent is recorded exactly.
FunctionModel make_root_q(int q);

/// f(w) = log(1 + w).
FunctionModel make_log1p();

/// f(w) = asinh(sqrt(w)) = log(sqrt(w) + sqrt(1 + w)).
FunctionModel make_arcsinh_sqrt();

/// Piecewise model that is linear on [0, 1+eps] and a shifted square root
/// above: concave and C^1 everywhere, but with a second-derivative jump at
/// 1+eps large enough to break the smoothing's shape condition there.
FunctionModel make_counterexample(double eps, double phi);

/// Pointwise combination sum_i weights[i] * models[i], all weights > 0.
FunctionModel combine(std::vector<FunctionModel> models,
                      std::vector<double> weights);

/// Model from caller-supplied closed forms (derivatives assumed valid for
/// w > 0). inverse_deriv1 may be empty.
FunctionModel make_custom(std::function<double(double)> eval,
                          std::function<double(double)> deriv1,
                          std::function<double(double)> deriv2,
                          std::function<double(double)> inverse_deriv1 = {});

/// Parses the CLI function grammar:
///   root:<p>            p as a decimal or "1/q"
///   log1p
///   arcsinh-sqrt
///   counterexample:<eps>,<phi>
///   sum:<spec>*<w>+<spec>*<w>...   (components must not themselves be sums)
FunctionModel parse_function_spec(const std::string& spec);

}  // namespace vsmooth
