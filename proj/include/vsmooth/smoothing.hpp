#pragma once

#include "vsmooth/functions.hpp"

namespace vsmooth {

/// Piecewise smoothing of an increasing concave f with f(0)=0: a homogeneous
/// cubic A w^3 + B w^2 + C w on [0, delta) matching f, f' and f'' at delta,
/// and f itself on [delta, +inf).
struct CubicSmoothing {
  double delta;
  double A;
  double B;
  double C;
  FunctionModel tail;

  double eval(double w) const;
  double deriv1(double w) const;
  double deriv2(double w) const;
};

/// Solves the 3x3 matching system at delta in closed form.
/// Throws std::invalid_argument for delta <= 0 and std::domain_error when f
/// is not twice differentiable at delta.
CubicSmoothing build_cubic(const FunctionModel& f, double delta);

/// Closed-form coefficients for f(w) = w^p.
CubicSmoothing build_cubic_root(double p, double delta);

struct TdeltaResult {
  bool satisfied;
  double margin;  // f''(d) - (2/d) (f'(d) - f(d)/d); satisfied iff >= 0
};

/// Shape condition: when satisfied, the cubic piece is increasing and concave.
TdeltaResult check_tdelta(const FunctionModel& f, double delta);

/// The shift making h'(0) = g'(0): (f')^{-1}(C). Uses the model's closed-form
/// inverse when present, otherwise certified bisection on the decreasing f'.
double lambda_hat(const FunctionModel& f, const CubicSmoothing& s);

/// Closed form for roots: delta * ((p^2-5p+6)/(2p))^(1/(p-1)).
double lambda_hat_root(double p, double delta);

/// Shifted lower bound h(w) = f(w + lambda) - f(lambda).
struct ShiftedBound {
  double lambda;
  FunctionModel base;

  double eval(double w) const;
  double deriv1(double w) const;
};

ShiftedBound shifted_bound(const FunctionModel& f, double lambda);

/// Odd extension of the root smoothing: w^p above delta, the cubic on
/// [0, delta], its odd reflection on [-delta, 0], and -(-w)^p below -delta.
/// Differentiable at 0 with derivative C; convex on (-inf,0], concave on
/// [0,+inf).
struct OddExtension {
  CubicSmoothing core;

  double eval(double w) const;
  double deriv1(double w) const;
  double deriv2(double w) const;  // one-sided (right) value at w = 0
};

OddExtension build_odd_extension(double p, double delta);

}  // namespace vsmooth
