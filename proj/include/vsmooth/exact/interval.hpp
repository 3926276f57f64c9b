#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace vsmooth::exact {

/// A closed interval [lo, hi] with mpfr endpoints, rounded outward by every
/// operation so the true real result is always enclosed. The working
/// precision is fixed at construction; operations inherit the larger operand
/// precision.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_rational(const mpq_class& r, mpfr_prec_t prec);
  static Interval from_long(long v, mpfr_prec_t prec);
  static Interval from_double(double v, mpfr_prec_t prec);
  /// [-inf, +inf]; returned by division through zero.
  static Interval whole_line(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  /// x^n for n >= 0 (handles sign cases for even exponents).
  Interval pow_int(unsigned long n) const;

  /// r-th root, r >= 1; requires lo >= 0 (throws std::domain_error).
  Interval root(unsigned long r) const;

  /// +1 when lo > 0, -1 when hi < 0, 0 when the interval straddles or touches
  /// zero (no sign certificate).
  int sign() const;
  bool contains_zero() const;

  /// Upper bounds, rounded up, as doubles.
  double width_upper() const;
  double magnitude_upper() const;

  double lo_double() const;
  double hi_double() const;
  double midpoint_double() const;

  std::string str(int digits = 8) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace vsmooth::exact
