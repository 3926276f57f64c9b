#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "vsmooth/exact/interval.hpp"

namespace vsmooth::exact {

enum class Sign { positive, negative, zero, indeterminate };

namespace detail {
struct AvNode;
}

/// Cache of node enclosures at one fixed precision; shared nodes of a DAG are
/// evaluated once per precision level. Keys pin their nodes alive so cached
/// addresses can never be recycled by later allocations.
class EvalCache {
 public:
  explicit EvalCache(mpfr_prec_t bits) : bits_(bits) {}
  mpfr_prec_t bits() const { return bits_; }

 private:
  friend class AlgebraicValue;
  mpfr_prec_t bits_;
  std::unordered_map<std::shared_ptr<const detail::AvNode>, Interval> memo_;
};

/// A real number defined by an expression tree over exact rationals with
/// +, -, *, /, integer powers and r-th roots of positive radicands.
/// Rational subtrees are folded eagerly, so is_rational()/rational_value()
/// report exact simplifications; everything else is evaluated to certified
/// enclosures at any requested precision.
class AlgebraicValue {
 public:
  AlgebraicValue();  // exact 0

  static AlgebraicValue rational(mpq_class r);
  static AlgebraicValue integer(long v);

  friend AlgebraicValue operator+(const AlgebraicValue&, const AlgebraicValue&);
  friend AlgebraicValue operator-(const AlgebraicValue&, const AlgebraicValue&);
  friend AlgebraicValue operator*(const AlgebraicValue&, const AlgebraicValue&);
  friend AlgebraicValue operator/(const AlgebraicValue&, const AlgebraicValue&);
  AlgebraicValue operator-() const;

  AlgebraicValue pow(unsigned long n) const;
  /// r-th root, r >= 1. The radicand must be provably nonnegative at
  /// evaluation time; evaluation throws std::domain_error otherwise.
  AlgebraicValue root(unsigned long r) const;

  bool is_rational() const;
  const mpq_class& rational_value() const;

  Interval enclosure(mpfr_prec_t bits) const;
  Interval enclosure(EvalCache& cache) const;

 private:
  explicit AlgebraicValue(std::shared_ptr<const detail::AvNode> node);
  std::shared_ptr<const detail::AvNode> node_;
};

struct SignSequence {
  std::vector<Sign> signs;
  /// Precision at which each entry resolved; 0 for exact rationals.
  std::vector<mpfr_prec_t> bits_used;

  bool has_indeterminate() const;
  /// Number of sign changes ignoring zeros; nullopt when any entry is
  /// indeterminate.
  std::optional<int> sign_changes() const;
  mpfr_prec_t max_bits_used() const;
};

struct SignOptions {
  mpfr_prec_t start_bits = 128;
  mpfr_prec_t max_bits = 16384;
};

/// Determines the sign of every value by adaptive-precision certified
/// enclosures, doubling from start_bits up to max_bits. Exact rationals are
/// decided symbolically (the only path that can report zero); values whose
/// enclosure never excludes zero come back indeterminate.
SignSequence certified_signs(std::span<const AlgebraicValue> values,
                             const SignOptions& opts = {});

}  // namespace vsmooth::exact
