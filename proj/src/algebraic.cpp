#include "vsmooth/exact/algebraic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vsmooth::exact {

namespace detail {

enum class AvKind { rational, add, sub, mul, div, neg, pow, root };

struct AvNode {
  AvKind kind;
  mpq_class rat;  // payload for AvKind::rational
  std::shared_ptr<const AvNode> lhs;
  std::shared_ptr<const AvNode> rhs;
  unsigned long arg = 0;  // exponent (pow) or root index (root)
};

namespace {

std::shared_ptr<const AvNode> make_rational(mpq_class r) {
  r.canonicalize();
  auto n = std::make_shared<AvNode>();
  n->kind = AvKind::rational;
  n->rat = std::move(r);
  return n;
}

std::shared_ptr<const AvNode> make_binary(AvKind kind,
                                          std::shared_ptr<const AvNode> l,
                                          std::shared_ptr<const AvNode> r) {
  auto n = std::make_shared<AvNode>();
  n->kind = kind;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

bool is_rat(const std::shared_ptr<const AvNode>& n) {
  return n->kind == AvKind::rational;
}

}  // namespace
}  // namespace detail

using detail::AvKind;
using detail::AvNode;

AlgebraicValue::AlgebraicValue() : node_(detail::make_rational(mpq_class(0))) {}

AlgebraicValue::AlgebraicValue(std::shared_ptr<const AvNode> node)
    : node_(std::move(node)) {}

AlgebraicValue AlgebraicValue::rational(mpq_class r) {
  return AlgebraicValue(detail::make_rational(std::move(r)));
}

AlgebraicValue AlgebraicValue::integer(long v) {
  return AlgebraicValue(detail::make_rational(mpq_class(v)));
}

bool AlgebraicValue::is_rational() const {
  return node_->kind == AvKind::rational;
}

const mpq_class& AlgebraicValue::rational_value() const {
  if (!is_rational())
    throw std::logic_error("value is not an exact rational");
  return node_->rat;
}

AlgebraicValue operator+(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (detail::is_rat(a.node_) && detail::is_rat(b.node_))
    return AlgebraicValue::rational(a.node_->rat + b.node_->rat);
  return AlgebraicValue(detail::make_binary(AvKind::add, a.node_, b.node_));
}

AlgebraicValue operator-(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (detail::is_rat(a.node_) && detail::is_rat(b.node_))
    return AlgebraicValue::rational(a.node_->rat - b.node_->rat);
  return AlgebraicValue(detail::make_binary(AvKind::sub, a.node_, b.node_));
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (detail::is_rat(a.node_) && detail::is_rat(b.node_))
    return AlgebraicValue::rational(a.node_->rat * b.node_->rat);
  return AlgebraicValue(detail::make_binary(AvKind::mul, a.node_, b.node_));
}

AlgebraicValue operator/(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (detail::is_rat(b.node_)) {
    if (b.node_->rat == 0) throw std::invalid_argument("division by zero");
    if (detail::is_rat(a.node_))
      return AlgebraicValue::rational(a.node_->rat / b.node_->rat);
  }
  return AlgebraicValue(detail::make_binary(AvKind::div, a.node_, b.node_));
}

AlgebraicValue AlgebraicValue::operator-() const {
  if (is_rational()) return rational(-node_->rat);
  auto n = std::make_shared<AvNode>();
  n->kind = AvKind::neg;
  n->lhs = node_;
  return AlgebraicValue(std::move(n));
}

AlgebraicValue AlgebraicValue::pow(unsigned long n) const {
  if (n == 0) return integer(1);
  if (n == 1) return *this;
  if (is_rational()) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), node_->rat.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), node_->rat.get_den_mpz_t(), n);
    out.canonicalize();
    return rational(std::move(out));
  }
  auto node = std::make_shared<AvNode>();
  node->kind = AvKind::pow;
  node->lhs = node_;
  node->arg = n;
  return AlgebraicValue(std::move(node));
}

AlgebraicValue AlgebraicValue::root(unsigned long r) const {
  if (r == 0) throw std::invalid_argument("0-th root");
  if (r == 1) return *this;
  if (is_rational()) {
    if (node_->rat < 0)
      throw std::domain_error("root of a negative rational");
    if (node_->rat == 0 || node_->rat == 1) return *this;
  }
  auto node = std::make_shared<AvNode>();
  node->kind = AvKind::root;
  node->lhs = node_;
  node->arg = r;
  return AlgebraicValue(std::move(node));
}

namespace {

using NodePtr = std::shared_ptr<const AvNode>;
using Memo = std::unordered_map<NodePtr, Interval>;

// unordered_map references stay valid across inserts, so returning references
// into the memo is safe during recursive evaluation.
const Interval& eval_node(const NodePtr& n, Memo& memo, mpfr_prec_t bits) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Interval out(bits);
  switch (n->kind) {
    case AvKind::rational:
      out = Interval::from_rational(n->rat, bits);
      break;
    case AvKind::add:
      out = eval_node(n->lhs, memo, bits) + eval_node(n->rhs, memo, bits);
      break;
    case AvKind::sub:
      out = eval_node(n->lhs, memo, bits) - eval_node(n->rhs, memo, bits);
      break;
    case AvKind::mul:
      out = eval_node(n->lhs, memo, bits) * eval_node(n->rhs, memo, bits);
      break;
    case AvKind::div:
      out = eval_node(n->lhs, memo, bits) / eval_node(n->rhs, memo, bits);
      break;
    case AvKind::neg:
      out = -eval_node(n->lhs, memo, bits);
      break;
    case AvKind::pow:
      out = eval_node(n->lhs, memo, bits).pow_int(n->arg);
      break;
    case AvKind::root:
      out = eval_node(n->lhs, memo, bits).root(n->arg);
      break;
  }
  return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

Interval AlgebraicValue::enclosure(EvalCache& cache) const {
  return eval_node(node_, cache.memo_, cache.bits());
}

Interval AlgebraicValue::enclosure(mpfr_prec_t bits) const {
  EvalCache cache(bits);
  return enclosure(cache);
}

bool SignSequence::has_indeterminate() const {
  for (Sign s : signs)
    if (s == Sign::indeterminate) return true;
  return false;
}

std::optional<int> SignSequence::sign_changes() const {
  if (has_indeterminate()) return std::nullopt;
  int changes = 0;
  Sign prev = Sign::zero;
  for (Sign s : signs) {
    if (s == Sign::zero) continue;
    if (prev != Sign::zero && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

mpfr_prec_t SignSequence::max_bits_used() const {
  mpfr_prec_t m = 0;
  for (mpfr_prec_t b : bits_used) m = std::max(m, b);
  return m;
}

SignSequence certified_signs(std::span<const AlgebraicValue> values,
                             const SignOptions& opts) {
  if (opts.start_bits < 64)
    throw std::invalid_argument("start_bits must be at least 64");
  SignSequence out;
  out.signs.assign(values.size(), Sign::indeterminate);
  out.bits_used.assign(values.size(), 0);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_rational()) {
      const int s = sgn(values[i].rational_value());
      out.signs[i] =
          s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
    } else {
      pending.push_back(i);
    }
  }

  for (mpfr_prec_t bits = opts.start_bits;
       !pending.empty() && bits <= opts.max_bits; bits *= 2) {
    EvalCache cache(bits);
    std::vector<std::size_t> still;
    for (std::size_t i : pending) {
      const int s = values[i].enclosure(cache).sign();
      if (s > 0) {
        out.signs[i] = Sign::positive;
        out.bits_used[i] = bits;
      } else if (s < 0) {
        out.signs[i] = Sign::negative;
        out.bits_used[i] = bits;
      } else {
        still.push_back(i);
      }
    }
    pending.swap(still);
  }
  for (std::size_t i : pending) out.bits_used[i] = opts.max_bits;
  return out;
}

}  // namespace vsmooth::exact
