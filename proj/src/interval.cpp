#include "vsmooth/exact/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsmooth::exact {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, r.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_si(out.lo_, v, MPFR_RNDD);
  mpfr_set_si(out.hi_, v, MPFR_RNDU);
  return out;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_d(out.lo_, v, MPFR_RNDD);
  mpfr_set_d(out.hi_, v, MPFR_RNDU);
  return out;
}

Interval Interval::whole_line(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_inf(out.lo_, -1);
  mpfr_set_inf(out.hi_, +1);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator-() const {
  Interval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);  // negation is exact
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

// Products and quotients take the hull over all endpoint pairs, each pair
// evaluated once rounding down and once rounding up.
Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  if (b.contains_zero()) return Interval::whole_line(prec);
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval Interval::pow_int(unsigned long n) const {
  Interval out(prec_);
  if (n == 0) {
    mpfr_set_ui(out.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(out.hi_, 1, MPFR_RNDU);
    return out;
  }
  const bool even = (n % 2 == 0);
  if (!even || mpfr_sgn(lo_) >= 0) {
    // monotone on the whole interval (odd power or nonnegative base)
    mpfr_pow_ui(out.lo_, lo_, n, MPFR_RNDD);
    mpfr_pow_ui(out.hi_, hi_, n, MPFR_RNDU);
    return out;
  }
  if (mpfr_sgn(hi_) <= 0) {
    // even power of a nonpositive interval: decreasing
    mpfr_pow_ui(out.lo_, hi_, n, MPFR_RNDD);
    mpfr_pow_ui(out.hi_, lo_, n, MPFR_RNDU);
    return out;
  }
  // straddles zero, even power: [0, max(|lo|,|hi|)^n]
  mpfr_set_zero(out.lo_, 1);
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_neg(m, lo_, MPFR_RNDU);
  if (mpfr_cmp(m, hi_) < 0) mpfr_set(m, hi_, MPFR_RNDU);
  mpfr_pow_ui(out.hi_, m, n, MPFR_RNDU);
  mpfr_clear(m);
  return out;
}

Interval Interval::root(unsigned long r) const {
  if (r == 0) throw std::invalid_argument("0-th root");
  if (mpfr_sgn(lo_) < 0)
    throw std::domain_error("root of an interval with negative lower bound");
  Interval out(prec_);
  mpfr_rootn_ui(out.lo_, lo_, r, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_, hi_, r, MPFR_RNDU);
  return out;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return +1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double Interval::width_upper() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  const double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

double Interval::magnitude_upper() const {
  mpfr_t a, b;
  mpfr_init2(a, prec_);
  mpfr_init2(b, prec_);
  mpfr_abs(a, lo_, MPFR_RNDU);
  mpfr_abs(b, hi_, MPFR_RNDU);
  if (mpfr_cmp(a, b) < 0) mpfr_set(a, b, MPFR_RNDU);
  const double m = mpfr_get_d(a, MPFR_RNDU);
  mpfr_clear(a);
  mpfr_clear(b);
  return m;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint_double() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_add(t, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(t, t, 1, MPFR_RNDN);
  const double m = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return m;
}

std::string Interval::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace vsmooth::exact
