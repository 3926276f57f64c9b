#include "vsmooth/functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vsmooth {

namespace detail {

class FnImpl {
 public:
  virtual ~FnImpl() = default;
  virtual double eval(double w) const = 0;
  virtual double deriv1(double w) const = 0;
  virtual double deriv2(double w) const = 0;
  virtual bool has_inverse_deriv1() const { return false; }
  virtual double inverse_deriv1(double) const {
    throw std::domain_error("model has no closed-form inverse of f'");
  }
  virtual bool twice_differentiable_at(double w) const { return w > 0.0; }
  virtual FunctionKind kind() const = 0;
  virtual const RootParams* root_params() const { return nullptr; }
  virtual const CounterexampleParams* counterexample_params() const {
    return nullptr;
  }
};

namespace {

void require_nonnegative(double w) {
  if (!(w >= 0.0)) throw std::domain_error("w must be >= 0");
}

void require_positive_arg(double w) {
  if (!(w > 0.0)) throw std::domain_error("derivative undefined at w <= 0");
}

class RootFn final : public FnImpl {
 public:
  explicit RootFn(RootParams params) : params_(params) {}

  double eval(double w) const override {
    require_nonnegative(w);
    return std::pow(w, params_.p);
  }
  double deriv1(double w) const override {
    require_positive_arg(w);
    return params_.p * std::pow(w, params_.p - 1.0);
  }
  double deriv2(double w) const override {
    require_positive_arg(w);
    return params_.p * (params_.p - 1.0) * std::pow(w, params_.p - 2.0);
  }
  bool has_inverse_deriv1() const override { return true; }
  double inverse_deriv1(double y) const override {
    if (!(y > 0.0)) throw std::domain_error("f' of a root is positive");
    return std::pow(y / params_.p, 1.0 / (params_.p - 1.0));
  }
  FunctionKind kind() const override { return FunctionKind::root; }
  const RootParams* root_params() const override { return &params_; }

 private:
  RootParams params_;
};

class Log1pFn final : public FnImpl {
 public:
  double eval(double w) const override {
    require_nonnegative(w);
    return std::log1p(w);
  }
  double deriv1(double w) const override {
    require_nonnegative(w);
    return 1.0 / (1.0 + w);
  }
  double deriv2(double w) const override {
    require_nonnegative(w);
    return -1.0 / ((1.0 + w) * (1.0 + w));
  }
  bool has_inverse_deriv1() const override { return true; }
  double inverse_deriv1(double y) const override {
    if (!(y > 0.0 && y <= 1.0))
      throw std::domain_error("value outside the range of f' = 1/(1+w)");
    return 1.0 / y - 1.0;
  }
  FunctionKind kind() const override { return FunctionKind::log1p; }
};

class ArcsinhSqrtFn final : public FnImpl {
 public:
  double eval(double w) const override {
    require_nonnegative(w);
    return std::asinh(std::sqrt(w));
  }
  double deriv1(double w) const override {
    require_positive_arg(w);
    return 1.0 / (2.0 * std::sqrt(w) * std::sqrt(w + 1.0));
  }
  double deriv2(double w) const override {
    require_positive_arg(w);
    return (-2.0 * w - 1.0) /
           (4.0 * std::pow(w, 1.5) * std::pow(w + 1.0, 1.5));
  }
  bool has_inverse_deriv1() const override { return true; }
  double inverse_deriv1(double y) const override {
    if (!(y > 0.0)) throw std::domain_error("f' of asinh(sqrt(w)) is positive");
    // Solve 4 w (w+1) = 1/y^2.
    return 0.5 * (std::sqrt(1.0 + 1.0 / (y * y)) - 1.0);
  }
  FunctionKind kind() const override { return FunctionKind::arcsinh_sqrt; }
};

class CounterexampleFn final : public FnImpl {
 public:
  explicit CounterexampleFn(CounterexampleParams params) : params_(params) {}

  double eval(double w) const override {
    require_nonnegative(w);
    const double brk = params_.breakpoint();
    if (w <= brk) return w / (2.0 * std::sqrt(params_.eps));
    return std::sqrt(w - 1.0) - std::sqrt(params_.eps) +
           (1.0 + params_.eps) / (2.0 * std::sqrt(params_.eps));
  }
  double deriv1(double w) const override {
    require_nonnegative(w);
    const double brk = params_.breakpoint();
    if (w <= brk) return 1.0 / (2.0 * std::sqrt(params_.eps));
    return 1.0 / (2.0 * std::sqrt(w - 1.0));
  }
  double deriv2(double w) const override {
    require_nonnegative(w);
    const double brk = params_.breakpoint();
    if (w < brk) return 0.0;  // linear piece
    if (w == brk)
      throw std::domain_error("not twice differentiable at the breakpoint");
    return -1.0 / (4.0 * std::pow(w - 1.0, 1.5));
  }
  bool twice_differentiable_at(double w) const override {
    return w > params_.breakpoint();
  }
  FunctionKind kind() const override { return FunctionKind::counterexample; }
  const CounterexampleParams* counterexample_params() const override {
    return &params_;
  }

 private:
  CounterexampleParams params_;
};

class CustomFn final : public FnImpl {
 public:
  CustomFn(std::function<double(double)> eval, std::function<double(double)> d1,
           std::function<double(double)> d2, std::function<double(double)> inv)
      : eval_(std::move(eval)),
        d1_(std::move(d1)),
        d2_(std::move(d2)),
        inv_(std::move(inv)) {}

  double eval(double w) const override {
    require_nonnegative(w);
    return eval_(w);
  }
  double deriv1(double w) const override {
    require_positive_arg(w);
    return d1_(w);
  }
  double deriv2(double w) const override {
    require_positive_arg(w);
    return d2_(w);
  }
  bool has_inverse_deriv1() const override { return static_cast<bool>(inv_); }
  double inverse_deriv1(double y) const override {
    if (!inv_) return FnImpl::inverse_deriv1(y);
    return inv_(y);
  }
  FunctionKind kind() const override { return FunctionKind::custom; }

 private:
  std::function<double(double)> eval_, d1_, d2_, inv_;
};

class CombinationFn final : public FnImpl {
 public:
  CombinationFn(std::vector<FunctionModel> models, std::vector<double> weights)
      : models_(std::move(models)), weights_(std::move(weights)) {}

  double eval(double w) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < models_.size(); ++i)
      s += weights_[i] * models_[i].eval(w);
    return s;
  }
  double deriv1(double w) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < models_.size(); ++i)
      s += weights_[i] * models_[i].deriv1(w);
    return s;
  }
  double deriv2(double w) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < models_.size(); ++i)
      s += weights_[i] * models_[i].deriv2(w);
    return s;
  }
  bool twice_differentiable_at(double w) const override {
    for (const auto& m : models_)
      if (!m.twice_differentiable_at(w)) return false;
    return true;
  }
  FunctionKind kind() const override {
    return FunctionKind::linear_combination;
  }

 private:
  std::vector<FunctionModel> models_;
  std::vector<double> weights_;
};

}  // namespace
}  // namespace detail

FunctionModel::FunctionModel(std::shared_ptr<const detail::FnImpl> impl)
    : impl_(std::move(impl)) {}

double FunctionModel::eval(double w) const { return impl_->eval(w); }
double FunctionModel::deriv1(double w) const { return impl_->deriv1(w); }
double FunctionModel::deriv2(double w) const { return impl_->deriv2(w); }
bool FunctionModel::has_inverse_deriv1() const {
  return impl_->has_inverse_deriv1();
}
double FunctionModel::inverse_deriv1(double y) const {
  return impl_->inverse_deriv1(y);
}
bool FunctionModel::twice_differentiable_at(double w) const {
  return impl_->twice_differentiable_at(w);
}
FunctionKind FunctionModel::kind() const { return impl_->kind(); }
const RootParams* FunctionModel::root_params() const {
  return impl_->root_params();
}
const CounterexampleParams* FunctionModel::counterexample_params() const {
  return impl_->counterexample_params();
}

FunctionModel make_root(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("root exponent must lie in (0, 1)");
  return FunctionModel(std::make_shared<detail::RootFn>(RootParams{p, {}}));
}

FunctionModel make_root_q(int q) {
  if (q < 2) throw std::invalid_argument("root denominator q must be >= 2");
  return FunctionModel(
      std::make_shared<detail::RootFn>(RootParams{1.0 / q, q}));
}

FunctionModel make_log1p() {
  return FunctionModel(std::make_shared<detail::Log1pFn>());
}

FunctionModel make_arcsinh_sqrt() {
  return FunctionModel(std::make_shared<detail::ArcsinhSqrtFn>());
}

FunctionModel make_counterexample(double eps, double phi) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(phi > 0.0)) throw std::invalid_argument("phi must be positive");
  return FunctionModel(std::make_shared<detail::CounterexampleFn>(
      CounterexampleParams{eps, phi}));
}

FunctionModel make_custom(std::function<double(double)> eval,
                          std::function<double(double)> deriv1,
                          std::function<double(double)> deriv2,
                          std::function<double(double)> inverse_deriv1) {
  if (!eval || !deriv1 || !deriv2)
    throw std::invalid_argument("custom model needs eval, deriv1 and deriv2");
  return FunctionModel(std::make_shared<detail::CustomFn>(
      std::move(eval), std::move(deriv1), std::move(deriv2),
      std::move(inverse_deriv1)));
}

FunctionModel combine(std::vector<FunctionModel> models,
                      std::vector<double> weights) {
  if (models.empty())
    throw std::invalid_argument("combination needs at least one component");
  if (models.size() != weights.size())
    throw std::invalid_argument("one weight per component required");
  for (double w : weights)
    if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
  return FunctionModel(std::make_shared<detail::CombinationFn>(
      std::move(models), std::move(weights)));
}

namespace {

double parse_number(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                s + "'");
  }
}

FunctionModel parse_simple_spec(const std::string& spec) {
  if (spec == "log1p") return make_log1p();
  if (spec == "arcsinh-sqrt") return make_arcsinh_sqrt();
  if (spec.rfind("root:", 0) == 0) {
    const std::string arg = spec.substr(5);
    const auto slash = arg.find('/');
    if (slash != std::string::npos) {
      const double num = parse_number(arg.substr(0, slash), "root numerator");
      const double den = parse_number(arg.substr(slash + 1), "root denominator");
      if (num == 1.0 && den == static_cast<int>(den) && den >= 2.0)
        return make_root_q(static_cast<int>(den));
      if (!(den > 0.0)) throw std::invalid_argument("root denominator <= 0");
      return make_root(num / den);
    }
    return make_root(parse_number(arg, "root exponent"));
  }
  if (spec.rfind("counterexample:", 0) == 0) {
    const std::string arg = spec.substr(15);
    const auto comma = arg.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("counterexample needs <eps>,<phi>");
    return make_counterexample(
        parse_number(arg.substr(0, comma), "counterexample eps"),
        parse_number(arg.substr(comma + 1), "counterexample phi"));
  }
  throw std::invalid_argument("unknown function spec: '" + spec + "'");
}

}  // namespace

FunctionModel parse_function_spec(const std::string& spec) {
  if (spec.rfind("sum:", 0) != 0) return parse_simple_spec(spec);

  std::vector<FunctionModel> models;
  std::vector<double> weights;
  std::stringstream terms(spec.substr(4));
  std::string term;
  while (std::getline(terms, term, '+')) {
    const auto star = term.rfind('*');
    if (star == std::string::npos)
      throw std::invalid_argument("sum term needs <spec>*<weight>: '" + term +
                                  "'");
    models.push_back(parse_simple_spec(term.substr(0, star)));
    weights.push_back(parse_number(term.substr(star + 1), "sum weight"));
  }
  return combine(std::move(models), std::move(weights));
}

}  // namespace vsmooth
