// vsmooth: build and evaluate cubic smoothings of near-zero-nonsmooth concave
// functions, run exact verification campaigns, and emit figure data.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsmooth/exact/campaign.hpp"
#include "vsmooth/functions.hpp"
#include "vsmooth/performance.hpp"
#include "vsmooth/smoothing.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal representation.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

struct CommonOpts {
  std::string function_spec;
  double delta = 0.0;
  std::string format = "text";
  std::string out_path;
  int samples = 1000;
  int jobs = 0;
  long start_bits = 128;
  long max_bits = 16384;
  double quad_tol = 1e-10;
  bool timing = false;
};

vsmooth::FunctionModel parse_function_or_usage(const std::string& spec) {
  if (spec.empty()) throw UsageError("--function is required");
  try {
    return vsmooth::parse_function_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_delta(double delta) {
  if (!(delta > 0.0)) throw UsageError("--delta must be positive");
}

vsmooth::exact::QRange parse_q_range(const std::string& arg) {
  if (arg.empty()) throw UsageError("--q is required (int or int..int)");
  vsmooth::exact::QRange range;
  const auto dots = arg.find("..");
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(arg);
    } else {
      range.lo = std::stoi(arg.substr(0, dots));
      range.hi = std::stoi(arg.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError("cannot parse --q value: '" + arg + "'");
  }
  if (range.lo < 2 || range.hi < range.lo)
    throw UsageError("--q must satisfy 2 <= min <= max");
  return range;
}

std::vector<double> parse_p_grid(const std::string& arg) {
  if (arg.empty()) throw UsageError("--p-grid is required (a:b:step)");
  double a = 0, b = 0, step = 0;
  const auto c1 = arg.find(':');
  const auto c2 = arg.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw UsageError("--p-grid must be a:b:step");
  try {
    a = std::stod(arg.substr(0, c1));
    b = std::stod(arg.substr(c1 + 1, c2 - c1 - 1));
    step = std::stod(arg.substr(c2 + 1));
  } catch (const std::exception&) {
    throw UsageError("cannot parse --p-grid value: '" + arg + "'");
  }
  if (!(step > 0.0)) throw UsageError("--p-grid step must be positive");
  if (!(a <= b)) throw UsageError("--p-grid needs a <= b");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double p = a + step * i;
    if (p > b + step * 1e-9) break;
    if (!(p > 0.0 && p < 1.0))
      throw UsageError("--p-grid values must lie strictly inside (0, 1)");
    grid.push_back(p);
  }
  return grid;
}

int run_coeffs(const CommonOpts& opts) {
  const auto f = parse_function_or_usage(opts.function_spec);
  require_delta(opts.delta);

  const auto s = vsmooth::build_cubic(f, opts.delta);
  std::optional<double> lam;
  std::string lam_error;
  try {
    lam = vsmooth::lambda_hat(f, s);
  } catch (const std::exception& e) {
    lam_error = e.what();
  }

  OutputTarget out(opts.out_path);
  if (opts.format == "json") {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["function"] = opts.function_spec;
    j["delta"] = opts.delta;
    j["A"] = s.A;
    j["B"] = s.B;
    j["C"] = s.C;
    j["gprime0"] = s.C;
    if (lam)
      j["lambda_hat"] = *lam;
    else
      j["lambda_hat"] = nullptr;
    out.stream() << j.dump() << "\n";
  } else if (opts.format == "text") {
    out.stream() << "A = " << fmt(s.A) << "\n"
                 << "B = " << fmt(s.B) << "\n"
                 << "C = " << fmt(s.C) << "\n"
                 << "gprime0 = " << fmt(s.C) << "\n";
    if (lam)
      out.stream() << "lambda_hat = " << fmt(*lam) << "\n";
    else
      out.stream() << "lambda_hat = unavailable (" << lam_error << ")\n";
  } else {
    throw UsageError("coeffs supports --format text|json");
  }
  return 0;
}

int run_compare(const CommonOpts& opts) {
  const auto f = parse_function_or_usage(opts.function_spec);
  require_delta(opts.delta);
  if (opts.samples < 1) throw UsageError("--samples must be >= 1");

  const auto s = vsmooth::build_cubic(f, opts.delta);
  const double lam = vsmooth::lambda_hat(f, s);
  const auto h = vsmooth::shifted_bound(f, lam);
  const double fd = f.eval(opts.delta);
  const double f1 = f.deriv1(opts.delta);

  OutputTarget out(opts.out_path);
  out.stream() << "w,f,g,h,linext\n";
  for (int i = 0; i <= opts.samples; ++i) {
    const double w = 2.0 * opts.delta * i / opts.samples;
    const double fw = f.eval(w);
    const double linext = w < opts.delta ? fd + f1 * (w - opts.delta) : fw;
    out.stream() << fmt(w) << ',' << fmt(fw) << ',' << fmt(s.eval(w)) << ','
                 << fmt(h.eval(w)) << ',' << fmt(linext) << "\n";
  }
  return 0;
}

int run_verify(const CommonOpts& opts, const std::string& check,
               const std::string& q_arg) {
  using namespace vsmooth::exact;

  OutputTarget out(opts.out_path);

  if (check == "tdelta") {
    const auto f = parse_function_or_usage(opts.function_spec);
    require_delta(opts.delta);
    const auto res = vsmooth::check_tdelta(f, opts.delta);
    const char* status = res.satisfied ? "verified" : "failed";
    if (opts.format == "json" || opts.format == "jsonl") {
      nlohmann::json j;
      j["schema_version"] = "1";
      j["check"] = "tdelta";
      j["status"] = status;
      j["margin"] = res.margin;
      j["function"] = opts.function_spec;
      j["delta"] = opts.delta;
      out.stream() << j.dump() << "\n";
    } else {
      out.stream() << "tdelta " << status << " margin=" << fmt(res.margin)
                   << "\n";
    }
    return res.satisfied ? 0 : 1;
  }

  if (check != "lower" && check != "better")
    throw UsageError("verify check must be lower, better or tdelta");

  const QRange range = parse_q_range(q_arg);
  if (opts.start_bits < 64) throw UsageError("--start-bits must be >= 64");
  if (opts.max_bits < opts.start_bits)
    throw UsageError("--max-bits must be >= --start-bits");

  CampaignOptions copts;
  copts.jobs = opts.jobs;
  copts.sign.start_bits = opts.start_bits;
  copts.sign.max_bits = opts.max_bits;

  ReportSink sink;
  if (opts.format == "jsonl") {
    sink = [&](const VerificationReport& r) {
      nlohmann::json j = report_to_json(r, opts.timing);
      j["schema_version"] = "1";
      out.stream() << j.dump() << "\n";
    };
  } else if (opts.format == "text") {
    sink = [&](const VerificationReport& r) {
      out.stream() << report_to_line(r) << "\n";
    };
  } else if (opts.format != "json") {
    throw UsageError("verify supports --format text|json|jsonl");
  }

  const auto reports = check == "lower"
                           ? run_lower_campaign(range, copts, sink)
                           : run_better_campaign(range, copts, sink);

  if (opts.format == "json") {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["reports"] = reports_to_json(reports, opts.timing);
    out.stream() << j.dump() << "\n";
  }

  bool all_verified = true;
  for (const auto& r : reports) all_verified = all_verified && r.verified();
  if (opts.format == "text")
    out.stream() << (all_verified ? "all verified" : "NOT all verified")
                 << " (" << reports.size() << " reports)\n";
  return all_verified ? 0 : 1;
}

int run_perf(const CommonOpts& opts, const std::string& grid_arg) {
  const auto grid = parse_p_grid(grid_arg);
  if (!(opts.quad_tol > 0.0)) throw UsageError("--quad-tol must be positive");

  const auto results = vsmooth::perf_sweep(grid, opts.quad_tol, opts.jobs);

  OutputTarget out(opts.out_path);
  out.stream() << "p,g_measure,h_measure,gap\n";
  for (const auto& r : results) {
    out.stream() << fmt(r.p) << ',' << fmt(r.g_measure) << ','
                 << fmt(r.h_measure) << ',' << fmt(r.gap()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic smoothing of root-like concave functions: coefficients, "
               "bound comparison, exact verification campaigns, performance "
               "measures"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env = std::getenv("VSMOOTH_MAX_BITS")) {
    try {
      opts.max_bits = std::stol(env);
    } catch (const std::exception&) {
      std::cerr << "invalid VSMOOTH_MAX_BITS, using default\n";
    }
  }

  std::string q_arg;
  std::string grid_arg;
  std::string check;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--function", opts.function_spec,
                    "function spec: root:<p>, log1p, arcsinh-sqrt, "
                    "counterexample:<eps>,<phi>, sum:<spec>*<w>+...");
    cmd->add_option("--delta", opts.delta, "smoothing breakpoint (> 0)");
    cmd->add_option("--format", opts.format, "text|csv|json|jsonl");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--jobs", opts.jobs, "worker threads (default: all cores)");
  };

  auto* coeffs = app.add_subcommand("coeffs", "cubic coefficients and shift");
  add_common(coeffs);

  auto* compare = app.add_subcommand(
      "compare", "CSV of f, smoothing g, shifted bound h and the linear "
                 "extrapolation on [0, 2 delta]");
  add_common(compare);
  compare->add_option("--samples", opts.samples, "row count minus one");

  auto* verify = app.add_subcommand("verify", "exact verification campaigns");
  verify->add_option("check", check, "lower | better | tdelta")->required();
  add_common(verify);
  verify->add_option("--q", q_arg, "q or q-range, e.g. 2..200");
  verify->add_option("--start-bits", opts.start_bits,
                     "initial interval precision");
  verify->add_option("--max-bits", opts.max_bits,
                     "precision cap (env VSMOOTH_MAX_BITS overrides default)");
  verify->add_flag("--timing", opts.timing,
                   "include wall-time fields in reports");

  auto* perf = app.add_subcommand("perf", "average relative performance sweep");
  add_common(perf);
  perf->add_option("--p-grid", grid_arg, "exponent grid a:b:step");
  perf->add_option("--quad-tol", opts.quad_tol,
                   "absolute quadrature tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean; parse errors are usage
  }

  try {
    if (coeffs->parsed()) {
      if (opts.format == "csv") throw UsageError("coeffs has no csv format");
      return run_coeffs(opts);
    }
    if (compare->parsed()) {
      if (opts.format == "text") opts.format = "csv";
      if (opts.format != "csv") throw UsageError("compare emits csv only");
      return run_compare(opts);
    }
    if (verify->parsed()) return run_verify(opts, check, q_arg);
    if (perf->parsed()) {
      if (opts.format == "text") opts.format = "csv";
      if (opts.format != "csv") throw UsageError("perf emits csv only");
      return run_perf(opts, grid_arg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
