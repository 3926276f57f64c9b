// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are fixed here, not configurable.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vsmooth/exact/campaign.hpp"
#include "vsmooth/exact/int_poly.hpp"
#include "vsmooth/exact/kv.hpp"
#include "vsmooth/functions.hpp"
#include "vsmooth/performance.hpp"
#include "vsmooth/quadrature.hpp"
#include "vsmooth/smoothing.hpp"

using namespace vsmooth;
using namespace vsmooth::exact;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string evidence;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      evidence = "FIRST FAILURE: " + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool close_rel(double x, double y, double rel, double abs = 0.0) {
  return std::fabs(x - y) <=
         std::fmax(abs, rel * std::fmax(std::fabs(x), std::fabs(y)));
}

std::vector<long> coeff_longs(const ExactPolynomial& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(VSMOOTH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {127, ""};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  return {WEXITSTATUS(pclose(pipe)), std::move(out)};
}

// ---------------------------------------------------------------------------

Criterion criterion1() {
  Criterion c{1, "cofactor tables and exact factorization/positivity 2..200"};
  const auto t0 = std::chrono::steady_clock::now();

  c.require(coeff_longs(qq_terms(2)) == std::vector<long>{8, 9, 3},
            "Q_2 table");
  c.require(coeff_longs(qq_terms(3)) ==
                std::vector<long>{18, 54, 68, 60, 30, 10},
            "Q_3 table");
  c.require(coeff_longs(qq_terms(4)) ==
                std::vector<long>{32, 96, 192, 243, 249, 210, 126, 63, 21},
            "Q_4 table");

  const auto reports = run_lower_campaign({2, 200});
  c.require(reports.size() == 2 * 199, "report count");
  for (const auto& r : reports)
    c.require(r.status == Status::verified,
              "q=" + std::to_string(r.q) + " " + to_string(r.check));

  const double secs = seconds_since(t0);
  c.require(secs < 30.0, "runtime " + std::to_string(secs) + "s >= 30s");
  if (c.pass)
    c.evidence = "398 checks verified in " + std::to_string(secs) + "s";
  return c;
}

Criterion criterion2() {
  Criterion c{2, "two sign changes for every q in 2..500"};
  const auto t0 = std::chrono::steady_clock::now();

  const auto reports = run_better_campaign({2, 500});
  c.require(reports.size() == 499, "report count");
  for (const auto& r : reports) {
    c.require(r.status == Status::verified,
              "q=" + std::to_string(r.q) + " not verified");
    c.require(r.sign_changes.has_value() && *r.sign_changes == 2,
              "q=" + std::to_string(r.q) + " sign changes != 2");
  }

  const double secs = seconds_since(t0);
  c.require(secs < 600.0, "runtime " + std::to_string(secs) + "s >= 600s");
  if (c.pass)
    c.evidence = "499 certificates, all 2 sign changes, in " +
                 std::to_string(secs) + "s";
  return c;
}

Criterion criterion3() {
  Criterion c{3, "average relative performance values at p = 1/2"};

  c.require(avg_perf_g(0.5) == 6.0 / 7.0, "g measure not exactly 6/7");

  const double h_half = avg_perf_h(0.5);
  c.require(std::fabs(h_half - 0.646125) <= 1e-6,
            "h measure vs published 0.646125");

  const double s241 = std::sqrt(241.0);
  const double closed_form =
      (8.0 / 15) *
      (-1.0 + (3615.0 + 16.0 * s241 * std::asinh(15.0 / 4)) / (120.0 * s241));
  c.require(std::fabs(h_half - closed_form) <= 1e-9,
            "h measure vs closed form");

  for (double delta : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double lam = lambda_hat_root(0.5, delta);
    const auto f = make_root(0.5);
    const auto h = shifted_bound(f, lam);
    const auto r = integrate_adaptive(
        [&](double w) { return w > 0 ? h.eval(w) / std::sqrt(w) : 0.0; }, 0,
        delta, 1e-10);
    c.require(r.converged, "quadrature at delta " + std::to_string(delta));
    c.require(std::fabs(r.value / delta - h_half) <= 1e-8,
              "delta independence at delta " + std::to_string(delta));

    const auto s = build_cubic_root(0.5, delta);
    const auto rg = integrate_adaptive(
        [&](double w) { return w > 0 ? s.eval(w) / std::sqrt(w) : 0.0; }, 0,
        delta, 1e-10);
    c.require(std::fabs(rg.value / delta - 6.0 / 7) <= 1e-8,
              "g measure delta independence at " + std::to_string(delta));
  }
  if (c.pass)
    c.evidence = "h(1/2) = " + std::to_string(h_half) +
                 ", matches closed form and is delta-free";
  return c;
}

Criterion criterion4() {
  Criterion c{4, "matching conditions for 1000 randomized (model, delta)"};
  std::mt19937 gen(20260810u);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  };

  for (int trial = 0; trial < 1000; ++trial) {
    FunctionModel f = make_log1p();
    switch (trial % 5) {
      case 0:
        f = make_root(uniform(0.02, 0.98));
        break;
      case 1:
        f = make_log1p();
        break;
      case 2:
        f = make_arcsinh_sqrt();
        break;
      case 3:
        f = combine({make_root(uniform(0.1, 0.9)), make_log1p()},
                    {uniform(0.1, 5.0), uniform(0.1, 5.0)});
        break;
      default:
        f = combine({make_root(uniform(0.1, 0.9)), make_arcsinh_sqrt(),
                     make_log1p()},
                    {uniform(0.1, 3.0), uniform(0.1, 3.0), uniform(0.1, 3.0)});
        break;
    }
    const double delta = std::exp(uniform(std::log(1e-3), std::log(1e3)));
    const auto s = build_cubic(f, delta);
    const double g = ((s.A * delta + s.B) * delta + s.C) * delta;
    const double g1 = (3 * s.A * delta + 2 * s.B) * delta + s.C;
    const double g2 = 6 * s.A * delta + 2 * s.B;
    const std::string tag =
        " (trial " + std::to_string(trial) + ", delta " + std::to_string(delta) + ")";
    c.require(close_rel(g, f.eval(delta), 1e-12, 1e-14), "g(delta)" + tag);
    c.require(close_rel(g1, f.deriv1(delta), 1e-12, 1e-14), "g'(delta)" + tag);
    c.require(close_rel(g2, f.deriv2(delta), 1e-12, 1e-14), "g''(delta)" + tag);
  }
  if (c.pass) c.evidence = "3000 matching conditions within 1e-12 relative";
  return c;
}

Criterion criterion5() {
  Criterion c{5, "shape condition drives monotone concavity; counterexample"};

  const struct {
    FunctionModel f;
    double delta;
  } cases[] = {
      {make_root(0.5), 1.0},
      {make_root(1.0 / 7), 0.01},
      {make_root(0.93), 100.0},
      {make_log1p(), 2.0},
      {make_arcsinh_sqrt(), 0.4},
      {combine({make_root(0.5), make_log1p()}, {1.0, 2.0}), 5.0},
  };
  for (const auto& tc : cases) {
    const auto td = check_tdelta(tc.f, tc.delta);
    c.require(td.satisfied, "expected shape condition to hold");
    if (!td.satisfied) continue;
    const auto s = build_cubic(tc.f, tc.delta);
    const double scale2 = std::fabs(tc.f.deriv2(tc.delta));
    for (int i = 0; i <= 10000; ++i) {
      const double w = 2.0 * tc.delta * i / 10000;
      if (w > 0.0 && !(s.deriv1(w) > 0.0)) {
        c.require(false, "monotonicity at w=" + std::to_string(w));
        break;
      }
      if (!(s.deriv2(w) <= 1e-12 * std::fmax(1.0, scale2))) {
        c.require(false, "concavity at w=" + std::to_string(w));
        break;
      }
    }
  }

  const auto ce = make_counterexample(0.1, 0.01);
  const auto td = check_tdelta(ce, 1.11);
  c.require(!td.satisfied, "counterexample should fail the condition");
  c.require(std::fabs(td.margin - (-6.7)) <= 0.1,
            "margin " + std::to_string(td.margin) + " outside -6.7 +/- 0.1");
  const auto s = build_cubic(ce, 1.11);
  bool convex_decreasing = false;
  for (int i = 1; i < 2000 && !convex_decreasing; ++i) {
    const double w = 0.1 * i / 2000;
    convex_decreasing = s.deriv1(w) < 0.0 && s.deriv2(w) > 0.0;
  }
  c.require(convex_decreasing,
            "no convex-and-decreasing point found in (0, eps)");
  if (c.pass)
    c.evidence = "margin " + std::to_string(td.margin) +
                 "; cubic convex and decreasing inside (0, eps)";
  return c;
}

Criterion criterion6() {
  Criterion c{6, "bound ordering h <= g <= f with matched slopes, q 2..50"};
  for (int q = 2; q <= 50; ++q) {
    const double p = 1.0 / q;
    for (double delta : {0.1, 1.0, 10.0}) {
      const auto f = make_root_q(q);
      const auto s = build_cubic_root(p, delta);
      const double lam = lambda_hat_root(p, delta);
      const auto h = shifted_bound(f, lam);
      const std::string tag =
          " (q=" + std::to_string(q) + ", delta=" + std::to_string(delta) + ")";
      c.require(close_rel(h.deriv1(0.0), s.C, 1e-12), "slope match" + tag);
      for (int i = 0; i <= 10000; ++i) {
        const double w = delta * i / 10000;
        const double fw = f.eval(w);
        const double gw = s.eval(w);
        const double tol = 1e-14 * std::fmax(1.0, fw);
        if (!(gw <= fw + tol)) {
          c.require(false, "g <= f at w=" + std::to_string(w) + tag);
          break;
        }
        if (!(h.eval(w) <= gw + tol)) {
          c.require(false, "h <= g at w=" + std::to_string(w) + tag);
          break;
        }
      }
    }
  }
  if (c.pass) c.evidence = "147 grids of 10001 points each, ordering held";
  return c;
}

Criterion criterion7() {
  Criterion c{7, "double-root certificate for q in 2..100"};
  for (int q = 2; q <= 100; ++q) {
    const auto rep = ku_double_root_check(q, 256);
    c.require(rep.status == Status::verified,
              "q=" + std::to_string(q) + ": " + rep.detail);
    // plain 256-bit enclosures stay below 1e-25 in magnitude
    const auto Q = kv_parts(q).Q;
    const auto ku = ku_value(q, Q).enclosure(256);
    const auto kup = ku_deriv_value(q, Q).enclosure(256);
    c.require(ku.contains_zero() && ku.magnitude_upper() < 1e-25,
              "K_u(Q) magnitude at q=" + std::to_string(q));
    c.require(kup.contains_zero() && kup.magnitude_upper() < 1e-25,
              "K_u'(Q) magnitude at q=" + std::to_string(q));
  }
  if (c.pass)
    c.evidence = "99 exact identities plus enclosures below 1e-25";
  return c;
}

Criterion criterion8() {
  Criterion c{8, "exhaustive root search consistent with sign-change count"};
  for (int q : {2, 3, 4, 5}) {
    const auto search = kv_root_search(q, 1e6);
    const std::string tag = " (q=" + std::to_string(q) + ")";
    c.require(search.crossing_roots == 0, "unexpected crossing" + tag);
    c.require(search.double_root_certified, "double root not certified" + tag);
    c.require(search.total_roots_found() <= 2, "more than two roots" + tag);
  }
  if (c.pass)
    c.evidence = "only the double root found on (0, 1e6) for q in {2,3,4,5}";
  return c;
}

Criterion criterion9() {
  Criterion c{9, "CLI ordering, exit codes, byte determinism"};

  const auto cmp =
      run_cli("compare --function root:1/2 --delta 0.1 --samples 1000");
  c.require(cmp.exit_code == 0, "compare exit code");
  std::stringstream ss(cmp.output);
  std::string line;
  std::getline(ss, line);
  c.require(line == "w,f,g,h,linext", "compare header");
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    std::stringstream row(line);
    std::string cell;
    std::array<double, 5> v{};
    for (double& x : v) {
      std::getline(row, cell, ',');
      x = std::stod(cell);
    }
    if (v[0] <= 0.0 || v[0] >= 0.1) continue;
    c.require(v[4] >= v[1] - 1e-15 && v[1] >= v[2] - 1e-15 &&
                  v[2] >= v[3] - 1e-15,
              "row ordering at w=" + cell);
  }
  c.require(rows == 1001, "compare row count");

  c.require(run_cli("verify lower --q 2..10").exit_code == 0, "exit 0 case");
  c.require(run_cli("verify tdelta --function counterexample:0.1,0.01 "
                    "--delta 1.11")
                    .exit_code == 1,
            "exit 1 case");
  c.require(run_cli("coeffs --function root:1/2 --delta 0").exit_code == 2,
            "exit 2 case");

  for (const std::string cmd :
       {std::string("compare --function root:1/2 --delta 0.1 --samples 500"),
        std::string("verify better --q 2..10 --format json --jobs 2"),
        std::string("perf --p-grid 0.1:0.9:0.1")}) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    c.require(a.output == b.output && !a.output.empty(),
              "determinism of: " + cmd);
  }
  if (c.pass) c.evidence = "ordering, exit contract and determinism held";
  return c;
}

}  // namespace

int main() {
  const std::function<Criterion()> criteria[] = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9,
  };
  bool all_pass = true;
  int id = 0;
  for (const auto& run : criteria) {
    ++id;
    Criterion c{id, "criterion threw"};
    try {
      c = run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.evidence = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.name << " -- " << c.evidence << "\n";
  }
  std::cout << (all_pass ? "ACCEPTANCE: all criteria passed"
                         : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return all_pass ? 0 : 1;
}
