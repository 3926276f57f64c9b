#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

inline bool close_rel(double x, double y, double rel = 1e-12,
                      double abs = 1e-14) {
  return std::fabs(x - y) <=
         std::fmax(abs, rel * std::fmax(std::fabs(x), std::fabs(y)));
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
  return g;
}

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g;
  g.reserve(n);
  for (int i = 0; i < n; ++i)
    g.push_back(lo + (hi - lo) * i / (n - 1));
  return g;
}

// Deterministic RNG for property-style tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

}  // namespace testutil
