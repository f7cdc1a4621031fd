#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "diracdegen/algebra.hpp"
#include "diracdegen/symexpr.hpp"

namespace ddtest {

using diracdegen::Complex;
using diracdegen::SpacetimePoint;
using diracdegen::Spinor4;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  Complex complex(double r = 1.0) { return {uniform(-r, r), uniform(-r, r)}; }
  Spinor4 spinor(double r = 1.0) {
    Spinor4 s;
    for (auto& c : s.c) c = complex(r);
    return s;
  }
  SpacetimePoint point(double span_tz = 10.0, double span_xy = 2.0) {
    return {uniform(-span_tz, span_tz), uniform(-span_xy, span_xy), uniform(-span_xy, span_xy),
            uniform(-span_tz, span_tz)};
  }

 private:
  std::mt19937_64 eng_;
};

inline double rel_diff(const Spinor4& a, const Spinor4& b) {
  const double scale = std::max({a.norm(), b.norm(), 1e-300});
  return (a - b).norm() / scale;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// Least-squares slope of log(err) against log(h).
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
  const std::size_t n = h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(h[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ddtest
