#pragma once

// Reference computations that avoid the library's piecewise machinery: sorted
// sample counts, dense grids and raw node lists.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// #{x_i <= x} / n.
inline double empirical_cdf(std::vector<double> xs, double x) {
  const auto c = std::count_if(xs.begin(), xs.end(), [x](double v) { return v <= x; });
  return static_cast<double>(c) / static_cast<double>(xs.size());
}

// sup{x : F(x) <= lambda} for an empirical law, lambda in [0, 1): the first
// sample whose cumulative count exceeds lambda.
inline double empirical_quantile_right(std::vector<double> xs, double lambda) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 < n && xs[k + 1] == xs[k]) continue;  // last of a tie group
    if (static_cast<double>(k + 1) / static_cast<double>(n) > lambda) return xs[k];
  }
  return xs.back();
}

inline double empirical_var(const std::vector<double>& xs, double lambda) {
  return -empirical_quantile_right(xs, lambda);
}

inline double empirical_worst_case(const std::vector<double>& xs) {
  return -*std::min_element(xs.begin(), xs.end());
}

// Two-branch value for the step profile lo on (-inf, xbar), hi on [xbar, inf).
inline double step_case_formula(const std::vector<double>& xs, double lo, double hi, double xbar) {
  const double v_lo = empirical_var(xs, lo);
  return v_lo <= -xbar ? empirical_var(xs, hi) : v_lo;
}

// First grid point in [a, b] with F(x) > L(x); +inf when none.
inline double grid_first_exceedance(const std::function<double(double)>& F,
                                    const std::function<double(double)>& L, double a, double b,
                                    int n) {
  for (int i = 0; i <= n; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / n;
    if (F(x) > L(x)) return x;
  }
  return kInf;
}

// f through (x_i, y_i), constant outside, y nonincreasing.
using Nodes = std::vector<std::pair<double, double>>;

inline double node_eval(const Nodes& nodes, double x) {
  if (x <= nodes.front().first) return nodes.front().second;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto [x0, y0] = nodes[i - 1];
    const auto [x1, y1] = nodes[i];
    if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return nodes.back().second;
}

// inf{x : f(x) <= y}.
inline double node_left_inverse(const Nodes& nodes, double y) {
  if (y >= nodes.front().second) return -kInf;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto [x0, y0] = nodes[i - 1];
    const auto [x1, y1] = nodes[i];
    if (y1 <= y) return x0 + (y0 - y) / (y0 - y1) * (x1 - x0);
  }
  return kInf;
}

// Midpoint-rule Stieltjes sum of g against a distribution function sampled
// on a fine grid; jumps show up as large increments.
inline double grid_stieltjes(const std::function<double(double)>& g,
                             const std::function<double(double)>& F, double a, double b, int n) {
  double total = 0.0;
  double prev = F(a);
  for (int i = 1; i <= n; ++i) {
    const double x0 = a + (b - a) * static_cast<double>(i - 1) / n;
    const double x1 = a + (b - a) * static_cast<double>(i) / n;
    const double cur = F(x1);
    total += g(0.5 * (x0 + x1)) * (cur - prev);
    prev = cur;
  }
  return total;
}

}  // namespace oracle
