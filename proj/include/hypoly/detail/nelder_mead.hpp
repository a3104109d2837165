#pragma once

// Derivative-free simplex minimization.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

namespace hypoly::detail {

struct SimplexOptions {
  double initial_step = 0.3;
  double x_tolerance = 1e-11;
  double f_tolerance = 1e-15;
  std::size_t max_evaluations = 20000;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Minimizes f from x0 with the standard reflection / expansion /
/// contraction / shrink coefficients (1, 2, 1/2, 1/2).
template <class F>
SimplexResult nelder_mead(const F &f, std::vector<double> x0, const SimplexOptions &opt = {}) {
  const std::size_t dim = x0.size();
  SimplexResult out;
  if (dim == 0) {
    out.value = f(x0);
    out.evaluations = 1;
    out.x = std::move(x0);
    return out;
  }
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> val(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) {
    pts[i + 1][i] += opt.initial_step;
  }
  std::size_t evals = 0;
  const auto eval = [&](const std::vector<double> &x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::max();
  };
  for (std::size_t i = 0; i <= dim; ++i) {
    val[i] = eval(pts[i]);
  }
  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  const auto blend = [&](double t, const std::vector<double> &from, std::vector<double> &to) {
    // to = centroid + t * (from - centroid)
    for (std::size_t k = 0; k < dim; ++k) {
      to[k] = centroid[k] + t * (from[k] - centroid[k]);
    }
  };
  while (evals < opt.max_evaluations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        size = std::max(size, std::abs(pts[i][k] - pts[best][k]));
      }
    }
    if (size < opt.x_tolerance || std::abs(val[worst] - val[best]) <= opt.f_tolerance * (1.0 + std::abs(val[best]))) {
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        centroid[k] += pts[i][k] / static_cast<double>(dim);
      }
    }

    blend(-1.0, pts[worst], trial);
    const double fr = eval(trial);
    if (fr < val[best]) {
      blend(-2.0, pts[worst], trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        val[worst] = fe;
      } else {
        pts[worst] = trial;
        val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = trial;
      val[worst] = fr;
      continue;
    }
    const bool outside = fr < val[worst];
    blend(outside ? -0.5 : 0.5, pts[worst], trial2);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : val[worst])) {
      pts[worst] = trial2;
      val[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t k = 0; k < dim; ++k) {
        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      }
      val[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(val.begin(), val.end());
  out.x = pts[static_cast<std::size_t>(it - val.begin())];
  out.value = *it;
  out.evaluations = evals;
  return out;
}

}  // namespace hypoly::detail
