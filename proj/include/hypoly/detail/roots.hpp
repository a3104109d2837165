#pragma once

// Bracketed scalar root finding for the monotone closure equations.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "hypoly/errors.hpp"

namespace hypoly::detail {

inline constexpr std::uintmax_t kRootIterations = 200;

/// Root of f on [lo, hi] where f(lo) and f(hi) differ in sign (or one is 0).
template <class F>
double bracketed_root(const F &f, double lo, double hi, const char *who) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) {
    return lo;
  }
  if (fhi == 0.0) {
    return hi;
  }
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw consistency_error(std::string(who) + ": root is not bracketed");
  }
  std::uintmax_t iterations = kRootIterations;
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                        boost::math::tools::eps_tolerance<double>(52), iterations);
  if (iterations >= kRootIterations) {
    throw consistency_error(std::string(who) + ": root finder did not converge");
  }
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

/// Doubles `hi` (starting above `lo`) until f changes sign relative to f(lo).
template <class F>
double expand_bracket(const F &f, double lo, double hi, const char *who) {
  const bool positive_at_lo = f(lo) > 0.0;
  for (int i = 0; i < 1100; ++i) {
    const double v = f(hi);
    if (v == 0.0 || (v > 0.0) != positive_at_lo) {
      return hi;
    }
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      break;
    }
  }
  throw consistency_error(std::string(who) + ": no sign change found");
}

}  // namespace hypoly::detail
