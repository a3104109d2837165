#pragma once

// Constructions from side lengths: triangles, cycles in standard position,
// the cocyclic oriented-convex polygon, the collinear chain, the hinge
// optimum and parallelogram completion, plus the oriented-convexity test and
// reflections in geodesics.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "hypoly/area.hpp"
#include "hypoly/cocyclic.hpp"
#include "hypoly/detail/roots.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/pe_core.hpp"

namespace hypoly {

/// A cycle in standard position. The gauge is the radius R of a distance
/// circle, the offset d0 of a distance line, and unused for a horocycle.
struct Cycle {
  CycleType type = CycleType::Horocycle;
  double gauge = 0.0;

  static Cycle distance_circle(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw domain_error("Cycle: distance circle needs a positive radius");
    }
    return {CycleType::DistanceCircle, radius};
  }
  static Cycle distance_line(double offset) {
    if (!(offset >= 0.0) || !std::isfinite(offset)) {
      throw domain_error("Cycle: distance line needs a non-negative offset");
    }
    return {CycleType::DistanceLine, offset};
  }
  static Cycle horocycle() { return {CycleType::Horocycle, 0.0}; }

  /// sinh R of a distance circle.
  double rho() const { return std::sinh(gauge); }
  /// cosh d0 of a distance line.
  double cosh_offset() const { return std::cosh(gauge); }
};

/// Standard-position parameterizations:
///   circle     (cosh R, sinh R cos t, sinh R sin t)
///   line       (cosh d0 cosh t, cosh d0 sinh t, sinh d0)
///   horocycle  (1 + t^2/2, t, t^2/2)
inline HPoint cycle_point(const Cycle &c, double t) {
  switch (c.type) {
    case CycleType::DistanceCircle: {
      const double r = c.rho();
      return HPoint::unchecked({std::cosh(c.gauge), r * std::cos(t), r * std::sin(t)});
    }
    case CycleType::DistanceLine: {
      const double ch = c.cosh_offset();
      return HPoint::unchecked({ch * std::cosh(t), ch * std::sinh(t), std::sinh(c.gauge)});
    }
    case CycleType::Horocycle:
      return HPoint::unchecked({1.0 + 0.5 * t * t, t, 0.5 * t * t});
  }
  throw domain_error("cycle_point: unknown cycle type");
}

/// The same cycle moved so that parameter 0 sits at the disk center. Chord
/// laws are those of cycle_point; coordinates stay of the size of the
/// distances involved, not of the gauge. Increasing t runs counterclockwise
/// on circles and horocycles and clockwise on distance lines.
inline HPoint anchored_cycle_point(const Cycle &c, double t) {
  switch (c.type) {
    case CycleType::DistanceCircle: {
      const double r = c.rho();
      const double ch = std::sqrt(1.0 + r * r);
      const double h = std::sin(0.5 * t);
      const double u = h * h;
      return HPoint::unchecked({1.0 + 2.0 * r * r * u, -2.0 * r * ch * u, r * std::sin(t)});
    }
    case CycleType::DistanceLine: {
      const double ch = c.cosh_offset();
      const double sh = std::sinh(c.gauge);
      const double h = std::sinh(0.5 * t);
      const double v = h * h;
      return HPoint::unchecked({1.0 + 2.0 * ch * ch * v, ch * std::sinh(t), -2.0 * ch * sh * v});
    }
    case CycleType::Horocycle:
      return cycle_point(c, t);
  }
  throw domain_error("anchored_cycle_point: unknown cycle type");
}

/// Triangle Z1 Z2 Z3 with d(Z1,Z2) = L1, d(Z2,Z3) = L2, d(Z3,Z1) = L3:
///   z1 = (1, 0, 0), z3 = (cosh L3, sinh L3, 0),
///   z2 = (cosh L1, (cosh L1 cosh L3 - cosh L2) / sinh L3, zeta),
///   |zeta| = (2 / sinh L3) sqrt(sinh(S/2) sinh(D1/2) sinh(D2/2) sinh(D3/2)).
/// zeta < 0 gives a positively oriented triangle.
inline Polygon triangle_from_sides(double l1, double l2, double l3, int orient = +1) {
  const auto c = detail::lambda_coords(l1, l2, l3, "triangle_from_sides");
  const double sh3 = std::sinh(l3);
  const double eta = (std::cosh(l1) * std::cosh(l3) - std::cosh(l2)) / sh3;
  const double root =
      std::sqrt(std::sinh(c.s / 2) * std::sinh(c.d1 / 2) * std::sinh(c.d2 / 2) * std::sinh(c.d3 / 2));
  const double zeta = (orient >= 0 ? -2.0 : 2.0) * root / sh3;
  return Polygon(std::vector<HPoint>{HPoint(), HPoint::unchecked({std::cosh(l1), eta, zeta}),
                                     HPoint::unchecked({std::cosh(l3), sh3, 0.0})});
}

namespace detail {

inline std::vector<double> half_sinh(const SideLengths &l) {
  std::vector<double> s;
  s.reserve(l.size());
  for (double v : l.lengths) {
    s.push_back(std::sinh(0.5 * v));
  }
  return s;
}

inline std::size_t argmax(const std::vector<double> &v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

/// Gap s_max - (sum of the other s_k), s_k = sinh(L_k / 2).
inline double chord_gap(const SideLengths &l) {
  const auto s = detail::half_sinh(l);
  const std::size_t m = detail::argmax(s);
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  return s[m] - (total - s[m]);
}

/// Cycle type of the cocyclic polygon with the given sides, from the largest
/// chord quantity against the sum of the others.
inline CycleType classify_sides(const SideLengths &l) {
  if (l.size() < 3 || !strict_polygon_inequality(l)) {
    throw domain_error("classify_sides: side lengths violate the strict polygon inequality");
  }
  const auto s = detail::half_sinh(l);
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  const double gap = chord_gap(l);
  const double band = 1e-9 * (1.0 + total);
  if (gap < -band) {
    return CycleType::DistanceCircle;
  }
  if (gap > band) {
    return CycleType::DistanceLine;
  }
  return CycleType::Horocycle;
}

/// Residual of the closure equation satisfied by `c` for the sides `l`. For
/// circles the smaller of the center-inside and center-outside residuals.
inline double closure_residual(const SideLengths &l, const Cycle &c) {
  const auto s = detail::half_sinh(l);
  const std::size_t m = detail::argmax(s);
  switch (c.type) {
    case CycleType::DistanceCircle: {
      const double r = c.rho();
      double inside = -2.0 * std::numbers::pi;
      double outside = std::asin(std::min(1.0, s[m] / r));
      for (std::size_t k = 0; k < s.size(); ++k) {
        const double a = std::asin(std::min(1.0, s[k] / r));
        inside += 2.0 * a;
        if (k != m) {
          outside -= a;
        }
      }
      return std::min(std::abs(inside), std::abs(outside));
    }
    case CycleType::DistanceLine: {
      const double ch = c.cosh_offset();
      double f = std::asinh(s[m] / ch);
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != m) {
          f -= std::asinh(s[k] / ch);
        }
      }
      return std::abs(f);
    }
    case CycleType::Horocycle: {
      return std::abs(chord_gap(l));
    }
  }
  throw domain_error("closure_residual: unknown cycle type");
}

/// Solves the closure equation for the gauge of a cycle of the given type.
/// Circles try the center-inside branch sum 2 asin(s_k / rho) = 2 pi first and
/// fall back to asin(s_m / rho) = sum_{k != m} asin(s_k / rho). Lines solve
/// asinh(s_m / c) = sum_{k != m} asinh(s_k / c) for c = cosh d0 >= 1.
inline Cycle solve_gauge(const SideLengths &l, CycleType type) {
  const auto s = detail::half_sinh(l);
  const std::size_t m = detail::argmax(s);
  const double s_max = s[m];
  Cycle result;
  switch (type) {
    case CycleType::DistanceCircle: {
      const auto inside = [&](double r) {
        double f = -2.0 * std::numbers::pi;
        for (double v : s) {
          f += 2.0 * std::asin(std::min(1.0, v / r));
        }
        return f;
      };
      double rho = 0.0;
      if (inside(s_max) >= 0.0) {
        const double hi = detail::expand_bracket(inside, s_max, 2.0 * s_max, "solve_gauge");
        rho = detail::bracketed_root(inside, s_max, hi, "solve_gauge");
      } else {
        const auto outside = [&](double r) {
          double f = std::asin(std::min(1.0, s_max / r));
          for (std::size_t k = 0; k < s.size(); ++k) {
            if (k != m) {
              f -= std::asin(s[k] / r);
            }
          }
          return f * r;
        };
        if (!(outside(s_max) > 0.0)) {
          throw consistency_error("solve_gauge: circle closure has no root; sides are not of circle type");
        }
        const double hi = detail::expand_bracket(outside, s_max, 2.0 * s_max, "solve_gauge");
        rho = detail::bracketed_root(outside, s_max, hi, "solve_gauge");
      }
      result = Cycle::distance_circle(std::asinh(rho));
      break;
    }
    case CycleType::DistanceLine: {
      // Scaled by c so that the function tends to s_m - sum s_k for large c.
      const auto f = [&](double c) {
        double v = std::asinh(s_max / c);
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (k != m) {
            v -= std::asinh(s[k] / c);
          }
        }
        return v * c;
      };
      if (!(f(1.0) < 0.0)) {
        throw consistency_error("solve_gauge: line closure has no root; sides violate the polygon inequality");
      }
      const double hi = detail::expand_bracket(f, 1.0, 2.0, "solve_gauge");
      const double c = detail::bracketed_root(f, 1.0, hi, "solve_gauge");
      result = Cycle::distance_line(std::acosh(c));
      break;
    }
    case CycleType::Horocycle:
      result = Cycle::horocycle();
      break;
  }
  const double residual = closure_residual(l, result);
  if (type != CycleType::Horocycle && !(residual < 1e-12)) {
    throw consistency_error("solve_gauge: closure residual above 1e-12");
  }
  return result;
}

struct CocyclicConstruction {
  Polygon polygon;
  Cycle cycle;
  /// Cycle parameter of each vertex for anchored_cycle_point.
  std::vector<double> params;
};

/// The oriented-convex cocyclic polygon with sides L (strict polygon
/// inequality required). The largest side closes the polygon; the remaining
/// vertices follow each other along the cycle. `phase` slides every vertex
/// along the cycle; the result is congruent for every phase.
inline CocyclicConstruction cocyclic_construction(const SideLengths &l, double phase = 0.0) {
  const CycleType type = classify_sides(l);
  const Cycle cycle = solve_gauge(l, type);
  const auto s = detail::half_sinh(l);
  const std::size_t n = s.size();
  const std::size_t m = detail::argmax(s);

  std::vector<double> tau(n, 0.0);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t k = (m + 1 + j) % n;
    double step = 0.0;
    switch (type) {
      case CycleType::DistanceCircle:
        step = 2.0 * std::asin(std::min(1.0, s[k] / cycle.rho()));
        break;
      case CycleType::DistanceLine:
        step = 2.0 * std::asinh(s[k] / cycle.cosh_offset());
        break;
      case CycleType::Horocycle:
        step = 2.0 * s[k];
        break;
    }
    tau[j + 1] = tau[j] + step;
  }
  const double centre = 0.5 * tau[n - 1];

  std::vector<HPoint> points(n);
  std::vector<double> params(n);
  for (std::size_t j = 0; j < n; ++j) {
    double t = tau[j] - centre + phase;
    if (type == CycleType::DistanceLine) {
      t = -t;
    }
    const std::size_t v = (m + 1 + j) % n;
    params[v] = t;
    points[v] = anchored_cycle_point(cycle, t);
  }
  return {Polygon(std::move(points)), cycle, std::move(params)};
}

inline Polygon cocyclic_polygon(const SideLengths &l) { return cocyclic_construction(l).polygon; }

struct CollinearChain {
  Polygon polygon;
  /// Signed arc positions of the vertices on the xi-axis geodesic.
  std::vector<double> positions;
  /// |sum of signed side lengths|; 0 when the chain closes.
  double closure_defect = 0.0;
  bool closed() const { return closure_defect <= 1e-12 * (1.0 + std::abs(positions.back())); }
};

/// Collinear chain on the xi-axis: t_1 = 0, t_{k+1} = t_k +- L_k. Signs are
/// chosen greedily, largest side first, each one against the running sum; the
/// first side is traversed forward.
inline CollinearChain collinear_chain(const SideLengths &l) {
  const std::size_t n = l.size();
  if (n < 3) {
    throw domain_error("collinear_chain: need at least 3 sides");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return l[a] > l[b]; });
  std::vector<double> sign(n, 1.0);
  double sum = 0.0;
  for (std::size_t k : order) {
    sign[k] = sum > 0.0 ? -1.0 : 1.0;
    sum += sign[k] * l[k];
  }
  if (sign[0] < 0.0) {
    for (double &v : sign) {
      v = -v;
    }
  }
  std::vector<double> positions(n, 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    positions[k + 1] = positions[k] + sign[k] * l[k];
  }
  std::vector<HPoint> points;
  points.reserve(n);
  for (double t : positions) {
    points.push_back(HPoint::unchecked({std::cosh(t), std::sinh(t), 0.0}));
  }
  const double defect = std::abs(positions[n - 1] + sign[n - 1] * l[n - 1]);
  return {Polygon(std::move(points)), std::move(positions), defect};
}

/// Z4 = image of Z2 under the half-turn about the midpoint of Z1 and Z3, so
/// that d(Z3,Z4) = d(Z1,Z2) and d(Z1,Z4) = d(Z2,Z3) with Z2, Z4 on opposite
/// sides of Z1 v Z3.
inline HPoint parallelogram_completion(const HPoint &z1, const HPoint &z2, const HPoint &z3) {
  if (std::abs(det3(z1, z2, z3)) <= kCollinearTolerance) {
    throw degeneracy_error("parallelogram_completion: points are collinear");
  }
  const HPoint mid = HPoint::normalized(z1.vec() + z3.vec());
  return HPoint::normalized(2.0 * mdot(z2, mid) * mid.vec() - z2.vec());
}

inline KleinPoint parallelogram_completion(const KleinPoint &z1, const KleinPoint &z2, const KleinPoint &z3) {
  return project(parallelogram_completion(lift(z1), lift(z2), lift(z3)));
}

struct Hinge {
  /// Enclosed angle of maximal triangle area.
  double gamma = 0.0;
  /// Length of the opposite side at that angle.
  double d = 0.0;
};

/// cos gamma = tanh(L1/2) tanh(L2/2); sinh(d/2) = sqrt(sinh^2(L1/2) + sinh^2(L2/2)).
inline Hinge optimal_hinge(double l1, double l2) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) {
    throw domain_error("optimal_hinge: side lengths must be positive");
  }
  const double s1 = std::sinh(0.5 * l1);
  const double s2 = std::sinh(0.5 * l2);
  return {std::acos(std::tanh(0.5 * l1) * std::tanh(0.5 * l2)), 2.0 * std::asinh(std::hypot(s1, s2))};
}

struct OrientedConvexityReport {
  bool ok = false;
  double worst_bracket = 0.0;
  /// (i, i+1, j) of the smallest bracket [z_i, z_{i+1}, z_j].
  std::array<std::size_t, 3> witness{};
};

/// Every directed edge must have all other vertices strictly on its left:
/// [z_i, z_{i+1}, z_j] > kCollinearTolerance.
inline OrientedConvexityReport is_oriented_convex(const Polygon &p) {
  const std::size_t n = p.size();
  OrientedConvexityReport r;
  r.worst_bracket = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i1 = (i + 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == i1) {
        continue;
      }
      const double b = det3(p.point(i), p.point(i1), p.point(j));
      if (b < r.worst_bracket) {
        r.worst_bracket = b;
        r.witness = {i, i1, j};
      }
    }
  }
  r.ok = r.worst_bracket > kCollinearTolerance;
  return r;
}

/// Reflection in the geodesic through a and b: x -> x - 2 (<x,n>/<n,n>) n with
/// n the pole [a x b] of the geodesic.
inline HPoint reflect_across_line(const HPoint &x, const HPoint &a, const HPoint &b) {
  if (chords(a, b).s <= 1e-14) {
    throw degeneracy_error("reflect_across_line: the two points coincide");
  }
  const Vec3 n = pcross(a, b);
  const double nn = mdot(n, n);
  return HPoint::normalized(x.vec() - (2.0 * mdot(x, n) / nn) * n);
}

inline KleinPoint reflect_across_line(const KleinPoint &x, const KleinPoint &a, const KleinPoint &b) {
  return project(reflect_across_line(lift(x), lift(a), lift(b)));
}

}  // namespace hypoly
