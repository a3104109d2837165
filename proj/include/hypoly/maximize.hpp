#pragma once

// Area maximization at fixed side lengths: a numerical route (multi-start
// simplex search over hinge angles), a constructive route (the cocyclic
// polygon or the collinear chain), and the two enlargement moves that turn a
// degenerate or non-convex polygon into a larger one with the same sides.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hypoly/area.hpp"
#include "hypoly/cocyclic.hpp"
#include "hypoly/construct.hpp"
#include "hypoly/detail/nelder_mead.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/pe_core.hpp"

namespace hypoly {

enum class Verdict { CocyclicConvex, Collinear };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::CocyclicConvex ? "CocyclicConvex" : "Collinear";
}

struct MaxDiagnostics {
  /// |d(Z_n, Z_1) - L_n| of the returned polygon.
  double closure_defect = 0.0;
  /// Largest |max_i Delta_i| over all 4-subsets of vertices (0 for triangles).
  double cocyclic_residual = 0.0;
  OrientedConvexityReport convexity;
  /// False if no restart reached a closed configuration.
  bool feasible = true;
  std::size_t restarts = 0;
  std::size_t best_restart = 0;
  std::optional<Cycle> cycle;
};

struct MaxResult {
  Polygon polygon;
  double area = 0.0;
  Verdict verdict = Verdict::Collinear;
  MaxDiagnostics diagnostics;
};

struct ChainPolygon {
  Polygon polygon;
  double closure_defect = 0.0;
};

namespace detail {

/// Z_1 .. Z_{count}: Z_1 at the center, Z_2 on the positive xi-axis, then each
/// vertex laid off after turning left by pi - angle.
inline std::vector<HPoint> chain_points(const SideLengths &sides, std::span<const double> angles, std::size_t count) {
  std::vector<HPoint> pts;
  pts.reserve(count);
  pts.emplace_back();
  Motion frame;
  for (std::size_t k = 1; k < count; ++k) {
    if (k > 1) {
      frame = frame * Motion::rotation(std::numbers::pi - angles[k - 2]);
    }
    frame = frame * Motion::boost_xi(sides[k - 1]);
    const auto &m = frame.matrix();
    pts.push_back(HPoint::normalized({m[0][0], m[1][0], m[2][0]}));
  }
  return pts;
}

}  // namespace detail

/// Open chain with d(Z_k, Z_{k+1}) = L_k for k < n from the interior angles at
/// Z_2 .. Z_{n-1} (pi is a straight continuation).
inline ChainPolygon chain_polygon(const SideLengths &sides, std::span<const double> angles) {
  const std::size_t n = sides.size();
  if (n < 3 || angles.size() != n - 2) {
    throw domain_error("chain_polygon: need n >= 3 sides and n - 2 angles");
  }
  Polygon p(detail::chain_points(sides, angles, n));
  const double defect = std::abs(distance(p.point(n - 1), p.point(0)) - sides[n - 1]);
  return {std::move(p), defect};
}

namespace detail {

/// Closes Z_1 .. Z_{n-1} with the vertex Z_n at distance L_{n-1} from Z_{n-1}
/// and L_n from Z_1, choosing the one of the two solutions of larger area.
/// Returns nullopt and the violation of the triangle inequality when no such
/// vertex exists.
inline std::pair<std::optional<Polygon>, double> close_chain(const SideLengths &sides, std::vector<HPoint> pts) {
  const std::size_t n = sides.size();
  const HPoint &last = pts.back();
  const double a = sides[n - 2];
  const double c = sides[n - 1];
  const double d = distance(last, pts.front());
  const double excess = std::max(std::abs(a - c) - d, d - (a + c));
  if (excess > 0.0 || d <= 0.0) {
    return {std::nullopt, std::max(excess, 0.0) + (d <= 0.0 ? 1.0 : 0.0)};
  }
  double cos_beta = (std::cosh(a) * std::cosh(d) - std::cosh(c)) / (std::sinh(a) * std::sinh(d));
  cos_beta = std::clamp(cos_beta, -1.0, 1.0);
  const double beta = std::acos(cos_beta);
  const Motion to_last = Motion::translation_to(last);
  const double dir = direction_from_center(to_last.inverse()(pts.front()));
  std::optional<Polygon> best;
  double best_area = -std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    const Motion m = to_last * Motion::rotation(dir + sign * beta) * Motion::boost_xi(a);
    const auto &mm = m.matrix();
    std::vector<HPoint> q = pts;
    q.push_back(HPoint::normalized({mm[0][0], mm[1][0], mm[2][0]}));
    Polygon p(std::move(q));
    const double area = polygon_area(p);
    if (area > best_area) {
      best_area = area;
      best = std::move(p);
    }
  }
  return {std::move(best), 0.0};
}

inline double worst_cocyclic_residual(const Polygon &p) {
  const std::size_t n = p.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          const double d = ptolemy_deltas(p.point(i), p.point(j), p.point(k), p.point(l)).max();
          worst = std::max(worst, std::abs(d));
        }
      }
    }
  }
  return worst;
}

inline MaxResult collinear_result(const SideLengths &sides) {
  CollinearChain chain = collinear_chain(sides);
  MaxResult r{chain.polygon, 0.0, Verdict::Collinear, {}};
  r.diagnostics.closure_defect = chain.closure_defect;
  r.diagnostics.convexity = is_oriented_convex(chain.polygon);
  r.diagnostics.feasible = chain.closed();
  return r;
}

}  // namespace detail

/// Multi-start numerical maximization of the signed area over closed polygons
/// with the given sides. Each restart draws interior angles uniformly from
/// (0, pi), minimizes the negative area plus w * defect^2 for w = 10, 100,
/// 1000, 10000, then closes the chain exactly through the last vertex and
/// polishes the remaining n - 3 angles. The best area wins; ties go to the
/// lowest restart index. Side lists violating the strict polygon inequality
/// return the collinear chain without any search.
inline MaxResult maximize_area(const SideLengths &sides, std::size_t restarts = 16, std::uint64_t seed = 0) {
  const std::size_t n = sides.size();
  if (n < 3) {
    throw domain_error("maximize_area: need at least 3 sides");
  }
  if (!strict_polygon_inequality(sides)) {
    return detail::collinear_result(sides);
  }
  restarts = std::max<std::size_t>(restarts, 1);

  const double infeasible_floor = static_cast<double>(n) * std::numbers::pi;
  const auto reduced_score = [&](const std::vector<double> &free_angles) {
    auto [poly, excess] = detail::close_chain(sides, detail::chain_points(sides, free_angles, n - 1));
    if (!poly) {
      return infeasible_floor + excess;
    }
    return -polygon_area(*poly);
  };
  const auto penalized = [&](double weight) {
    return [&sides, weight](const std::vector<double> &angles) {
      const ChainPolygon c = chain_polygon(sides, angles);
      return -polygon_area(c.polygon) + weight * c.closure_defect * c.closure_defect;
    };
  };

  std::optional<Polygon> best;
  double best_area = -std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, std::numbers::pi);
    std::vector<double> angles(n - 2);
    for (double &a : angles) {
      a = unit(rng);
    }
    detail::SimplexOptions coarse;
    coarse.x_tolerance = 1e-6;
    coarse.max_evaluations = 400 * (n - 2);
    for (double weight : {10.0, 100.0, 1000.0, 10000.0}) {
      angles = detail::nelder_mead(penalized(weight), angles, coarse).x;
    }

    std::vector<double> free_angles(angles.begin(), angles.end() - 1);
    detail::SimplexOptions fine;
    fine.initial_step = 0.2;
    for (int pass = 0; pass < 3; ++pass) {
      free_angles = detail::nelder_mead(reduced_score, free_angles, fine).x;
      fine.initial_step *= 0.1;
    }
    auto [poly, excess] = detail::close_chain(sides, detail::chain_points(sides, free_angles, n - 1));
    if (!poly) {
      continue;
    }
    const double area = polygon_area(*poly);
    if (area > best_area) {
      best_area = area;
      best = std::move(poly);
      best_index = r;
    }
  }

  if (!best) {
    MaxResult r = detail::collinear_result(sides);
    r.diagnostics.feasible = false;
    r.diagnostics.restarts = restarts;
    return r;
  }
  MaxResult r{*best, best_area, best_area > 0.0 ? Verdict::CocyclicConvex : Verdict::Collinear, {}};
  r.diagnostics.closure_defect = std::abs(distance(best->point(n - 1), best->point(0)) - sides[n - 1]);
  r.diagnostics.cocyclic_residual = detail::worst_cocyclic_residual(*best);
  r.diagnostics.convexity = is_oriented_convex(*best);
  r.diagnostics.feasible = r.diagnostics.closure_defect < 1e-8;
  r.diagnostics.restarts = restarts;
  r.diagnostics.best_restart = best_index;
  return r;
}

/// Constructive answer: the cocyclic oriented-convex polygon if every side is
/// shorter than the sum of the others, the closed collinear chain otherwise.
inline MaxResult verdict(const SideLengths &sides) {
  if (sides.size() < 3) {
    throw domain_error("verdict: need at least 3 sides");
  }
  if (!strict_polygon_inequality(sides)) {
    return detail::collinear_result(sides);
  }
  CocyclicConstruction c = cocyclic_construction(sides);
  const double area = polygon_area(c.polygon);
  MaxResult r{c.polygon, area, Verdict::CocyclicConvex, {}};
  r.diagnostics.convexity = is_oriented_convex(c.polygon);
  if (!(area > 0.0) || !r.diagnostics.convexity.ok) {
    throw consistency_error("verdict: constructed polygon is not positive and oriented-convex");
  }
  const std::size_t n = sides.size();
  r.diagnostics.closure_defect = std::abs(distance(c.polygon.point(n - 1), c.polygon.point(0)) - sides[n - 1]);
  r.diagnostics.cocyclic_residual = detail::worst_cocyclic_residual(c.polygon);
  r.diagnostics.cycle = c.cycle;
  return r;
}

/// Enlargement at a coincidence Z_0 = Z_m of non-adjacent vertices
/// (2 <= m <= n - 2). The loop Z_{m+1} .. Z_{n-1} is turned about the common
/// point c so that the triangle Z_{m-1} c Z_{m+1} becomes negatively oriented
/// with the hinge-optimal angle at c; then Z_m is reflected in the line
/// Z_{m-1} v Z_{m+1}. Side lengths are kept and the area grows by twice the
/// area of that triangle.
inline Polygon kite_enlarge(const Polygon &p, std::size_t m, double tol = 1e-9) {
  const std::size_t n = p.size();
  if (m < 2 || m + 2 > n) {
    throw precondition_error("kite_enlarge: vertices 0 and m must be non-adjacent");
  }
  const HPoint c = p.point(0);
  if (chords(c, p.point(m)).s > tol) {
    throw precondition_error("kite_enlarge: vertices 0 and m do not coincide");
  }
  const HPoint &prev = p.point(m - 1);
  const HPoint &next = p.point(m + 1);
  if (chords(prev, c).s <= tol || chords(next, c).s <= tol) {
    throw precondition_error("kite_enlarge: a neighbour of the coincident vertex coincides with it");
  }
  const Motion to_c = Motion::translation_to(c);
  const Motion from_c = to_c.inverse();
  const double a = direction_from_center(from_c(prev));
  const double b = direction_from_center(from_c(next));
  const Hinge h = optimal_hinge(distance(c, prev), distance(c, next));
  const Motion turn = to_c * Motion::rotation(a + h.gamma - b) * from_c;

  std::vector<HPoint> pts = p.points();
  for (std::size_t k = m + 1; k < n; ++k) {
    pts[k] = turn(pts[k]);
  }
  pts[m] = reflect_across_line(c, prev, pts[m + 1]);
  return Polygon(std::move(pts));
}

/// Splits the polygon along the diagonal Z_i v Z_j and reflects every side of
/// it whose signed area is negative across that diagonal.
inline Polygon reflect_enlarge(const Polygon &p, std::size_t i, std::size_t j) {
  const std::size_t n = p.size();
  if (i >= n || j >= n) {
    throw precondition_error("reflect_enlarge: index out of range");
  }
  if (i > j) {
    std::swap(i, j);
  }
  if (j - i < 2 || n - (j - i) < 2) {
    throw precondition_error("reflect_enlarge: vertices must be non-adjacent");
  }
  const HPoint a = p.point(i);
  const HPoint b = p.point(j);
  if (chords(a, b).s <= 1e-14) {
    throw degeneracy_error("reflect_enlarge: diagonal end points coincide");
  }
  const auto sub_area = [&](std::size_t from, std::size_t to) {
    std::vector<HPoint> q;
    for (std::size_t k = from;; k = (k + 1) % n) {
      q.push_back(p.point(k));
      if (k == to) {
        break;
      }
    }
    return polygon_area(Polygon(std::move(q)));
  };
  std::vector<HPoint> pts = p.points();
  bool changed = false;
  for (const auto &[from, to] : {std::pair{i, j}, std::pair{j, i}}) {
    if (sub_area(from, to) < -1e-14) {
      for (std::size_t k = (from + 1) % n; k != to; k = (k + 1) % n) {
        pts[k] = reflect_across_line(pts[k], a, b);
      }
      changed = true;
    }
  }
  return changed ? Polygon(std::move(pts)) : p;
}

}  // namespace hypoly
