#pragma once

// Signed areas of hyperbolic polygons: the fan ("parachute") sum of signed
// triangle areas, area from the three side lengths, and the curve integral of
// the 1-form whose exterior derivative is the area element.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypoly/errors.hpp"
#include "hypoly/pe_core.hpp"

namespace hypoly {

/// Closed polygon Z_1 ... Z_n (n >= 3), vertex Z_{n+1} = Z_1. The vertices are
/// held as shell vectors so that constructions far from the disk center do not
/// lose precision through the chart.
class Polygon {
 public:
  explicit Polygon(std::span<const KleinPoint> vertices) {
    points_.reserve(vertices.size());
    for (const auto &v : vertices) {
      points_.push_back(lift(v));
    }
    check_size();
  }
  Polygon(std::initializer_list<KleinPoint> vertices)
      : Polygon(std::span<const KleinPoint>(vertices.begin(), vertices.size())) {}
  explicit Polygon(std::vector<HPoint> points) : points_(std::move(points)) { check_size(); }

  std::size_t size() const { return points_.size(); }

  /// Vertex i (0-based), cyclic.
  const HPoint &point(std::size_t i) const { return points_[i % points_.size()]; }
  KleinPoint vertex(std::size_t i) const { return project(point(i)); }
  const std::vector<HPoint> &points() const { return points_; }

  std::vector<KleinPoint> vertices() const {
    std::vector<KleinPoint> out;
    out.reserve(points_.size());
    for (const auto &p : points_) {
      out.push_back(project(p));
    }
    return out;
  }

  /// Same vertices traversed backwards, starting at the same vertex.
  Polygon reversed() const {
    std::vector<HPoint> r;
    r.reserve(points_.size());
    r.push_back(points_.front());
    for (std::size_t i = points_.size() - 1; i > 0; --i) {
      r.push_back(points_[i]);
    }
    return Polygon(std::move(r));
  }

  /// Cyclic relabeling so that vertex `shift` becomes the first one.
  Polygon rotated(std::size_t shift) const {
    std::vector<HPoint> r;
    r.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      r.push_back(point(i + shift));
    }
    return Polygon(std::move(r));
  }

 private:
  void check_size() const {
    if (points_.size() < 3) {
      throw domain_error("Polygon: need at least 3 vertices");
    }
  }

  std::vector<HPoint> points_;
};

/// Prescribed side lengths L_1 ... L_n, all positive.
struct SideLengths {
  std::vector<double> lengths;

  SideLengths() = default;
  explicit SideLengths(std::vector<double> l) : lengths(std::move(l)) { validate(); }
  SideLengths(std::initializer_list<double> l) : lengths(l) { validate(); }

  std::size_t size() const { return lengths.size(); }
  double operator[](std::size_t i) const { return lengths[i]; }

  void validate() const {
    if (lengths.empty()) {
      throw domain_error("SideLengths: empty");
    }
    for (double l : lengths) {
      if (!(l > 0.0) || !std::isfinite(l)) {
        throw domain_error("SideLengths: every side length must be positive and finite");
      }
    }
  }
};

/// Realized side lengths d(Z_k, Z_{k+1}).
inline SideLengths side_lengths(const Polygon &p) {
  std::vector<double> l;
  l.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    l.push_back(distance(p.point(i), p.point(i + 1)));
  }
  SideLengths out;
  out.lengths = std::move(l);
  return out;
}

/// Strict n-inequality: every L_k is smaller than the sum of the others.
inline bool strict_polygon_inequality(const SideLengths &sides) {
  double total = 0.0;
  for (double l : sides.lengths) {
    total += l;
  }
  for (double l : sides.lengths) {
    if (!(l < total - l)) {
      return false;
    }
  }
  return true;
}

namespace detail {

/// One fan term 2 atan([z,a,b] / (<z,a> + <z,b> + <a,b> + 1)). The denominator
/// is at least 4 on the shell.
inline double fan_term(const Vec3 &z, const Vec3 &a, const Vec3 &b) {
  const double den = mdot(z, a) + mdot(z, b) + mdot(a, b) + 1.0;
  if (!(den > 0.0)) {
    throw numeric_error("fan_term: non-positive denominator; points are not on the shell");
  }
  return 2.0 * std::atan(det3(z, a, b) / den);
}

struct LambdaCoords {
  double s, d1, d2, d3;
};

/// S and D_1..D_3 of a side triple; tiny negative D_k from round-off are
/// clamped to 0, anything beyond that is outside Lambda.
inline LambdaCoords lambda_coords(double l1, double l2, double l3, const char *who) {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0) || !std::isfinite(l1 + l2 + l3)) {
    throw domain_error(std::string(who) + ": side lengths must be positive");
  }
  LambdaCoords c{l1 + l2 + l3, -l1 + l2 + l3, l1 - l2 + l3, l1 + l2 - l3};
  const double band = 1e-12 * (1.0 + c.s);
  for (double *d : {&c.d1, &c.d2, &c.d3}) {
    if (*d < 0.0) {
      if (*d < -band) {
        throw domain_error(std::string(who) + ": triangle inequality violated");
      }
      *d = 0.0;
    }
  }
  return c;
}

}  // namespace detail

/// Signed area of the triangle ABC; positive for counterclockwise vertices.
template <PlanePoint P>
double tri_area_signed(const P &a, const P &b, const P &c) {
  return detail::fan_term(as_hpoint(a), as_hpoint(b), as_hpoint(c));
}

/// Signed polygon area by the fan sum around `origin`. The value does not
/// depend on the origin; it defaults to the first vertex, where the two fan
/// triangles touching it vanish.
inline double polygon_area(const Polygon &p, const std::optional<HPoint> &origin = std::nullopt) {
  const std::size_t n = p.size();
  double sum = 0.0;
  if (!origin) {
    const HPoint &z = p.point(0);
    for (std::size_t k = 1; k + 1 < n; ++k) {
      sum += detail::fan_term(z, p.point(k), p.point(k + 1));
    }
    return sum;
  }
  for (std::size_t k = 0; k < n; ++k) {
    sum += detail::fan_term(*origin, p.point(k), p.point(k + 1));
  }
  return sum;
}

inline double polygon_area(const Polygon &p, const KleinPoint &origin) {
  return polygon_area(p, std::optional<HPoint>(lift(origin)));
}

/// The individual fan terms around `origin` (used for reporting).
inline std::vector<double> fan_terms(const Polygon &p, const HPoint &origin) {
  std::vector<double> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.push_back(detail::fan_term(origin, p.point(k), p.point(k + 1)));
  }
  return out;
}

/// Area from side lengths, |F| = 4 atan sqrt(tanh(S/4) tanh(D1/4) tanh(D2/4) tanh(D3/4)).
inline double lhuilier(double l1, double l2, double l3) {
  const auto c = detail::lambda_coords(l1, l2, l3, "lhuilier");
  const double prod = std::tanh(c.s / 4) * std::tanh(c.d1 / 4) * std::tanh(c.d2 / 4) * std::tanh(c.d3 / 4);
  return 4.0 * std::atan(std::sqrt(prod));
}

inline double lhuilier(const SideLengths &l) {
  if (l.size() != 3) {
    throw domain_error("lhuilier: need exactly three side lengths");
  }
  return lhuilier(l[0], l[1], l[2]);
}

/// Partial derivatives of the side-length area function on the interior of Lambda.
/// With P the tanh product, dH/dx = sqrt(P) / ((1 + P) sinh(x/2)) for each of
/// x = S, D1, D2, D3, combined by the chain rule.
inline std::array<double, 3> lhuilier_gradient(double l1, double l2, double l3) {
  const auto c = detail::lambda_coords(l1, l2, l3, "lhuilier_gradient");
  if (!(c.d1 > 0.0 && c.d2 > 0.0 && c.d3 > 0.0)) {
    throw domain_error("lhuilier_gradient: not differentiable on the boundary of Lambda");
  }
  const double prod = std::tanh(c.s / 4) * std::tanh(c.d1 / 4) * std::tanh(c.d2 / 4) * std::tanh(c.d3 / 4);
  const double f = std::sqrt(prod) / (1.0 + prod);
  const double gs = f / std::sinh(c.s / 2);
  const double g1 = f / std::sinh(c.d1 / 2);
  const double g2 = f / std::sinh(c.d2 / 2);
  const double g3 = f / std::sinh(c.d3 / 2);
  return {gs - g1 + g2 + g3, gs + g1 - g2 + g3, gs + g1 + g2 - g3};
}

inline std::array<double, 3> lhuilier_gradient(const SideLengths &l) {
  if (l.size() != 3) {
    throw domain_error("lhuilier_gradient: need exactly three side lengths");
  }
  return lhuilier_gradient(l[0], l[1], l[2]);
}

/// Triangle area from two sides and the enclosed angle (cosine law already
/// substituted). The endpoints gamma = 0 and gamma = pi give the degenerate
/// value 0.
inline double tri_area_sas(double l1, double l2, double gamma) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) {
    throw domain_error("tri_area_sas: side lengths must be positive");
  }
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw domain_error("tri_area_sas: angle outside [0, pi]");
  }
  if (gamma == 0.0 || gamma == std::numbers::pi) {
    return 0.0;
  }
  const double sh = std::sinh(l1) * std::sinh(l2);
  const double den = (1.0 + std::cosh(l1)) * (1.0 + std::cosh(l2)) - sh * std::cos(gamma);
  return 2.0 * std::atan(sh * std::sin(gamma) / den);
}

/// Over-determined form with all three sides and the angle opposite L3. The
/// pair (L3, gamma) has to satisfy the cosine law to 1e-9 relative.
inline double tri_area_overdetermined(double l1, double l2, double l3, double gamma) {
  detail::lambda_coords(l1, l2, l3, "tri_area_overdetermined");
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw domain_error("tri_area_overdetermined: angle outside [0, pi]");
  }
  const double c3 = std::cosh(l3);
  const double predicted = std::cosh(l1) * std::cosh(l2) - std::sinh(l1) * std::sinh(l2) * std::cos(gamma);
  if (std::abs(predicted - c3) > 1e-9 * c3) {
    throw consistency_error("tri_area_overdetermined: L3 and gamma violate the cosine law");
  }
  const double num = std::sinh(l1) * std::sinh(l2) * std::sin(gamma);
  return 2.0 * std::atan(num / (std::cosh(l1) + std::cosh(l2) + c3 + 1.0));
}

/// |F| = 2 arccos((cosh L1 + cosh L2 + cosh L3 + 1) / (4 cosh(L1/2) cosh(L2/2) cosh(L3/2))).
inline double tri_area_from_sides_arccos(double l1, double l2, double l3) {
  detail::lambda_coords(l1, l2, l3, "tri_area_from_sides_arccos");
  const double num = std::cosh(l1) + std::cosh(l2) + std::cosh(l3) + 1.0;
  const double den = 4.0 * std::cosh(l1 / 2) * std::cosh(l2 / 2) * std::cosh(l3 / 2);
  double arg = num / den;
  if (arg > 1.0 || arg < -1.0) {
    if (std::abs(arg) > 1.0 + 1e-12) {
      throw domain_error("tri_area_from_sides_arccos: arccos argument outside [-1, 1]");
    }
    arg = std::clamp(arg, -1.0, 1.0);
  }
  return 2.0 * std::acos(arg);
}

namespace detail {

// 10-point Gauss-Legendre rule on [-1, 1] (nodes symmetric about 0).
inline constexpr std::array<double, 5> kGaussNodes{0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                                   0.8650633666889845, 0.9739065285171717};
inline constexpr std::array<double, 5> kGaussWeights{0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                                     0.1494513491505806, 0.0666713443086881};

template <class F>
double gauss10(const F &f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
    const double dx = half * kGaussNodes[i];
    sum += kGaussWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return sum * half;
}

template <class F>
double adaptive_gauss(const F &f, double a, double b, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gauss10(f, a, mid);
  const double right = gauss10(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol) {
    return left + right;
  }
  return adaptive_gauss(f, a, mid, left, 0.5 * tol, depth - 1) +
         adaptive_gauss(f, mid, b, right, 0.5 * tol, depth - 1);
}

/// Integral of omega along the straight Klein segment p -> q. On the
/// segment, -eta dxi + xi deta = (p x q) dt, leaving a scalar integrand.
inline double omega_segment(const KleinPoint &p, const KleinPoint &q) {
  const double cross = p.xi * q.eta - p.eta * q.xi;
  if (cross == 0.0) {
    return 0.0;
  }
  const double dx = q.xi - p.xi;
  const double dy = q.eta - p.eta;
  auto integrand = [&](double t) {
    const double x = p.xi + t * dx;
    const double y = p.eta + t * dy;
    const double w = 1.0 - x * x - y * y;
    return 1.0 / (w + std::sqrt(w));
  };
  const double whole = gauss10(integrand, 0.0, 1.0);
  const double value = adaptive_gauss(integrand, 0.0, 1.0, whole, 1e-10 * std::abs(whole) + 1e-300, 40);
  return cross * value;
}

}  // namespace detail

/// Weighted sum of the curve integrals of
///   omega = (-eta dxi + xi deta) / (1 - xi^2 - eta^2 + sqrt(1 - xi^2 - eta^2))
/// over the straight segments path[i] -> path[i+1]. A closed chain repeats
/// its first point at the end. `weights`, when given, has one entry per
/// segment.
inline double omega_integral(std::span<const KleinPoint> path, std::span<const double> weights = {}) {
  if (path.size() < 2) {
    return 0.0;
  }
  const std::size_t segments = path.size() - 1;
  if (!weights.empty() && weights.size() != segments) {
    throw domain_error("omega_integral: need one weight per segment");
  }
  for (const auto &p : path) {
    if (!(p.xi * p.xi + p.eta * p.eta < 1.0)) {
      throw domain_error("omega_integral: segment touches the horizon");
    }
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < segments; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    sum += w * detail::omega_segment(path[i], path[i + 1]);
  }
  return sum;
}

/// omega over the closed boundary chain of a polygon.
inline double omega_integral(const Polygon &p) {
  std::vector<KleinPoint> chain = p.vertices();
  chain.push_back(chain.front());
  return omega_integral(chain);
}

}  // namespace hypoly
