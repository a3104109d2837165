#pragma once

// Pseudo-Euclidean substrate: R^{2,1} with <x,y> = x0*y0 - x1*y1 - x2*y2,
// the upper hyperboloid shell <x,x> = 1, x0 > 0 as the hyperbolic plane, and
// the Cayley/Klein disk as its chart.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <ostream>
#include <type_traits>

#include "hypoly/errors.hpp"

namespace hypoly {

/// Band in which <x,x> = 1 and <a,b> >= 1 are accepted as round-off.
inline constexpr double kNormTolerance = 1e-9;

struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec3 &operator+=(const Vec3 &o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  constexpr Vec3 &operator-=(const Vec3 &o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  constexpr Vec3 &operator*=(double s) {
    x0 *= s;
    x1 *= s;
    x2 *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3 &a) { return {-a.x0, -a.x1, -a.x2}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Vec3 &v) {
    return os << "(" << v.x0 << ", " << v.x1 << ", " << v.x2 << ")";
  }
};

/// The pseudo-Euclidean scalar product.
constexpr double mdot(const Vec3 &a, const Vec3 &b) {
  return a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2;
}

/// Ordinary determinant of the matrix with rows a, b, c.
constexpr double det3(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
  return a.x0 * (b.x1 * c.x2 - b.x2 * c.x1) - a.x1 * (b.x0 * c.x2 - b.x2 * c.x0) +
         a.x2 * (b.x0 * c.x1 - b.x1 * c.x0);
}

/// Pseudo-Euclidean cross product: the unique vector w with
/// mdot(w, c) == det3(a, b, c) for every c. It is the Euclidean cross product
/// with the two space-like components negated.
constexpr Vec3 pcross(const Vec3 &a, const Vec3 &b) {
  return {a.x1 * b.x2 - a.x2 * b.x1, -(a.x2 * b.x0 - a.x0 * b.x2),
          -(a.x0 * b.x1 - a.x1 * b.x0)};
}

/// Point of the hyperbolic plane as a normalized vector on the upper shell.
class HPoint {
 public:
  /// The disk center (1, 0, 0).
  constexpr HPoint() = default;

  /// Validates <v,v> = 1 within kNormTolerance and x0 >= 1 (same band).
  explicit HPoint(const Vec3 &v) : v_(v) {
    const double norm = mdot(v, v);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance * std::max(1.0, v.x0 * v.x0) ||
        v.x0 < 1.0 - kNormTolerance) {
      throw domain_error("HPoint: vector is not on the upper hyperboloid shell");
    }
  }

  /// Rescales a future time-like vector onto the shell.
  static HPoint normalized(const Vec3 &v) {
    const double norm = mdot(v, v);
    if (!(norm > 0.0) || !(v.x0 > 0.0) || !std::isfinite(norm)) {
      throw numeric_error("HPoint::normalized: vector is not future time-like");
    }
    return unchecked(v * (1.0 / std::sqrt(norm)));
  }

  /// Trusted construction from formulas that land on the shell by design.
  static constexpr HPoint unchecked(const Vec3 &v) {
    HPoint p;
    p.v_ = v;
    return p;
  }

  constexpr const Vec3 &vec() const { return v_; }
  constexpr operator const Vec3 &() const { return v_; }  // NOLINT(google-explicit-constructor)
  constexpr double x0() const { return v_.x0; }
  constexpr double x1() const { return v_.x1; }
  constexpr double x2() const { return v_.x2; }

  friend constexpr bool operator==(const HPoint &, const HPoint &) = default;

 private:
  Vec3 v_{1.0, 0.0, 0.0};
};

/// Cartesian coordinates in the open unit disk.
struct KleinPoint {
  double xi = 0.0;
  double eta = 0.0;

  friend constexpr bool operator==(const KleinPoint &, const KleinPoint &) = default;
  friend std::ostream &operator<<(std::ostream &os, const KleinPoint &p) {
    return os << "(" << p.xi << ", " << p.eta << ")";
  }
};

/// K = cosh d and S = sinh(d/2) for a pair of points; K = 1 + 2 S^2.
struct ChordPair {
  double k = 1.0;
  double s = 0.0;
};

inline HPoint lift(const KleinPoint &p) {
  const double w = 1.0 - p.xi * p.xi - p.eta * p.eta;
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw domain_error("lift: point is not inside the unit disk");
  }
  const double scale = 1.0 / std::sqrt(w);
  return HPoint::unchecked({scale, p.xi * scale, p.eta * scale});
}

inline KleinPoint project(const Vec3 &z) {
  if (!(z.x0 > 0.0)) {
    throw domain_error("project: vector is not on the upper shell");
  }
  return {z.x1 / z.x0, z.x2 / z.x0};
}

/// Anything that denotes a point of the plane: a disk point or a shell vector.
template <class P>
concept PlanePoint = std::same_as<std::remove_cvref_t<P>, KleinPoint> ||
                     std::same_as<std::remove_cvref_t<P>, HPoint>;

inline HPoint as_hpoint(const KleinPoint &p) { return lift(p); }
inline const HPoint &as_hpoint(const HPoint &p) { return p; }

/// Chord quantities of two shell points. K comes straight from the scalar
/// product; S is taken from the difference vector, -<a-b,a-b> = 4 S^2, which
/// keeps full relative precision for nearby points.
inline ChordPair chords(const HPoint &a, const HPoint &b) {
  double k = mdot(a, b);
  if (k < 1.0) {
    if (k < 1.0 - kNormTolerance * std::max(1.0, a.x0() * b.x0())) {
      throw numeric_error("chords: scalar product of shell points is below 1");
    }
    k = 1.0;
  }
  const Vec3 d = a.vec() - b.vec();
  const double s2 = -0.25 * mdot(d, d);
  return {k, std::sqrt(std::max(0.0, s2))};
}

template <PlanePoint P, PlanePoint Q>
ChordPair chords(const P &p, const Q &q) {
  return chords(as_hpoint(p), as_hpoint(q));
}

/// Hyperbolic distance, arccosh <p,q>, evaluated as 2 asinh S.
template <PlanePoint P, PlanePoint Q>
double distance(const P &p, const Q &q) {
  return 2.0 * std::asinh(chords(p, q).s);
}

/// Proper orthochronous Lorentz transformation of R^{2,1}, i.e. a
/// hyperbolic motion, stored as a row-major 3x3 matrix.
class Motion {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  constexpr Motion() : m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}
  explicit constexpr Motion(const Matrix &m) : m_(m) {}

  /// Rotation about the disk center by angle phi (counterclockwise).
  static Motion rotation(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return Motion({{{1, 0, 0}, {0, c, -s}, {0, s, c}}});
  }

  /// Translation along the xi-axis moving the center a distance r towards +xi.
  static Motion boost_xi(double r) {
    const double c = std::cosh(r);
    const double s = std::sinh(r);
    return Motion({{{c, s, 0}, {s, c, 0}, {0, 0, 1}}});
  }

  /// The pure translation carrying the disk center to p.
  static Motion translation_to(const HPoint &p) {
    const double x0 = p.x0();
    const double x1 = p.x1();
    const double x2 = p.x2();
    const double q = 1.0 / (1.0 + x0);
    return Motion({{{x0, x1, x2}, {x1, 1.0 + x1 * x1 * q, x1 * x2 * q}, {x2, x1 * x2 * q, 1.0 + x2 * x2 * q}}});
  }

  /// Rotation by phi about an arbitrary center.
  static Motion rotation_about(const HPoint &center, double phi) {
    const Motion t = translation_to(center);
    return t * rotation(phi) * t.inverse();
  }

  /// Lorentz inverse J M^T J.
  Motion inverse() const {
    Matrix r{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double sign = ((i == 0) == (j == 0)) ? 1.0 : -1.0;
        r[i][j] = sign * m_[j][i];
      }
    }
    return Motion(r);
  }

  Vec3 apply(const Vec3 &v) const {
    return {m_[0][0] * v.x0 + m_[0][1] * v.x1 + m_[0][2] * v.x2,
            m_[1][0] * v.x0 + m_[1][1] * v.x1 + m_[1][2] * v.x2,
            m_[2][0] * v.x0 + m_[2][1] * v.x1 + m_[2][2] * v.x2};
  }

  /// Image of a shell point, renormalized against drift.
  HPoint operator()(const HPoint &p) const { return HPoint::normalized(apply(p)); }

  friend Motion operator*(const Motion &a, const Motion &b) {
    Matrix r{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        r[i][j] = a.m_[i][0] * b.m_[0][j] + a.m_[i][1] * b.m_[1][j] + a.m_[i][2] * b.m_[2][j];
      }
    }
    return Motion(r);
  }

  const Matrix &matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Direction angle at the disk center of the geodesic towards p (p != center).
inline double direction_from_center(const HPoint &p) { return std::atan2(p.x2(), p.x1()); }

}  // namespace hypoly
