#pragma once

// Distance-only predicates for triples and quadruples: circum-plane of a
// triangle and the type of its circum-cycle, the quadruple bracket, the
// Ptolemy relations that characterize cocyclic quadrangles, and the diagonal
// relations of convex cocyclic quadrangles.

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

#include "hypoly/errors.hpp"
#include "hypoly/pe_core.hpp"

namespace hypoly {

/// |[a,b,c]| below this counts as collinear.
inline constexpr double kCollinearTolerance = 1e-10;

enum class CycleType { DistanceCircle, DistanceLine, Horocycle };

constexpr std::string_view to_string(CycleType t) {
  switch (t) {
    case CycleType::DistanceCircle:
      return "DistanceCircle";
    case CycleType::DistanceLine:
      return "DistanceLine";
    case CycleType::Horocycle:
      return "Horocycle";
  }
  return "?";
}

/// Width of the horocycle band for a distance-only classifier whose inputs
/// sum to `s_sum`.
inline double horocycle_band(double s_sum) {
  const double scale = 1.0 + s_sum;
  return 1e-9 * scale * scale * scale;
}

/// Affine plane <u, x> = p through three lifted points.
struct CircumPlane {
  Vec3 u;
  double p = 0.0;
};

template <PlanePoint P>
CircumPlane circum_plane(const P &pa, const P &pb, const P &pc) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  const double p = det3(a, b, c);
  if (std::abs(p) <= kCollinearTolerance) {
    throw degeneracy_error("circum_plane: points are collinear");
  }
  return {pcross(a, b) + pcross(b, c) + pcross(c, a), p};
}

/// Relative residuals of the circum-plane relations of a triangle:
///   [0] max |<u, z> - p| over z in {a, b, c}
///   [1] <u,u> - 8 (S_AB^2 S_BC^2 + S_BC^2 S_CA^2 + S_CA^2 S_AB^2) + 4 (S_AB^4 + S_BC^4 + S_CA^4)
///   [2] <u,u> - 4 (S_AB + S_BC + S_CA)(S_AB + S_BC - S_CA)(S_BC + S_CA - S_AB)(S_CA + S_AB - S_BC)
///   [3] p^2 - 16 S_AB^2 S_BC^2 S_CA^2 - <u,u>
/// each divided by the magnitude of the largest term involved (at least 1).
template <PlanePoint P>
std::array<double, 4> circum_plane_residuals(const P &pa, const P &pb, const P &pc) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  const CircumPlane pl = circum_plane(a, b, c);
  const double x = chords(a, b).s;
  const double y = chords(b, c).s;
  const double z = chords(c, a).s;
  const double x2 = x * x, y2 = y * y, z2 = z * z;
  const double uu = mdot(pl.u, pl.u);

  double member = 0.0;
  double member_scale = 1.0;
  for (const HPoint *q : {&a, &b, &c}) {
    member = std::max(member, std::abs(mdot(pl.u, *q) - pl.p));
    member_scale = std::max({member_scale, std::abs(pl.p), std::abs(pl.u.x0 * q->x0()),
                             std::abs(pl.u.x1 * q->x1()), std::abs(pl.u.x2 * q->x2())});
  }
  const double sum_form = 8 * (x2 * y2 + y2 * z2 + z2 * x2) - 4 * (x2 * x2 + y2 * y2 + z2 * z2);
  const double factored = 4 * (x + y + z) * (x + y - z) * (y + z - x) * (z + x - y);
  const double quartic_scale = std::max({1.0, std::abs(uu), 8 * (x2 * y2 + y2 * z2 + z2 * x2),
                                         4 * (x2 * x2 + y2 * y2 + z2 * z2)});
  const double vol = 16 * x2 * y2 * z2;
  const double sextic_scale = std::max({1.0, pl.p * pl.p, vol, std::abs(uu)});
  return {member / member_scale, std::abs(uu - sum_form) / quartic_scale, std::abs(uu - factored) / quartic_scale,
          std::abs(pl.p * pl.p - vol - uu) / sextic_scale};
}

struct TripleDelta {
  double delta = 0.0;
  CycleType type = CycleType::DistanceCircle;
};

/// Delta = (S_AB + S_BC - S_CA)(S_BC + S_CA - S_AB)(S_CA + S_AB - S_BC) and
/// the circum-cycle type it encodes: > 0 circle, < 0 line, = 0 horocycle.
inline TripleDelta classify_triple(double s_ab, double s_bc, double s_ca) {
  const double delta = (s_ab + s_bc - s_ca) * (s_bc + s_ca - s_ab) * (s_ca + s_ab - s_bc);
  const double band = horocycle_band(s_ab + s_bc + s_ca);
  CycleType type = CycleType::Horocycle;
  if (delta > band) {
    type = CycleType::DistanceCircle;
  } else if (delta < -band) {
    type = CycleType::DistanceLine;
  }
  return {delta, type};
}

template <PlanePoint P>
TripleDelta triple_delta(const P &pa, const P &pb, const P &pc) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  if (std::abs(det3(a, b, c)) <= kCollinearTolerance) {
    throw degeneracy_error("triple_delta: points are collinear");
  }
  return classify_triple(chords(a, b).s, chords(b, c).s, chords(c, a).s);
}

/// [a,b,c,e] = [a,b,c] - [b,c,e] + [c,e,a] - [e,a,b]; zero iff the four
/// vectors are coplanar.
constexpr double quad_bracket(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &e) {
  return det3(a, b, c) - det3(b, c, e) + det3(c, e, a) - det3(e, a, b);
}

/// V(a,b,c,e) = [a,b,c] e - [b,c,e] a + [c,e,a] b - [e,a,b] c, which vanishes
/// for any four vectors of R^3.
constexpr Vec3 v_vector(const Vec3 &a, const Vec3 &b, const Vec3 &c, const Vec3 &e) {
  return det3(a, b, c) * e - det3(b, c, e) * a + det3(c, e, a) * b - det3(e, a, b) * c;
}

/// The six chord quantities of a quadruple A, B, C, E.
struct QuadChords {
  ChordPair ab, ac, ae, bc, be, ce;
};

template <PlanePoint P>
QuadChords quad_chords(const P &pa, const P &pb, const P &pc, const P &pe) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  const HPoint e = as_hpoint(pe);
  return {chords(a, b), chords(a, c), chords(a, e), chords(b, c), chords(b, e), chords(c, e)};
}

/// The 17-term polynomial in the K = cosh d quantities. It is the Gram
/// determinant of four shell vectors and therefore vanishes for any four
/// points of the plane.
inline double seventeen_polynomial(double kab, double kac, double kae, double kbc, double kbe, double kce) {
  return kab * kab * kce * kce + kac * kac * kbe * kbe + kae * kae * kbc * kbc  //
         - 2 * kab * kac * kbe * kce - 2 * kab * kae * kbc * kce - 2 * kac * kae * kbc * kbe  //
         + 2 * kab * kac * kbc + 2 * kab * kae * kbe + 2 * kac * kae * kce + 2 * kbc * kbe * kce  //
         - kab * kab - kac * kac - kae * kae - kbc * kbc - kbe * kbe - kce * kce + 1;
}

template <PlanePoint P>
double seventeen_residual(const P &a, const P &b, const P &c, const P &e) {
  const QuadChords q = quad_chords(a, b, c, e);
  return seventeen_polynomial(q.ab.k, q.ac.k, q.ae.k, q.bc.k, q.be.k, q.ce.k);
}

struct PtolemyDeltas {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  double max() const { return std::max({d1, d2, d3}); }
};

/// Delta_1 = S_AC S_BE - S_AE S_BC - S_AB S_CE
/// Delta_2 = S_AB S_CE - S_AC S_BE - S_AE S_BC
/// Delta_3 = S_AE S_BC - S_AC S_BE - S_AB S_CE
/// All three are <= 0; the sum of any two is -2 times one of the products.
inline PtolemyDeltas ptolemy_deltas(const QuadChords &q) {
  const double x = q.ab.s * q.ce.s;
  const double y = q.ac.s * q.be.s;
  const double z = q.ae.s * q.bc.s;
  return {y - z - x, x - y - z, z - y - x};
}

template <PlanePoint P>
PtolemyDeltas ptolemy_deltas(const P &a, const P &b, const P &c, const P &e) {
  return ptolemy_deltas(quad_chords(a, b, c, e));
}

/// Residual of -[a,b,c,e]^2 = 16 (S_AB S_CE + S_AC S_BE + S_AE S_BC) Delta_1 Delta_2 Delta_3,
/// which follows from V = 0 and
///   <V,V> = 4 [a,b,c,e]^2 + 64 (S_AB S_CE + S_AC S_BE + S_AE S_BC) Delta_1 Delta_2 Delta_3.
/// Both sides are sextic in the chord quantities; the difference is divided by
/// max(|lhs|, |rhs|, max(1, S_max)^6).
inline double ptolemy_product_residual(const QuadChords &q, double bracket) {
  const PtolemyDeltas d = ptolemy_deltas(q);
  const double sum = q.ab.s * q.ce.s + q.ac.s * q.be.s + q.ae.s * q.bc.s;
  const double lhs = -bracket * bracket;
  const double rhs = 16.0 * sum * d.d1 * d.d2 * d.d3;
  const double smax = std::max({1.0, q.ab.s, q.ac.s, q.ae.s, q.bc.s, q.be.s, q.ce.s});
  const double s3 = smax * smax * smax;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), s3 * s3});
}

template <PlanePoint P>
double ptolemy_product_residual(const P &pa, const P &pb, const P &pc, const P &pe) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  const HPoint e = as_hpoint(pe);
  return ptolemy_product_residual(quad_chords(a, b, c, e), quad_bracket(a, b, c, e));
}

/// True iff every one of the four triples is collinear within kCollinearTolerance.
template <PlanePoint P>
bool is_collinear_quadruple(const P &pa, const P &pb, const P &pc, const P &pe) {
  const HPoint a = as_hpoint(pa);
  const HPoint b = as_hpoint(pb);
  const HPoint c = as_hpoint(pc);
  const HPoint e = as_hpoint(pe);
  const double worst = std::max({std::abs(det3(a, b, c)), std::abs(det3(b, c, e)), std::abs(det3(c, e, a)),
                                 std::abs(det3(e, a, b))});
  return worst < kCollinearTolerance;
}

/// Cocyclicity test for a non-collinear quadruple: some Ptolemy relation
/// holds with equality, i.e. max(Delta_i) > -tol.
template <PlanePoint P>
bool is_cocyclic(const P &a, const P &b, const P &c, const P &e, double tol) {
  if (is_collinear_quadruple(a, b, c, e)) {
    throw degeneracy_error("is_cocyclic: quadruple is collinear");
  }
  return ptolemy_deltas(a, b, c, e).max() > -tol;
}

/// S_AC^2 of an oriented-convex cocyclic quadrangle ABCE from its four sides:
///   (S_AB S_CE + S_AE S_BC)(S_AB S_AE + S_BC S_CE) / (S_AB S_BC + S_AE S_CE).
inline double diagonal_sq_from_sides(double s_ab, double s_bc, double s_ce, double s_ae) {
  if (s_ab < 0.0 || s_bc < 0.0 || s_ce < 0.0 || s_ae < 0.0) {
    throw domain_error("diagonal_sq_from_sides: chord quantities must be non-negative");
  }
  const double den = s_ab * s_bc + s_ae * s_ce;
  if (!(den > 0.0)) {
    throw degeneracy_error("diagonal_sq_from_sides: vanishing denominator");
  }
  return (s_ab * s_ce + s_ae * s_bc) * (s_ab * s_ae + s_bc * s_ce) / den;
}

/// Residuals (lhs - rhs) of the four diagonal relations of a quadruple:
///   [0]  (S_AB S_BC + S_AE S_CE) S_AC^2 = (S_AB S_CE + S_AE S_BC)(S_AB S_AE + S_BC S_CE)
///   [1] -(S_AB S_BC - S_AE S_CE) S_AC^2 = (S_AB S_CE - S_AE S_BC)(S_AB S_AE - S_BC S_CE)
///   [2]  (S_AB S_AE + S_BC S_CE) S_BE^2 = (S_AB S_CE + S_BC S_AE)(S_AB S_BC + S_AE S_CE)
///   [3] -(S_AB S_AE - S_BC S_CE) S_BE^2 = (S_AB S_CE - S_BC S_AE)(S_AB S_BC - S_AE S_CE)
/// A cocyclic quadruple satisfies one of [0]/[1] and one of [2]/[3]; an
/// oriented-convex cocyclic one satisfies [0] and [2].
inline std::array<double, 4> diagonal_relation_residuals(const QuadChords &q) {
  const double ab = q.ab.s, bc = q.bc.s, ce = q.ce.s, ae = q.ae.s;
  const double ac2 = q.ac.s * q.ac.s;
  const double be2 = q.be.s * q.be.s;
  return {
      (ab * bc + ae * ce) * ac2 - (ab * ce + ae * bc) * (ab * ae + bc * ce),
      -(ab * bc - ae * ce) * ac2 - (ab * ce - ae * bc) * (ab * ae - bc * ce),
      (ab * ae + bc * ce) * be2 - (ab * ce + bc * ae) * (ab * bc + ae * ce),
      -(ab * ae - bc * ce) * be2 - (ab * ce - bc * ae) * (ab * bc - ae * ce),
  };
}

template <PlanePoint P>
std::array<double, 4> diagonal_relation_residuals(const P &a, const P &b, const P &c, const P &e) {
  return diagonal_relation_residuals(quad_chords(a, b, c, e));
}

}  // namespace hypoly
