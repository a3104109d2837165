#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypoly/cocyclic.hpp"
#include "hypoly/construct.hpp"
#include "support/identities.hpp"
#include "support/random.hpp"

namespace hypoly {
namespace {

// Four points on one random cycle, moved by a random motion.
std::array<HPoint, 4> cocyclic_quadruple(testing::Sampler &rng, const Cycle &c, bool ordered) {
  const double span = c.type == CycleType::DistanceCircle ? std::numbers::pi : 1.5;
  std::array<double, 4> t{};
  for (double &v : t) {
    v = rng.uniform(-span, span);
  }
  if (ordered) {
    std::sort(t.begin(), t.end());
    if (c.type == CycleType::DistanceLine) {
      std::reverse(t.begin(), t.end());
    }
  }
  const Motion m = Motion::rotation(rng.uniform(0, 6.3)) * Motion::boost_xi(rng.uniform(0, 1.0));
  std::array<HPoint, 4> q;
  for (std::size_t i = 0; i < 4; ++i) {
    q[i] = m(anchored_cycle_point(c, t[i]));
  }
  return q;
}

Cycle random_cycle(testing::Sampler &rng) {
  switch (rng.index(0, 2)) {
    case 0:
      return Cycle::distance_circle(rng.uniform(0.1, 2.0));
    case 1:
      return Cycle::distance_line(rng.uniform(0.0, 1.5));
    default:
      return Cycle::horocycle();
  }
}

TEST(Cocyclic, CircumPlaneRelations) {
  testing::Sampler rng(31);
  for (int i = 0; i < 2000; ++i) {
    const HPoint a = rng.point();
    const HPoint b = rng.point();
    const HPoint c = rng.point();
    if (std::abs(det3(a, b, c)) < 1e-6) {
      continue;
    }
    for (double r : circum_plane_residuals(a, b, c)) {
      EXPECT_LT(r, 1e-9);
    }
  }
}

TEST(Cocyclic, CircumPlaneRejectsCollinear) {
  const HPoint a = lift({-0.5, 0.0});
  const HPoint b = lift({0.1, 0.0});
  const HPoint c = lift({0.6, 0.0});
  EXPECT_THROW(circum_plane(a, b, c), degeneracy_error);
  EXPECT_THROW(triple_delta(a, b, c), degeneracy_error);
}

TEST(Cocyclic, TripleTypeMatchesGenerator) {
  testing::Sampler rng(32);
  for (int i = 0; i < 3000; ++i) {
    const Cycle c = random_cycle(rng);
    if (c.type == CycleType::DistanceLine && c.gauge < 0.05) {
      continue;  // points too close to a geodesic to have a reliable sign
    }
    const auto q = cocyclic_quadruple(rng, c, false);
    if (std::abs(det3(q[0], q[1], q[2])) < 1e-3) {
      continue;
    }
    EXPECT_EQ(triple_delta(q[0], q[1], q[2]).type, c.type) << to_string(c.type);
  }
}

TEST(Cocyclic, ClassifyTripleOnKnownTriples) {
  const double s1 = std::sinh(0.5);
  EXPECT_EQ(classify_triple(s1, s1, s1).type, CycleType::DistanceCircle);
  EXPECT_EQ(classify_triple(std::sinh(1.5), std::sinh(1.5), std::sinh(2.95)).type, CycleType::DistanceLine);
  EXPECT_EQ(classify_triple(std::sinh(1.0), std::sinh(1.0), 2.0 * std::sinh(1.0)).type, CycleType::Horocycle);
}

TEST(Cocyclic, SeventeenIdentityVanishes) {
  testing::Sampler rng(33);
  for (int i = 0; i < 2000; ++i) {
    const HPoint a = rng.point(), b = rng.point(), c = rng.point(), e = rng.point();
    const QuadChords q = quad_chords(a, b, c, e);
    const double kmax = std::max({q.ab.k, q.ac.k, q.ae.k, q.bc.k, q.be.k, q.ce.k});
    EXPECT_LT(std::abs(seventeen_residual(a, b, c, e)) / std::pow(kmax, 4), 1e-9);
  }
  // Not an identity for arbitrary numbers.
  EXPECT_GT(std::abs(seventeen_polynomial(2.0, 3.0, 1.5, 1.2, 4.0, 2.5)), 1.0);
}

TEST(Cocyclic, DependencyVectorVanishes) {
  testing::Sampler rng(34);
  for (int i = 0; i < 500; ++i) {
    const HPoint a = rng.point(), b = rng.point(), c = rng.point(), e = rng.point();
    const Vec3 v = v_vector(a, b, c, e);
    const double scale = a.x0() * b.x0() * c.x0() * e.x0();
    EXPECT_LT(std::max({std::abs(v.x0), std::abs(v.x1), std::abs(v.x2)}) / scale, 1e-12);
  }
}

TEST(Cocyclic, PtolemyDeltasNonPositiveWithPairSums) {
  testing::Sampler rng(35);
  for (int i = 0; i < 3000; ++i) {
    const HPoint a = rng.point(), b = rng.point(), c = rng.point(), e = rng.point();
    const QuadChords q = quad_chords(a, b, c, e);
    const PtolemyDeltas d = ptolemy_deltas(q);
    const double scale = std::max(1.0, q.ab.s * q.ce.s + q.ac.s * q.be.s + q.ae.s * q.bc.s);
    EXPECT_LE(d.max() / scale, 1e-12);
    EXPECT_NEAR(d.d1 + d.d2, -2.0 * q.ae.s * q.bc.s, 1e-12 * scale);
    EXPECT_NEAR(d.d2 + d.d3, -2.0 * q.ac.s * q.be.s, 1e-12 * scale);
    EXPECT_NEAR(d.d1 + d.d3, -2.0 * q.ab.s * q.ce.s, 1e-12 * scale);
  }
}

TEST(Cocyclic, CorrectedProductIdentity) {
  testing::Sampler rng(36);
  for (int i = 0; i < 2000; ++i) {
    const HPoint a = rng.point(), b = rng.point(), c = rng.point(), e = rng.point();
    EXPECT_LT(ptolemy_product_residual(a, b, c, e), 1e-9);
  }
}

TEST(Cocyclic, PrintedProductFormFailsGenerically) {
  const HPoint a = lift({0.1, 0.2}), b = lift({-0.5, 0.3}), c = lift({0.4, -0.6}), e = lift({0.7, 0.1});
  const QuadChords q = quad_chords(a, b, c, e);
  EXPECT_GT(testing::printed_product_residual(q, quad_bracket(a, b, c, e)), 1e-3);
  EXPECT_LT(ptolemy_product_residual(q, quad_bracket(a, b, c, e)), 1e-12);
}

TEST(Cocyclic, ReconstructedPolynomials) {
  testing::Sampler rng(37);
  for (int i = 0; i < 1000; ++i) {
    const HPoint a = rng.point(), b = rng.point(), c = rng.point(), e = rng.point();
    const QuadChords q = quad_chords(a, b, c, e);
    const double ab = q.ab.s * q.ab.s, ac = q.ac.s * q.ac.s, ae = q.ae.s * q.ae.s;
    const double bc = q.bc.s * q.bc.s, be = q.be.s * q.be.s, ce = q.ce.s * q.ce.s;
    const double smax = std::max({1.0, ab, ac, ae, bc, be, ce});
    const double scale = smax * smax * smax;
    const double bracket = quad_bracket(a, b, c, e);
    EXPECT_NEAR(testing::bracket_sq_poly(ab, ac, ae, bc, be, ce) / scale, bracket * bracket / 16.0 / scale, 1e-10);
    EXPECT_NEAR(testing::dependency_norm_poly(ab, ac, ae, bc, be, ce) / scale, 0.0, 1e-10);
  }
  // Polynomial identity, valid for arbitrary arguments.
  for (int i = 0; i < 200; ++i) {
    const double ab = rng.uniform(0, 3), ac = rng.uniform(0, 3), ae = rng.uniform(0, 3);
    const double bc = rng.uniform(0, 3), be = rng.uniform(0, 3), ce = rng.uniform(0, 3);
    const double diff =
        testing::dependency_norm_poly(ab, ac, ae, bc, be, ce) - testing::bracket_sq_poly(ab, ac, ae, bc, be, ce);
    const double heron = testing::heron_poly(std::sqrt(ab * ce), std::sqrt(ac * be), std::sqrt(ae * bc));
    EXPECT_NEAR(diff, heron, 1e-10 * std::max(1.0, std::abs(heron)));
  }
}

TEST(Cocyclic, CocyclicQuadruplesHaveZeroDelta) {
  testing::Sampler rng(38);
  for (int i = 0; i < 2000; ++i) {
    const Cycle c = random_cycle(rng);
    const auto q = cocyclic_quadruple(rng, c, false);
    const QuadChords ch = quad_chords(q[0], q[1], q[2], q[3]);
    const double scale = std::max(1.0, ch.ab.s * ch.ce.s + ch.ac.s * ch.be.s + ch.ae.s * ch.bc.s);
    EXPECT_LT(std::abs(ptolemy_deltas(ch).max()) / scale, 1e-10);
    EXPECT_LT(std::abs(quad_bracket(q[0], q[1], q[2], q[3])) / std::pow(std::max(1.0, q[0].x0()), 3), 1e-9);
  }
}

TEST(Cocyclic, IsCocyclicSeparatesGenericQuadruples) {
  const HPoint a = lift({0.1, 0.2}), b = lift({-0.5, 0.3}), c = lift({0.4, -0.6}), e = lift({0.7, 0.1});
  EXPECT_FALSE(is_cocyclic(a, b, c, e, 1e-9));
  const Cycle circ = Cycle::distance_circle(0.8);
  EXPECT_TRUE(is_cocyclic(cycle_point(circ, 0.1), cycle_point(circ, 1.5), cycle_point(circ, 3.0),
                          cycle_point(circ, 4.4), 1e-9));
  const HPoint l1 = lift({-0.5, 0.0}), l2 = lift({0.0, 0.0}), l3 = lift({0.3, 0.0}), l4 = lift({0.6, 0.0});
  EXPECT_TRUE(is_collinear_quadruple(l1, l2, l3, l4));
  EXPECT_THROW(is_cocyclic(l1, l2, l3, l4, 1e-9), degeneracy_error);
}

TEST(Cocyclic, DiagonalRelationsOnOrderedQuadruples) {
  testing::Sampler rng(39);
  for (int i = 0; i < 2000; ++i) {
    const Cycle c = random_cycle(rng);
    const auto q = cocyclic_quadruple(rng, c, true);
    const QuadChords ch = quad_chords(q[0], q[1], q[2], q[3]);
    const auto r = diagonal_relation_residuals(ch);
    const double smax = std::max({1.0, ch.ab.s, ch.ac.s, ch.ae.s, ch.bc.s, ch.be.s, ch.ce.s});
    EXPECT_LT(std::abs(r[0]) / std::pow(smax, 4), 1e-9);
    EXPECT_LT(std::abs(r[2]) / std::pow(smax, 4), 1e-9);
    EXPECT_NEAR(diagonal_sq_from_sides(ch.ab.s, ch.bc.s, ch.ce.s, ch.ae.s) / (smax * smax),
                ch.ac.s * ch.ac.s / (smax * smax), 1e-9);
  }
}

TEST(Cocyclic, DiagonalFromSidesErrors) {
  EXPECT_THROW(diagonal_sq_from_sides(-1.0, 1.0, 1.0, 1.0), domain_error);
  EXPECT_THROW(diagonal_sq_from_sides(0.0, 1.0, 0.0, 1.0), degeneracy_error);
}

}  // namespace
}  // namespace hypoly
