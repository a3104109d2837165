#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "hypoly/area.hpp"
#include "hypoly/construct.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace hypoly {
namespace {

// Angle opposite L3 from the cosine law.
double opposite_angle(double l1, double l2, double l3) {
  const double c = (std::cosh(l1) * std::cosh(l2) - std::cosh(l3)) / (std::sinh(l1) * std::sinh(l2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

TEST(Area, KleinTriangleOracle) {
  const KleinPoint a{0.0, 0.0};
  const KleinPoint b{0.5, 0.0};
  const KleinPoint c{0.0, 0.5};
  EXPECT_NEAR(tri_area_signed(a, b, c), oracle::kKleinTriangleArea, 1e-14);
  const HPoint z = lift(a);
  const HPoint p = lift(b);
  const HPoint q = lift(c);
  EXPECT_NEAR(mdot(z, p) + mdot(z, q) + mdot(p, q) + 1.0, oracle::kFanDenominator, 1e-9);
  const Polygon tri{a, b, c};
  EXPECT_NEAR(omega_integral(tri), oracle::kKleinTriangleArea, 1e-8);
}

TEST(Area, SignedAreaAntisymmetricAndCyclic) {
  testing::Sampler rng(21);
  for (int i = 0; i < 1000; ++i) {
    const HPoint a = rng.point();
    const HPoint b = rng.point();
    const HPoint c = rng.point();
    const double f = tri_area_signed(a, b, c);
    EXPECT_NEAR(tri_area_signed(a, c, b), -f, 1e-14);
    EXPECT_NEAR(tri_area_signed(b, c, a), f, 1e-14);
    EXPECT_LT(std::abs(f), std::numbers::pi);
  }
}

TEST(Area, CollinearPolygonsHaveZeroArea) {
  const Motion m = Motion::rotation(0.7) * Motion::boost_xi(0.4);
  std::vector<HPoint> pts;
  for (double t : {0.0, 1.3, -0.4, 2.2, 0.9}) {
    pts.push_back(m(HPoint::unchecked({std::cosh(t), std::sinh(t), 0.0})));
  }
  const Polygon p(pts);
  EXPECT_NEAR(polygon_area(p), 0.0, 1e-13);
  EXPECT_NEAR(polygon_area(p, lift({0.2, -0.6})), 0.0, 1e-13);
  EXPECT_NEAR(tri_area_signed(pts[0], pts[1], pts[2]), 0.0, 1e-13);
}

TEST(Area, OriginIndependenceAndRelabeling) {
  testing::Sampler rng(22);
  for (int i = 0; i < 500; ++i) {
    const Polygon p{std::span<const KleinPoint>(rng.polygon(rng.index(3, 9)))};
    const double at_first = polygon_area(p);
    EXPECT_NEAR(polygon_area(p, rng.point()), at_first, 1e-10);
    EXPECT_NEAR(polygon_area(p, rng.point()), at_first, 1e-10);
    EXPECT_NEAR(polygon_area(p.rotated(rng.index(1, p.size() - 1))), at_first, 1e-10);
    EXPECT_NEAR(polygon_area(p.reversed()), -at_first, 1e-10);
    double sum = 0.0;
    for (double t : fan_terms(p, HPoint())) {
      sum += t;
    }
    EXPECT_NEAR(sum, at_first, 1e-10);
  }
}

TEST(Area, TriangleAsPolygon) {
  testing::Sampler rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto v = rng.polygon(3);
    EXPECT_NEAR(polygon_area(Polygon{std::span<const KleinPoint>(v)}), tri_area_signed(v[0], v[1], v[2]), 1e-14);
  }
}

TEST(Area, OmegaIntegralMatchesFanSum) {
  testing::Sampler rng(24);
  for (int i = 0; i < 100; ++i) {
    const Polygon p{std::span<const KleinPoint>(rng.polygon(rng.index(3, 8), 0.95))};
    EXPECT_NEAR(omega_integral(p), polygon_area(p), 1e-8);
  }
}

TEST(Area, OmegaIntegralOrientationAndRadialPaths) {
  const std::vector<KleinPoint> chain{{0.1, 0.2}, {0.6, -0.1}, {-0.3, 0.5}, {0.1, 0.2}};
  const std::vector<KleinPoint> back(chain.rbegin(), chain.rend());
  EXPECT_NEAR(omega_integral(back), -omega_integral(chain), 1e-14);
  const std::vector<KleinPoint> radial{{-0.7, 0.0}, {0.0, 0.0}, {0.8, 0.0}, {-0.7, 0.0}};
  EXPECT_EQ(omega_integral(radial), 0.0);
  const std::vector<double> weights{2.0, -1.0, 0.5};
  const double a = omega_integral(std::span(chain).subspan(0, 2));
  const double b = omega_integral(std::span(chain).subspan(1, 2));
  const double c = omega_integral(std::span(chain).subspan(2, 2));
  EXPECT_NEAR(omega_integral(chain, weights), 2.0 * a - b + 0.5 * c, 1e-14);
  EXPECT_THROW(omega_integral(chain, std::vector<double>{1.0}), domain_error);
}

TEST(Area, LhuilierOracleValues) {
  EXPECT_NEAR(lhuilier(1.0, 1.0, 1.0), oracle::kUnitEquilateralArea, 1e-14);
  EXPECT_NEAR(tri_area_from_sides_arccos(1.0, 1.0, 1.0), oracle::kUnitEquilateralArea, 1e-12);
  EXPECT_NEAR(lhuilier(1.0, 1.0, oracle::kUnitHingeSide), oracle::kUnitHingeArea, 1e-9);
  EXPECT_NEAR(tri_area_sas(1.0, 1.0, oracle::kUnitHingeAngle), oracle::kUnitHingeArea, 1e-9);
  EXPECT_EQ(lhuilier(0.7, 1.1, 1.8), 0.0);
  EXPECT_NEAR(tri_area_from_sides_arccos(0.8, 0.8, 1.6), 0.0, 1e-7);
}

TEST(Area, LhuilierDomain) {
  EXPECT_THROW(lhuilier(1.0, 1.0, 2.1), domain_error);
  EXPECT_THROW(lhuilier(0.0, 1.0, 1.0), domain_error);
  EXPECT_THROW(lhuilier(SideLengths{1.0, 1.0, 1.0, 1.0}), domain_error);
  EXPECT_THROW(tri_area_from_sides_arccos(3.0, 1.0, 1.0), domain_error);
}

TEST(Area, FormulaFamilyAgreement) {
  testing::Sampler rng(25);
  for (int i = 0; i < 1000; ++i) {
    const auto [l1, l2, l3] = rng.triangle_sides(0.05, 3.0);
    const double h = lhuilier(l1, l2, l3);
    const double gamma = opposite_angle(l1, l2, l3);
    EXPECT_NEAR(tri_area_from_sides_arccos(l1, l2, l3), h, 1e-10);
    EXPECT_NEAR(tri_area_sas(l1, l2, gamma), h, 1e-10);
    EXPECT_NEAR(tri_area_overdetermined(l1, l2, l3, gamma), h, 1e-10);
    const Polygon t = triangle_from_sides(l1, l2, l3);
    EXPECT_NEAR(std::abs(polygon_area(t)), h, 1e-10);
  }
}

TEST(Area, OverdeterminedRejectsInconsistentAngle) {
  EXPECT_THROW(tri_area_overdetermined(1.0, 1.0, 1.0, 0.5), consistency_error);
  EXPECT_THROW(tri_area_sas(1.0, 1.0, 4.0), domain_error);
  EXPECT_EQ(tri_area_sas(1.0, 1.0, 0.0), 0.0);
  EXPECT_LT(tri_area_sas(1.0, 1.0, 1e-9), 1e-8);
}

TEST(Area, GradientMatchesFiniteDifferences) {
  testing::Sampler rng(26);
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const auto l = rng.triangle_sides(0.1, 3.0);
    const auto g = lhuilier_gradient(l[0], l[1], l[2]);
    for (int k = 0; k < 3; ++k) {
      auto up = l;
      auto down = l;
      up[k] += h;
      down[k] -= h;
      const double fd = (lhuilier(up[0], up[1], up[2]) - lhuilier(down[0], down[1], down[2])) / (2 * h);
      EXPECT_NEAR(fd, g[k], 1e-5 * std::max(1.0, std::abs(g[k])));
    }
  }
}

TEST(Area, GradientSymmetryAndBoundary) {
  const auto g = lhuilier_gradient(1.0, 1.0, 1.0);
  EXPECT_NEAR(g[0], g[1], 1e-15);
  EXPECT_NEAR(g[1], g[2], 1e-15);
  EXPECT_THROW(lhuilier_gradient(1.0, 1.0, 2.0), domain_error);
  EXPECT_LT(lhuilier_gradient(1.999, 1.0, 1.0)[0], -10.0);
  EXPECT_GT(lhuilier_gradient(2.0, 1.0, 1.001)[2], 10.0);
}

TEST(Area, SideLengthsValidation) {
  EXPECT_THROW(SideLengths({1.0, -1.0, 1.0}), domain_error);
  EXPECT_TRUE(strict_polygon_inequality(SideLengths{1.0, 1.0, 1.5}));
  EXPECT_FALSE(strict_polygon_inequality(SideLengths{1.0, 2.0, 3.0, 6.0}));
  EXPECT_FALSE(strict_polygon_inequality(SideLengths{1.0, 1.0, 2.0}));
}

}  // namespace
}  // namespace hypoly
