/*
 * Copyright 2026 The hypgeo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "hypgeo/geodesy.hpp"
#include "support/random.hpp"

namespace hypgeo {
namespace {

using testing::Sampler;

// Distance from x to the line of g: move the line to the origin, where it is
// the span of z and sinh(dist) is the norm of the part orthogonal to z.
double reference_distance_to_line(const Geodesic& g, const Point& x) {
  const Vector q = translate(-g.base(), x).coords();
  const Vector& z = g.direction().coords();
  return std::asinh((q - q.dot(z) * z).norm());
}

Geodesic random_geodesic(Sampler& s, int dim) {
  return Geodesic(s.box(dim, -3, 3), s.direction(dim));
}

TEST(GeodesicTest, Examples) {
  const Geodesic g(Point::zero(2), Point{1.0, 0.0});
  EXPECT_TRUE(approx_equal(geodesic_point(g, 0.0), Point::zero(2)));
  const Point p = geodesic_point(g, 1.0);
  EXPECT_NEAR(p[0], 1.1752011936438015, 1e-15);
  EXPECT_EQ(p[1], 0.0);
  EXPECT_NEAR(hyperbolic_distance(p, Point::zero(2)), 1.0, 1e-15);

  const Point y{0.5, 2.0};
  const Point z{0.6, 0.8};
  const Geodesic h(y, z);
  EXPECT_TRUE(approx_equal(h(0.7), translate(y, Point(Vector(std::sinh(0.7) * z.coords())))));
}

TEST(GeodesicTest, NormalizesDirectionAndRejectsZero) {
  const Geodesic g(Point::zero(2), Point{3.0, 4.0});
  EXPECT_NEAR(g.direction().norm(), 1.0, 1e-15);
  EXPECT_THROW(Geodesic(Point::zero(2), Point::zero(2)), DegenerateInputError);
  EXPECT_THROW(Geodesic(Point::zero(2), Point{1.0}), DimensionError);
}

TEST(GeodesicTest, UnitSpeed) {
  Sampler s(300);
  for (int k = 0; k < 10000; ++k) {
    const Geodesic g = random_geodesic(s, s.integer(1, 6));
    const double a = s.uniform(-10, 10);
    const double b = s.uniform(-10, 10);
    ASSERT_NEAR(hyperbolic_distance(g(a), g(b)), std::abs(a - b), 1e-9);
  }
}

TEST(LineThrough, Examples) {
  const Geodesic g = line_through(Point::zero(2), Point{2.0, 0.0});
  EXPECT_TRUE(approx_equal(g.base(), Point::zero(2)));
  EXPECT_TRUE(approx_equal(g.direction(), Point{1.0, 0.0}));
  EXPECT_THROW(line_through(Point{1.0, 1.0}, Point{1.0, 1.0}), DegenerateInputError);
}

TEST(LineThrough, ReachesSecondPoint) {
  Sampler s(301);
  for (int k = 0; k < 2000; ++k) {
    const int dim = s.integer(1, 6);
    const Point a = s.box(dim, -5, 5);
    const Point b = s.box(dim, -5, 5);
    const Geodesic g = line_through(a, b);
    ASSERT_LE(hyperbolic_distance(g(hyperbolic_distance(a, b)), b), 1e-9);
  }
}

TEST(LineThrough, IsGeodesicDilation) {
  Sampler s(302);
  for (int k = 0; k < 500; ++k) {
    const int dim = s.integer(1, 4);
    const Point a = s.box(dim, -5, 5);
    const Point b = s.box(dim, -5, 5);
    const double d = hyperbolic_distance(a, b);
    const Geodesic g = line_through(a, b);
    for (int i = 0; i < 10; ++i) {
      const double u = s.uniform(0, 1), v = s.uniform(0, 1);
      ASSERT_NEAR(hyperbolic_distance(g(u * d), g(v * d)), d * std::abs(u - v), 1e-9);
    }
  }
}

TEST(SegmentContains, Examples) {
  const Point a{0.3, -0.2};
  const Point b{2.0, 0.0};
  EXPECT_TRUE(segment_contains(a, b, a));
  EXPECT_TRUE(segment_contains(a, b, b));
  const Point o = Point::zero(2);
  const Point e1{2.0, 0.0};
  const Geodesic g = line_through(o, e1);
  EXPECT_TRUE(segment_contains(o, e1, g(hyperbolic_distance(o, e1) / 2)));
  EXPECT_FALSE(segment_contains(o, Point{1.0, 0.0}, Point{0.0, 1.0}));
}

TEST(SegmentContains, OnlyPointsOfTheLine) {
  Sampler s(303);
  int inside = 0;
  for (int k = 0; k < 2000; ++k) {
    const int dim = s.integer(2, 4);
    const Point a = s.box(dim, -3, 3);
    const Point b = s.box(dim, -3, 3);
    const Geodesic g = line_through(a, b);
    const double d = hyperbolic_distance(a, b);
    // Candidates on the segment, past its ends, and pushed off the line.
    Point x = g(s.uniform(-0.5, 1.5) * d);
    if (s.integer(0, 1) == 1) x = Point(Vector(x.coords() + 1e-3 * s.direction(dim).coords()));
    if (!segment_contains(a, b, x)) continue;
    ++inside;
    ASSERT_LE((g(hyperbolic_distance(a, x)).coords() - x.coords()).norm(), 1e-6);
    ASSERT_LE(reference_distance_to_line(g, x), 1e-6);
  }
  // About a quarter of the candidates land on the segment.
  EXPECT_GT(inside, 400);
}

TEST(Collinearity, Examples) {
  const Point a{0.5, 0.5};
  const Point b{-1.0, 2.0};
  EXPECT_TRUE(metrically_collinear(a, a, b));
  const Geodesic g(Point{1.0, -1.0}, Point{1.0, 2.0});
  EXPECT_TRUE(metrically_collinear(g(-2.0), g(3.5), g(0.25)));
  EXPECT_FALSE(metrically_collinear(Point::zero(2), Point{1.0, 0.0}, Point{0.0, 1.0}));
}

TEST(Collinearity, OnLineAgreesWithIndependentDistance) {
  Sampler s(304);
  for (int k = 0; k < 2000; ++k) {
    const int dim = s.integer(2, 4);
    const Geodesic g = random_geodesic(s, dim);
    const Point on = g(s.uniform(-4, 4));
    EXPECT_TRUE(on_line(g, on));
    const Point off(Vector(on.coords() + 1e-2 * s.direction(dim).coords()));
    EXPECT_EQ(on_line(g, off), reference_distance_to_line(g, off) < 1e-9);
  }
}

TEST(Lines, CoincideUnderReparametrization) {
  Sampler s(305);
  for (int k = 0; k < 200; ++k) {
    const Geodesic g = random_geodesic(s, 3);
    const Geodesic h = line_through(g(s.uniform(-2, 0)), g(s.uniform(0.5, 2)));
    EXPECT_TRUE(lines_coincide(g, h));
    EXPECT_FALSE(lines_coincide(g, random_geodesic(s, 3)));
  }
}

TEST(Lines, DistinctLinesShareAtMostOnePoint) {
  Sampler s(306);
  for (int k = 0; k < 200; ++k) {
    // Two lines through a common point p in the plane, so they do meet.
    const Point p = s.box(2, -2, 2);
    const Geodesic g(p, s.direction(2));
    const Geodesic h(p, s.direction(2));
    if (lines_coincide(g, h)) continue;
    std::vector<Point> common;
    for (int i = -4000; i <= 4000; ++i) {
      const Point x = g(i * 1e-3);
      if (reference_distance_to_line(h, x) <= 1e-6) common.push_back(x);
    }
    double diameter = 0.0;
    for (const Point& x : common) {
      for (const Point& y : common) diameter = std::max(diameter, hyperbolic_distance(x, y));
    }
    ASSERT_LE(diameter, 1e-5);
  }
}

TEST(PaperForm, Examples) {
  const Geodesic l(Point{0.0, 1.0}, Point{1.0, 0.0});
  const PaperForm f = line_to_paper_form(l);
  EXPECT_TRUE(approx_equal(f.a, Point{1.0, 0.0}));
  EXPECT_TRUE(approx_equal(f.b, Point{0.0, 1.0}));
  for (double t : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
    EXPECT_LE(hyperbolic_distance(f(t), l(t)), 1e-12);
  }
  EXPECT_THROW(line_to_paper_form(Geodesic(Point::zero(2), Point{1.0, 1.0})),
               DegenerateInputError);
}

TEST(PaperForm, RoundTrip) {
  Sampler s(307);
  for (int k = 0; k < 1000; ++k) {
    const int dim = s.integer(2, 5);
    const Geodesic l = random_geodesic(s, dim);
    if (reference_distance_to_line(l, Point::zero(dim)) < 1e-3) continue;
    const Geodesic back = paper_form_to_line(line_to_paper_form(l));
    for (double t : {-2.0, 0.0, 1.5}) ASSERT_LE(hyperbolic_distance(back(t), l(t)), 1e-9);
  }
}

TEST(PaperForm, RejectsNonUnitSpeed) {
  EXPECT_THROW(paper_form_to_line(PaperForm{Point{2.0, 0.0}, Point{0.0, 1.0}}), DomainError);
}

TEST(ParallelFamily, Examples) {
  const Geodesic g = parallel_family(Point{1.0, 0.0}, Point{0.0, 1.0}, 2.0);
  EXPECT_TRUE(approx_equal(g.base(), Point::zero(2)));
  EXPECT_NEAR(g.direction()[0], 2 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(g.direction()[1], 1 / std::sqrt(5.0), 1e-15);
  EXPECT_THROW(parallel_family(Point{1.0, 0.0}, Point{0.0, 1.0}, 1.0), ParameterError);
  EXPECT_THROW(parallel_family(Point{1.0, 0.0}, Point{0.0, 1.0}, -0.5), ParameterError);
  EXPECT_THROW(parallel_family(Point{1.0, 0.0}, Point{2.0, 0.0}, 2.0), DegenerateInputError);
}

TEST(ParallelFamily, FrozenGaps) {
  // mpmath closed-form minimizers; the gap depends only on |mu| by symmetry.
  const Point a{1.0, 0.0};
  const Point b{0.0, 1.0};
  const struct {
    double mu, gap;
  } cases[] = {{1.5, 0.58604653162310988},
               {2.0, 0.71270847153530629},
               {3.0, 0.80471895621705019}};
  for (const auto& c : cases) {
    EXPECT_NEAR(parallel_gap(a, b, c.mu).min_gap, c.gap, 1e-12) << c.mu;
    EXPECT_NEAR(parallel_gap(a, b, -c.mu).min_gap, c.gap, 1e-12) << -c.mu;
  }
  const GapScan scan = parallel_gap(a, b, 3.0);
  EXPECT_NEAR(std::abs(scan.s), std::asinh(0.5), 1e-6);
  EXPECT_NEAR(std::abs(scan.t), 0.34657359027997265, 1e-6);
}

TEST(ParallelFamily, LinesThroughOriginMissingL) {
  const Point a{1.0, 0.0};
  const Point b{0.0, 1.0};
  std::vector<Geodesic> lines;
  for (double mu : {1.5, -1.5, 2.0, -2.0, 3.0, -3.0, 10.0}) {
    const Geodesic g = parallel_family(a, b, mu);
    EXPECT_TRUE(on_line(g, Point::zero(2)));
    const GapScan scan = parallel_gap(a, b, mu);
    EXPECT_TRUE(scan.disjoint);
    EXPECT_GT(scan.min_gap, 1e-4);
    lines.push_back(g);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      EXPECT_FALSE(lines_coincide(lines[i], lines[j]));
    }
  }
}

TEST(ParallelFamily, HigherDimensionalPaperForm) {
  Sampler s(308);
  for (int k = 0; k < 10; ++k) {
    const Geodesic l = random_geodesic(s, 4);
    if (reference_distance_to_line(l, Point::zero(4)) < 0.1) continue;
    const PaperForm f = line_to_paper_form(l);
    for (double mu : {1.2, -4.0}) {
      GapScanOptions opts;
      opts.samples = 60;
      EXPECT_TRUE(parallel_gap(f.a, f.b, mu, opts).disjoint);
    }
  }
}

TEST(GapScan, DetectsIntersection) {
  // The x-axis and the y-axis meet at the origin.
  const Geodesic g(Point::zero(2), Point{1.0, 0.0});
  const Geodesic h(Point::zero(2), Point{0.0, 1.0});
  const GapScan scan = scan_min_gap([&](double t) { return g(t); },
                                    [&](double t) { return h(t); });
  EXPECT_FALSE(scan.disjoint);
  EXPECT_LE(scan.min_gap, 1e-8);
}

TEST(GapScan, SerialAndParallelAgree) {
  GapScanOptions serial_opts;
  serial_opts.use_parallel = false;
  GapScanOptions parallel_opts;
  const Point a{1.0, 0.0, 0.0};
  const Point b{0.0, 1.0, 0.5};
  const GapScan x = parallel_gap(a, b, 2.5, serial_opts);
  const GapScan y = parallel_gap(a, b, 2.5, parallel_opts);
  EXPECT_EQ(x.min_gap, y.min_gap);
  EXPECT_EQ(x.s, y.s);
  EXPECT_EQ(x.t, y.t);
}

TEST(AngleTest, Examples) {
  EXPECT_DOUBLE_EQ(angle_measure(Angle(Point::zero(2), Point{1.0, 0.0}, Point{0.0, 1.0})),
                   std::numbers::pi / 2);
  const Point z{0.3, 0.4};
  EXPECT_EQ(angle_measure(Angle(Point{1.0, 2.0}, z, z)), 0.0);
  EXPECT_THROW(Angle(Point::zero(2), Point::zero(2), Point{1.0, 0.0}), DegenerateInputError);
}

TEST(AngleTest, FromPointsUsesHalfLinesThroughThem) {
  const Point v{0.5, -1.0};
  const Point p1{2.0, 1.0};
  const Point p2{-1.0, 0.0};
  const Angle angle = Angle::from_points(v, p1, p2);
  EXPECT_LE(hyperbolic_distance(angle.first_ray(hyperbolic_distance(v, p1)), p1), 1e-9);
  EXPECT_LE(hyperbolic_distance(angle.second_ray(hyperbolic_distance(v, p2)), p2), 1e-9);
}

TEST(AngleTest, MeasureInvariantUnderIsometries) {
  Sampler s(309);
  for (int k = 0; k < 20; ++k) {
    const int dim = s.integer(2, 4);
    const Angle angle(s.box(dim, -2, 2), s.direction(dim), s.direction(dim));
    for (int i = 0; i < 100; ++i) {
      const Isometry g = s.isometry(dim, 2.0);
      ASSERT_NEAR(angle_measure(transform(g, angle)), angle_measure(angle), 1e-8);
    }
  }
}

TEST(AngleTest, CongruenceWitness) {
  Sampler s(310);
  for (int k = 0; k < 200; ++k) {
    const int dim = s.integer(2, 4);
    const Angle x(s.box(dim, -2, 2), s.direction(dim), s.direction(dim));
    const Angle y = transform(s.isometry(dim, 2.0), x);
    EXPECT_TRUE(angles_congruent(x, y));
    const FitResult fit = congruence_witness(x, y);
    EXPECT_LE(fit.max_residual, 1e-8);
    for (double t : {0.5, 2.0}) {
      EXPECT_LE(hyperbolic_distance(fit.isometry(x.first_ray(t)), y.first_ray(t)), 1e-8);
      EXPECT_LE(hyperbolic_distance(fit.isometry(x.second_ray(t)), y.second_ray(t)), 1e-8);
    }
  }
  const Angle right(Point::zero(2), Point{1.0, 0.0}, Point{0.0, 1.0});
  const Angle acute(Point::zero(2), Point{1.0, 0.0}, Point{1.0, 1.0});
  EXPECT_FALSE(angles_congruent(right, acute));
  EXPECT_THROW(congruence_witness(right, acute), NotPartialIsometryError);
}

TEST(RightAngle, Examples) {
  const Point o = Point::zero(2);
  EXPECT_TRUE(is_right_angle(Angle(o, Point{1.0, 0.0}, Point{0.0, 1.0})));
  EXPECT_FALSE(is_right_angle(Angle(o, Point{1.0, 0.0}, Point{1.0, 0.0})));
  EXPECT_FALSE(is_right_angle(Angle(o, Point{1.0, 0.0}, Point{1.0, 1.0})));
}

TEST(RightAngle, MatchesEuclideanOrthogonalityAtOrigin) {
  Sampler s(311);
  for (int k = 0; k < 1000; ++k) {
    const int dim = s.integer(2, 5);
    const Vector u = s.direction(dim).coords();
    Vector v = s.direction(dim).coords();
    if (k % 2 == 0) {
      v -= v.dot(u) * u;
      v.normalize();
    }
    const Angle angle(Point::zero(dim), Point(u), Point(v));
    ASSERT_EQ(is_right_angle(angle), std::abs(u.dot(v)) < 1e-9) << k;
  }
}

TEST(RightAngle, SurvivesIsometries) {
  Sampler s(312);
  for (int k = 0; k < 100; ++k) {
    const Angle angle(Point::zero(3), Point{1.0, 0.0, 0.0}, Point{0.0, 0.0, 1.0});
    EXPECT_TRUE(is_right_angle(transform(s.isometry(3, 2.0), angle)));
  }
}

TEST(Spheres, Examples) {
  EXPECT_EQ(sphere_euclidean_radius(0.0), 0.0);
  EXPECT_NEAR(sphere_euclidean_radius(0.88137358701954303), 1.0, 1e-15);
  EXPECT_THROW(sphere_euclidean_radius(-1e-3), DomainError);
}

TEST(Spheres, EuclideanSphereAroundOrigin) {
  Sampler s(313);
  for (double r : {0.1, 1.0, std::acosh(std::numbers::sqrt2), 5.0}) {
    for (int k = 0; k < 1000; ++k) {
      const int dim = s.integer(1, 6);
      const Point x(Vector(sphere_euclidean_radius(r) * s.direction(dim).coords()));
      ASSERT_NEAR(hyperbolic_distance(x, Point::zero(dim)), r, 1e-9);
    }
  }
}

TEST(H1, Examples) {
  EXPECT_EQ(h1_embedding(0.0)[0], 0.0);
  EXPECT_NEAR(hyperbolic_distance(h1_embedding(3.0), h1_embedding(-2.0)), 5.0, 1e-9);
  const Geodesic g(Point::zero(1), Point{1.0});
  EXPECT_TRUE(approx_equal(h1_embedding(1.3), g(1.3)));
}

TEST(H1, IsIsometryOfTheLine) {
  for (int i = 0; i < 1000; ++i) {
    const double s = -10 + 20.0 * i / 999;
    const double t = 10 - 20.0 * ((i * 37) % 1000) / 999;
    ASSERT_NEAR(hyperbolic_distance(h1_embedding(s), h1_embedding(t)), std::abs(s - t), 1e-9);
  }
}

}  // namespace
}  // namespace hypgeo
