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

#include "hypgeo/geodesy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hypgeo/kernels.hpp"

namespace hypgeo {

namespace {

constexpr double kIndependence = 1e-12;

Point unit(const Point& v, const char* what) {
  const double n = v.norm();
  if (n == 0.0) throw DegenerateInputError(std::string(what) + ": zero direction");
  return Point(Vector(v.coords() / n));
}

// |b - proj_a b| relative to |b|; 0 for dependent pairs.
double independence(const Vector& a, const Vector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const Vector ah = a / na;
  const Vector r = b - ah.dot(b) * ah;
  return r.norm() / nb;
}

bool additive(double dxz, double dxy, double dyz, const Tolerance& tol) {
  return tol.close(dxy + dyz, dxz);
}

// d(a,x) + d(x,b) = d(a,b) within tol, and x within tol of the line ab. The
// distance excess alone is second order in the offset from the line, so it
// would admit points about sqrt(tol) away.
bool between(const Point& a, const Point& b, const Point& x, const Tolerance& tol) {
  const double dab = hyperbolic_distance(a, b);
  if (!additive(dab, hyperbolic_distance(a, x), hyperbolic_distance(x, b), tol)) return false;
  if (dab <= tol.abs) return true;
  const Geodesic line(a, translate(-a, b));
  return distance_to_line(line, x) <= tol.abs + tol.rel * dab;
}

template <typename F>
double golden_minimize(F&& f, double lo, double hi, double* arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-11; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < fd) {
    *arg = c;
    return fc;
  }
  *arg = d;
  return fd;
}

}  // namespace

Geodesic::Geodesic(Point base, const Point& direction)
    : base_(std::move(base)), direction_(unit(direction, "Geodesic")) {
  require_same_dim(base_.dim(), direction_.dim(), "Geodesic");
}

Point Geodesic::operator()(double t) const {
  return translate(base_, Point(Vector(std::sinh(t) * direction_.coords())));
}

Point geodesic_point(const Geodesic& g, double t) { return g(t); }

Geodesic line_through(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "line_through");
  if (approx_equal(a, b)) {
    throw DegenerateInputError("line_through: points coincide");
  }
  return Geodesic(a, translate(-a, b));
}

double distance_to_line(const Geodesic& g, const Point& x) {
  require_same_dim(g.dim(), x.dim(), "distance_to_line");
  const Vector q = translate(-g.base(), x).coords();
  const Vector& z = g.direction().coords();
  return std::asinh((q - q.dot(z) * z).norm());
}

bool segment_contains(const Point& a, const Point& b, const Point& x, const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "segment_contains");
  require_same_dim(a.dim(), x.dim(), "segment_contains");
  return between(a, b, x, tol);
}

bool metrically_collinear(const Point& a, const Point& b, const Point& c,
                          const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "metrically_collinear");
  require_same_dim(a.dim(), c.dim(), "metrically_collinear");
  return between(a, c, b, tol) || between(b, c, a, tol) || between(a, b, c, tol);
}

bool on_line(const Geodesic& g, const Point& x, const Tolerance& tol) {
  return distance_to_line(g, x) <= tol.abs;
}

bool lines_coincide(const Geodesic& g, const Geodesic& h, const Tolerance& tol) {
  return on_line(g, h(0.0), tol) && on_line(g, h(1.0), tol);
}

Point PaperForm::operator()(double t) const {
  return Point(Vector(std::sinh(t) * a.coords() + std::cosh(t) * b.coords()));
}

PaperForm line_to_paper_form(const Geodesic& line) {
  const Point& y = line.base();
  const Point& z = line.direction();
  const double coeff = z.coords().dot(y.coords()) / (bracket(y) + 1.0);
  Point a(Vector(z.coords() + coeff * y.coords()));
  if (independence(a.coords(), y.coords()) <= 1e-9) {
    throw DegenerateInputError("line_to_paper_form: line passes through the origin");
  }
  return PaperForm{std::move(a), y};
}

Geodesic paper_form_to_line(const PaperForm& form) {
  require_same_dim(form.a.dim(), form.b.dim(), "paper_form_to_line");
  const Point& y = form.b;
  const double by = bracket(y);
  // <a, y> = <z, y> [y] for a = z + <z,y>/([y]+1) y.
  const double zy = form.a.coords().dot(y.coords()) / by;
  Vector z = form.a.coords() - (zy / (by + 1.0)) * y.coords();
  if (std::abs(z.norm() - 1.0) > 1e-9) {
    throw DomainError("paper_form_to_line: (a, b) is not a unit-speed line");
  }
  return Geodesic(y, Point(std::move(z)));
}

Geodesic parallel_family(const Point& a, const Point& b, double mu) {
  require_same_dim(a.dim(), b.dim(), "parallel_family");
  if (!(std::abs(mu) > 1.0) || !std::isfinite(mu)) {
    throw ParameterError("parallel_family: |mu| must exceed 1");
  }
  if (independence(a.coords(), b.coords()) <= kIndependence) {
    throw DegenerateInputError("parallel_family: a and b are linearly dependent");
  }
  return Geodesic(Point::zero(a.dim()), Point(Vector(mu * a.coords() + b.coords())));
}

GapScan scan_min_gap(const Curve& first, const Curve& second, const GapScanOptions& options) {
  if (options.samples < 2) throw ParameterError("scan_min_gap: samples must be >= 2");
  if (!(options.param_max > options.param_min)) {
    throw ParameterError("scan_min_gap: empty parameter range");
  }
  const double lo = options.param_min;
  const double hi = options.param_max;
  const auto n = static_cast<std::size_t>(options.samples);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  auto param = [&](std::size_t i) { return i + 1 == n ? hi : lo + h * static_cast<double>(i); };

  const Point probe = first(lo);
  kernels::PointBatch as(probe.dim(), n);
  kernels::PointBatch bs(probe.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    as.push_back(first(param(i)));
    bs.push_back(second(param(i)));
  }
  const kernels::NearestPair best = options.use_parallel ? kernels::parallel::nearest_pair(as, bs)
                                                         : kernels::serial::nearest_pair(as, bs);
  GapScan scan{best.distance, param(best.i), param(best.j), false};

  if (options.refine) {
    const double s_lo = std::max(lo, scan.s - h);
    const double s_hi = std::min(hi, scan.s + h);
    const double t_lo = std::max(lo, scan.t - h);
    const double t_hi = std::min(hi, scan.t + h);
    auto inner = [&](double s, double* t_arg) {
      const Point p = first(s);
      return golden_minimize(
          [&](double t) { return hyperbolic_distance(p, second(t)); }, t_lo, t_hi, t_arg);
    };
    double s_best = scan.s;
    const double refined = golden_minimize(
        [&](double s) {
          double t_unused = 0.0;
          return inner(s, &t_unused);
        },
        s_lo, s_hi, &s_best);
    if (refined < scan.min_gap) {
      double t_best = scan.t;
      inner(s_best, &t_best);
      scan.min_gap = refined;
      scan.s = s_best;
      scan.t = t_best;
    }
  }
  scan.disjoint = scan.min_gap > options.disjoint_threshold;
  return scan;
}

GapScan parallel_gap(const Point& a, const Point& b, double mu, const GapScanOptions& options) {
  const Geodesic through_origin = parallel_family(a, b, mu);
  const PaperForm line{a, b};
  return scan_min_gap([&](double s) { return through_origin(s); },
                      [&](double t) { return line(t); }, options);
}

Angle::Angle(Point vertex, const Point& z1, const Point& z2)
    : vertex_(std::move(vertex)), z1_(unit(z1, "Angle")), z2_(unit(z2, "Angle")) {
  require_same_dim(vertex_.dim(), z1_.dim(), "Angle");
  require_same_dim(vertex_.dim(), z2_.dim(), "Angle");
}

Angle Angle::from_points(const Point& vertex, const Point& p1, const Point& p2) {
  const Point back = -vertex;
  return Angle(vertex, translate(back, p1), translate(back, p2));
}

Point Angle::first_ray(double t) const {
  return translate(vertex_, Point(Vector(std::sinh(t) * z1_.coords())));
}

Point Angle::second_ray(double t) const {
  return translate(vertex_, Point(Vector(std::sinh(t) * z2_.coords())));
}

double angle_measure(const Angle& angle) {
  return clamped_acos(angle.z1().coords().dot(angle.z2().coords()));
}

Angle transform(const Isometry& g, const Angle& angle) {
  return Angle::from_points(g(angle.vertex()), g(angle.first_ray(1.0)),
                            g(angle.second_ray(1.0)));
}

bool angles_congruent(const Angle& x, const Angle& y, const Tolerance& tol) {
  require_same_dim(x.vertex().dim(), y.vertex().dim(), "angles_congruent");
  return tol.close(angle_measure(x), angle_measure(y));
}

FitResult congruence_witness(const Angle& from, const Angle& to) {
  return fit_isometry({from.vertex(), from.first_ray(1.0), from.second_ray(1.0)},
                      {to.vertex(), to.first_ray(1.0), to.second_ray(1.0)});
}

bool is_right_angle(const Angle& angle, const Tolerance& tol) {
  const Point& v = angle.vertex();
  const Point& r1 = angle.z1();
  const Point& r2 = angle.z2();
  const Point r1_opp = -r1;
  const Point r2_opp = -r2;
  const std::array<Angle, 4> family{Angle(v, r1, r2), Angle(v, r2_opp, r1),
                                    Angle(v, r2, r1_opp), Angle(v, r1_opp, r2_opp)};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!angles_congruent(family[i], family[j], tol)) return false;
    }
  }
  return true;
}

double sphere_euclidean_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("sphere_euclidean_radius: radius must be >= 0");
  }
  return std::sinh(r);
}

Point h1_embedding(double t) { return Point{std::sinh(t)}; }

}  // namespace hypgeo
