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

#include "hypgeo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypgeo/geodesy.hpp"
#include "hypgeo/homogeneity.hpp"
#include "hypgeo/isometry.hpp"

namespace hypgeo::cli {

namespace {

using json = nlohmann::json;

struct Flags {
  std::string metric = "hyperbolic";
  std::optional<int> dim;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::optional<int> samples;
  bool exact = false;
};

// Rounds to the printed precision so that the JSON text carries exactly the
// digits a reader sees and re-serializes byte for byte.
double rounded(double v, const Flags& flags) {
  return std::strtod(format_number(v, flags.exact).c_str(), nullptr);
}

json number_array(const Vector& v, const Flags& flags) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rounded(v[i], flags));
  return arr;
}

json matrix_rows(const Matrix& m, const Flags& flags) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows.push_back(number_array(Vector(m.row(i).transpose()), flags));
  }
  return rows;
}

Vector to_vector(const std::vector<double>& values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return v;
}

Point parse_point(const std::string& text) { return Point(to_vector(parse_list(text))); }

Point json_point(const json& j) {
  if (!j.is_array()) throw ParameterError("expected an array of numbers");
  return Point(to_vector(j.get<std::vector<double>>()));
}

int positive_samples(const Flags& flags, int fallback, int minimum) {
  const int k = flags.samples.value_or(fallback);
  if (k < minimum) {
    throw ParameterError("--samples must be >= " + std::to_string(minimum));
  }
  return k;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_dist(const Flags& flags, const std::string& xs, const std::string& ys,
             std::ostream& out) {
  double d = 0.0;
  if (flags.metric == "hyperbolic") {
    d = hyperbolic_distance(parse_point(xs), parse_point(ys));
  } else if (flags.metric == "euclidean") {
    d = euclidean_distance(parse_point(xs), parse_point(ys));
  } else if (flags.metric == "sphere") {
    d = sphere_distance(SpherePoint(to_vector(parse_list(xs))),
                        SpherePoint(to_vector(parse_list(ys))));
  } else if (flags.metric == "projective") {
    d = projective_distance(ProjPoint(SpherePoint(to_vector(parse_list(xs)))),
                            ProjPoint(SpherePoint(to_vector(parse_list(ys)))));
  } else {
    throw ParameterError("unknown metric '" + flags.metric + "'");
  }
  out << format_number(d, flags.exact) << '\n';
  return kSuccess;
}

int cmd_geodesic(const Flags& flags, const std::string& as, const std::string& bs,
                 std::ostream& out) {
  const Point a = parse_point(as);
  const Point b = parse_point(bs);
  const int samples = positive_samples(flags, 11, 2);
  const Geodesic line = line_through(a, b);
  const double length = hyperbolic_distance(a, b);
  const int n = a.dim();

  out << 't';
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  for (int i = 1; i <= n; ++i) out << ",p" << i;
  out << '\n';
  for (int k = 0; k < samples; ++k) {
    const double t = k + 1 == samples ? length : length * k / (samples - 1);
    const Point x = line(t);
    const Vector p = poincare_coords(x);
    out << format_number(t, flags.exact);
    for (int i = 0; i < n; ++i) out << ',' << format_number(x[i], flags.exact);
    for (int i = 0; i < n; ++i) out << ',' << format_number(p[i], flags.exact);
    out << '\n';
  }
  return kSuccess;
}

int cmd_fit(const Flags& flags, const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  const json doc = json::parse(in);
  if (!doc.contains("pairs") || !doc["pairs"].is_array()) {
    throw ParameterError("fit input needs a \"pairs\" array");
  }
  std::vector<Point> source;
  std::vector<Point> target;
  for (const json& pair : doc["pairs"]) {
    source.push_back(json_point(pair.at("source")));
    target.push_back(json_point(pair.at("target")));
  }
  FitOptions options;
  if (flags.tol) options.rel_tolerance = *flags.tol;
  const FitResult fit = fit_isometry(source, target, options);

  json result;
  result["a"] = number_array(fit.isometry.a().coords(), flags);
  result["U"] = matrix_rows(fit.isometry.u(), flags);
  result["unique"] = fit.unique;
  result["max_residual"] = rounded(fit.max_residual, flags);
  emit_json(out, result);
  return kSuccess;
}

int cmd_parallel(const Flags& flags, const std::string& as, const std::string& bs,
                 const std::string& mus_text, std::ostream& out) {
  const Point a = parse_point(as);
  const Point b = parse_point(bs);
  const std::vector<double> mus = parse_list(mus_text);
  GapScanOptions scan;
  scan.samples = positive_samples(flags, scan.samples, 2);
  if (flags.tol) scan.disjoint_threshold = *flags.tol;

  json lines = json::array();
  json gaps = json::array();
  json disjoint = json::array();
  for (double mu : mus) {
    const Geodesic g = parallel_family(a, b, mu);
    const GapScan gap = parallel_gap(a, b, mu, scan);
    json line;
    line["mu"] = rounded(mu, flags);
    line["base"] = number_array(g.base().coords(), flags);
    line["direction"] = number_array(g.direction().coords(), flags);
    lines.push_back(line);
    gaps.push_back(rounded(gap.min_gap, flags));
    disjoint.push_back(gap.disjoint);
  }
  json result;
  result["lines"] = lines;
  result["min_gaps"] = gaps;
  result["disjoint"] = disjoint;
  emit_json(out, result);
  return kSuccess;
}

int cmd_rigidity(const Flags& flags, const std::string& cs_text, const std::string& ts_text,
                 std::ostream& out) {
  const std::vector<double> cs = parse_list(cs_text);
  const std::vector<double> ts = parse_list(ts_text);
  for (double t : ts) {
    if (!(t >= 1.0)) throw DomainError("rigidity: every t must be >= 1");
  }
  const double threshold = flags.tol.value_or(1e-10);

  json rows = json::array();
  for (double c : cs) {
    json residuals = json::array();
    double worst = 0.0;
    for (double t : ts) {
      const double r = dilation_residual(c, t);
      worst = std::max(worst, r);
      residuals.push_back(rounded(r, flags));
    }
    json row;
    row["c"] = rounded(c, flags);
    row["residuals"] = residuals;
    row["max_residual"] = rounded(worst, flags);
    row["isometry_compatible"] = worst <= threshold;
    rows.push_back(row);
  }
  json result;
  result["t"] = json::array();
  for (double t : ts) result["t"].push_back(rounded(t, flags));
  result["rows"] = rows;
  emit_json(out, result);
  return kSuccess;
}

OmegaGauge builtin_gauge(const std::string& name, GaugeDomain domain) {
  if (name == "identity") return OmegaGauge::identity(domain);
  if (name == "sqrt") return OmegaGauge::sqrt(domain);
  if (name == "square") return OmegaGauge::square(domain);
  if (name == "saturating") return OmegaGauge::saturating(domain);
  throw ParameterError("unknown gauge '" + name + "'");
}

OmegaGauge table_gauge(const std::string& path, GaugeDomain domain) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  const json doc = json::parse(in);
  const json& knots = doc.is_object() ? doc.at("knots") : doc;
  std::vector<std::pair<double, double>> table;
  for (const json& k : knots) {
    if (!k.is_array() || k.size() != 2) throw ParameterError("table knots are [t, w] pairs");
    table.emplace_back(k[0].get<double>(), k[1].get<double>());
  }
  return OmegaGauge::piecewise_linear(std::move(table), domain);
}

int cmd_omega(const Flags& flags, const std::string& name, const std::string& table,
              const std::string& domain_text, double cap, std::ostream& out) {
  GaugeDomain domain;
  if (domain_text == "ray") {
    domain = GaugeDomain::Ray;
  } else if (domain_text == "unit") {
    domain = GaugeDomain::Unit;
  } else {
    throw ParameterError("--domain must be 'unit' or 'ray'");
  }
  if (name.empty() == table.empty()) {
    throw ParameterError("give exactly one of a gauge name or --table");
  }
  const OmegaGauge w = table.empty() ? builtin_gauge(name, domain) : table_gauge(table, domain);
  GaugeGridOptions grid;
  grid.grid_size = positive_samples(flags, grid.grid_size, 2);
  grid.ray_cap = cap;
  const GaugeReport report = omega_validate(w, grid);

  json result;
  result["gauge"] = w.name();
  result["domain"] = domain_text;
  result["grid_size"] = grid.grid_size;
  result["pass"] = report.pass;
  if (report.violation) {
    const GaugeViolation& v = *report.violation;
    json vj;
    vj["kind"] = to_string(v.kind);
    vj["x"] = rounded(v.x, flags);
    vj["y"] = rounded(v.y, flags);
    vj["w_x"] = rounded(v.wx, flags);
    vj["w_y"] = rounded(v.wy, flags);
    if (v.kind == GaugeViolation::Kind::NotSubadditive) vj["w_x_plus_y"] = rounded(v.wxy, flags);
    result["violation"] = vj;
  } else {
    result["violation"] = nullptr;
  }
  emit_json(out, result);
  return kSuccess;
}

int cmd_counterexample(const Flags& flags, std::ostream& out) {
  const int n = flags.dim.value_or(2);
  const ProjectiveCounterexample ce = projective_counterexample(n);
  json result;
  result["n"] = n;
  result["x"] = number_array(ce.x.coords(), flags);
  result["y"] = number_array(ce.y.coords(), flags);
  result["z1"] = number_array(ce.z1.coords(), flags);
  result["z2"] = number_array(ce.z2.coords(), flags);
  result["inner_products"] = {{"x_z1", rounded(ce.xz1, flags)},
                              {"x_z2", rounded(ce.xz2, flags)},
                              {"y_z1", rounded(ce.yz1, flags)},
                              {"y_z2", rounded(ce.yz2, flags)}};
  result["sign_pattern_margin"] = rounded(ce.sign_pattern_margin, flags);
  result["verified"] = ce.verified;
  emit_json(out, result);
  return kSuccess;
}

int cmd_sphere_radius(const Flags& flags, double r, std::ostream& out) {
  const double radius = sphere_euclidean_radius(r);
  const int dim = flags.dim.value_or(2);
  if (dim < 1) throw ParameterError("--dim must be >= 1");
  const int samples = positive_samples(flags, 1000, 0);

  std::mt19937_64 rng(flags.seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  const Point origin = Point::zero(dim);
  for (int k = 0; k < samples; ++k) {
    Vector u(dim);
    do {
      for (int i = 0; i < dim; ++i) u[i] = normal(rng);
    } while (u.norm() == 0.0);
    const Point x(Vector(radius * u / u.norm()));
    worst = std::max(worst, std::abs(hyperbolic_distance(x, origin) - r));
  }
  json result;
  result["hyperbolic_radius"] = rounded(r, flags);
  result["euclidean_radius"] = rounded(radius, flags);
  result["dim"] = dim;
  result["samples"] = samples;
  result["seed"] = flags.seed;
  result["max_sample_error"] = rounded(worst, flags);
  emit_json(out, result);
  return kSuccess;
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string_view::npos) return std::string_view{};
    const auto e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParameterError("expected a bracketed list like [1,2], got '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<double> values;
  if (body.empty()) return values;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string item(trim(body.substr(start, comma - start)));
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw ParameterError("bad number '" + item + "' in '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string format_number(double value, bool exact) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, exact ? "%.17g" : "%.15g", value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic geometry toolkit: distances, geodesics, isometry fitting, "
               "parallel lines, dilation rigidity and gauge checks."};
  app.name("hypgeo");
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_option("--metric", flags.metric, "hyperbolic|euclidean|sphere|projective")
      ->capture_default_str();
  app.add_option("--dim", flags.dim, "Dimension (counterexample, sphere-radius)");
  app.add_option("--tol", flags.tol, "Tolerance override for the chosen subcommand");
  app.add_option("--seed", flags.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--samples", flags.samples, "Sample or grid count");
  app.add_flag("--exact", flags.exact, "Print 17 significant digits instead of 15");

  std::string x, y;
  auto* dist = app.add_subcommand("dist", "Distance between two points");
  dist->add_option("x", x)->required();
  dist->add_option("y", y)->required();

  std::string a, b;
  auto* geodesic = app.add_subcommand("geodesic", "CSV samples of the segment from a to b");
  geodesic->add_option("a", a)->required();
  geodesic->add_option("b", b)->required();

  std::string fit_path;
  auto* fit = app.add_subcommand("fit", "Fit an isometry to point pairs from a JSON file");
  fit->add_option("pairs", fit_path, "JSON file {\"pairs\": [{\"source\": [...], "
                                     "\"target\": [...]}, ...]}")
      ->required();

  std::string pa, pb, mus = "[1.5,2,3,-1.5,-2,-3]";
  auto* parallel = app.add_subcommand(
      "parallel", "Lines through 0 missing {sinh(t) a + cosh(t) b}, one per mu");
  parallel->add_option("a", pa)->required();
  parallel->add_option("b", pb)->required();
  parallel->add_option("--mus", mus, "Bracketed list of mu values, |mu| > 1")
      ->capture_default_str();

  std::string cs = "[0.5,0.9,1,1.1,2]", ts = "[1.01,1.1,2,5,10]";
  auto* rigidity = app.add_subcommand("rigidity", "Dilation residual table");
  rigidity->add_option("--c", cs, "Bracketed list of dilation constants")->capture_default_str();
  rigidity->add_option("--t", ts, "Bracketed list of t >= 1")->capture_default_str();

  std::string gauge_name, table_path, domain = "ray";
  double cap = 100.0;
  auto* omega = app.add_subcommand("omega", "Validate a gauge on a sample grid");
  omega->add_option("gauge", gauge_name, "identity|sqrt|square|saturating");
  omega->add_option("--table", table_path, "JSON file of [t, w] knots");
  omega->add_option("--domain", domain, "unit|ray")->capture_default_str();
  omega->add_option("--cap", cap, "Upper end of the sampled ray")->capture_default_str();

  app.add_subcommand("counterexample", "Projective three-point counterexample");

  double radius = 0.0;
  auto* sphere = app.add_subcommand("sphere-radius",
                                    "Euclidean radius sinh(r) of the hyperbolic sphere about 0");
  sphere->add_option("r", radius)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "hypgeo: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*dist) return cmd_dist(flags, x, y, out);
    if (*geodesic) return cmd_geodesic(flags, a, b, out);
    if (*fit) return cmd_fit(flags, fit_path, out);
    if (*parallel) return cmd_parallel(flags, pa, pb, mus, out);
    if (*rigidity) return cmd_rigidity(flags, cs, ts, out);
    if (*omega) return cmd_omega(flags, gauge_name, table_path, domain, cap, out);
    if (*sphere) return cmd_sphere_radius(flags, radius, out);
    return cmd_counterexample(flags, out);
  } catch (const NotPartialIsometryError& e) {
    err << "hypgeo: " << e.what() << '\n';
    return kHypothesisViolation;
  } catch (const Error& e) {
    err << "hypgeo: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "hypgeo: bad JSON input: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace hypgeo::cli
