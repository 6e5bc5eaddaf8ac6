// Verification suites: iterate the escape-time oracle and compare it with the
// closed forms.  Each suite returns a flat list of named checks.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multibrot/analytic.hpp"
#include "multibrot/dynamics.hpp"
#include "multibrot/geometry.hpp"
#include "multibrot/multicomplex.hpp"

namespace multibrot {

struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string name, double value, double limit, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), value, limit, ok, std::move(detail)});
  }
  /// Passes when value <= limit.
  void add_at_most(std::string name, double value, double limit, std::string detail = {}) {
    add(std::move(name), value, limit, value <= limit, std::move(detail));
  }
};

struct VerifyConfig {
  std::optional<int> max_iter;  // suite default when unset
  std::optional<int> res;       // grid resolution per axis
  unsigned threads = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"interval", "square", "octahedron", "hausdorff", "algebra"};
  return names;
}

namespace detail {

inline double relative_error(const Tricomplex& a, const Tricomplex& b, double scale_floor) {
  const double scale = std::max({norm3(a), norm3(b), scale_floor});
  return scale == 0.0 ? 0.0 : norm3(a - b) / scale;
}

inline std::string p_label(int p) { return "p=" + std::to_string(p); }

}  // namespace detail

/// Product of two units built only from i1, i2, i3 (each squares to -1, all
/// commute).  Units are tracked as exponent bitmasks over (i1, i2, i3).
inline SignedUnit unit_product_from_generators(Unit a, Unit b) {
  // Bitmask of each unit in the order 1, i1, i2, i3, i4 = i1 i2 i3, j1 = i1 i2, j2 = i1 i3, j3 = i2 i3.
  constexpr std::array<unsigned, 8> mask{0b000, 0b001, 0b010, 0b100, 0b111, 0b011, 0b101, 0b110};
  const unsigned ma = mask[static_cast<int>(a)];
  const unsigned mb = mask[static_cast<int>(b)];
  const int shared = __builtin_popcount(ma & mb);
  const unsigned product = ma ^ mb;
  int index = 0;
  while (mask[index] != product) ++index;
  return {shared % 2 == 0 ? 1 : -1, static_cast<Unit>(index)};
}

inline SuiteReport verify_interval(const VerifyConfig& cfg = {}) {
  SuiteReport r{"interval", {}};
  EscapeParams params;
  params.max_iter = cfg.max_iter.value_or(verify_max_iter);
  for (int p = 2; p <= 8; ++p) {
    params.p = p;
    const RealInterval exact = real_interval(p);
    const bool even = p % 2 == 0;
    const double left = real_endpoint_bisection(p, Side::left, params);
    const double right = real_endpoint_bisection(p, Side::right, params);
    r.add_at_most("left endpoint " + detail::p_label(p), std::abs(left - exact.lo), even ? 1e-6 : 5e-3,
                  "bisection=" + std::to_string(left) + " formula=" + std::to_string(exact.lo));
    r.add_at_most("right endpoint " + detail::p_label(p), std::abs(right - exact.hi), 5e-3,
                  "bisection=" + std::to_string(right) + " formula=" + std::to_string(exact.hi));
  }
  return r;
}

inline SuiteReport verify_square(const VerifyConfig& cfg = {}) {
  SuiteReport r{"square", {}};
  const SquareParams s2 = square_params(2);
  r.add("t_2 == -7/8", s2.t, -7.0 / 8.0, s2.t == -7.0 / 8.0);
  r.add("l_2 == 9/4", s2.l, 9.0 / 4.0, s2.l == 9.0 / 4.0);
  const double side = s2.l * std::sqrt(2.0) / 2.0;
  r.add("side_2 == 9/8 sqrt(2)", side, 9.0 / 8.0 * std::sqrt(2.0), side == 9.0 / 8.0 * std::sqrt(2.0));

  const int res = cfg.res.value_or(512);
  EscapeParams params;
  params.max_iter = cfg.max_iter.value_or(10000);
  const Window2D w = make_window(-2.0, 1.0, -1.5, 1.5, res, res);
  for (int p : {2, 4, 8}) {
    params.p = p;
    const RasterGrid grid = raster_hyperbrot(w, params, cfg.threads);
    const AgreementReport rep = agreement_report_against(
        grid, [p](const Point<2>& c) { return hyperbrot_contains({c[0], c[1]}, p); },
        [p](const Point<2>& c) { return hyperbrot_l1_excess({c[0], c[1]}, p); }, cfg.threads);
    r.add_at_most("disagreement band " + detail::p_label(p), rep.max_band, 0.01,
                  std::to_string(rep.disagree) + " of " + std::to_string(rep.cells) + " cells disagree");
    const double l = square_params(p).l;
    const double expected = l * l / 2.0 / w.cell_volume();
    const double rel = std::abs(static_cast<double>(rep.iterative_members) - expected) / expected;
    r.add_at_most("member area " + detail::p_label(p), rel, 0.02,
                  "members=" + std::to_string(rep.iterative_members) + " expected=" + std::to_string(expected));
  }
  return r;
}

inline SuiteReport verify_octahedron(const VerifyConfig& cfg = {}) {
  SuiteReport r{"octahedron", {}};
  const SquareParams s2 = square_params(2);
  const OctahedronMesh mesh = octahedron_mesh(s2.t, s2.l);
  const double edge = std::sqrt(2.0) / 2.0 * 9.0 / 4.0;
  double worst = 0.0;
  for (auto [a, b] : mesh.edges())
    worst = std::max(worst, std::abs(euclidean_distance(mesh.vertices[a], mesh.vertices[b]) - edge) / edge);
  r.add_at_most("mesh edges p=2", worst, 1e-12, std::to_string(mesh.edges().size()) + " edges");

  const int res = cfg.res.value_or(64);
  EscapeParams params;
  params.max_iter = cfg.max_iter.value_or(10000);
  const Box3D box = make_box(-2, 2, -2, 2, -2, 2, res, res, res);
  for (int p : {2, 4}) {
    params.p = p;
    const VoxelGrid grid = voxelize_perplexbrot(box, params, cfg.threads);
    const AgreementReport rep = agreement_report_against(
        grid, [p](const Point<3>& c) { return perplexbrot_contains(c[0], c[1], c[2], p); },
        [p](const Point<3>& c) { return perplexbrot_l1_excess(c[0], c[1], c[2], p); }, cfg.threads);
    r.add_at_most("disagreement band " + detail::p_label(p), rep.max_band, 0.07,
                  std::to_string(rep.disagree) + " of " + std::to_string(rep.cells) + " voxels disagree");
    const double l = square_params(p).l;
    const double expected = l * l * l / 6.0 / box.cell_volume();
    const double rel = std::abs(static_cast<double>(rep.iterative_members) - expected) / expected;
    r.add_at_most("member volume " + detail::p_label(p), rel, 0.05,
                  "members=" + std::to_string(rep.iterative_members) + " expected=" + std::to_string(expected));
  }
  return r;
}

inline SuiteReport verify_hausdorff(const VerifyConfig& /*cfg*/ = {}) {
  SuiteReport r{"hausdorff", {}};
  const double h2 = hausdorff_analytic(2);
  r.add("h(p=2) == 1", h2, 1.0, h2 == 1.0);
  double previous = h2;
  for (int p = 4; p <= max_degree; p += 2) {
    const double h = hausdorff_analytic(p);
    r.add("h(" + detail::p_label(p) + ") < h(p-2)", h, previous, h < previous);
    previous = h;
  }
  const double h64 = hausdorff_analytic(64);
  r.add("h(p=64) < 0.05", h64, 0.05, h64 < 0.05);

  constexpr double spacing = 0.005;
  const PointSet2D limit = l1_circle_samples(0.0, 1.0, spacing);
  for (int p : {2, 4, 8, 14, 20, 30}) {
    const SquareParams s = square_params(p);
    const PointSet2D boundary = l1_circle_samples(s.t, s.half_diagonal(), spacing);
    const double discrete = discrete_hausdorff(limit, boundary);
    const double step = std::max(l1_circle_spacing(1.0, spacing), l1_circle_spacing(s.half_diagonal(), spacing));
    r.add_at_most("discrete vs closed form " + detail::p_label(p), std::abs(discrete - hausdorff_analytic(p)),
                  2.0 * step, "discrete=" + std::to_string(discrete));
  }
  return r;
}

inline SuiteReport verify_algebra(const VerifyConfig& /*cfg*/ = {}) {
  SuiteReport r{"algebra", {}};

  int table_failures = 0;
  for (Unit a : all_units)
    for (Unit b : all_units) {
      const SignedUnit t = unit_product(a, b);
      const Tricomplex expected = Tricomplex::unit(t.unit, t.sign);
      if (!(t == unit_product_from_generators(a, b)) || !(tri_mul(Tricomplex::unit(a), Tricomplex::unit(b)) == expected))
        ++table_failures;
    }
  r.add("unit product table (64 entries)", table_failures, 0, table_failures == 0);

  std::mt19937_64 rng(20260214);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  auto random_tri = [&] {
    Tricomplex::Coefficients x{};
    for (double& v : x) v = coef(rng);
    return Tricomplex{x};
  };

  double worst_mul = 0.0, worst_add = 0.0, worst_pow = 0.0, worst_norm = 0.0;
  std::uniform_int_distribution<int> exponent(1, 8);
  for (int k = 0; k < 10000; ++k) {
    const Tricomplex a = random_tri();
    const Tricomplex b = random_tri();
    const IdempotentPair sa = idem_split(a);
    const IdempotentPair sb = idem_split(b);
    worst_mul = std::max(worst_mul, detail::relative_error(tri_mul(a, b), idem_join(sa * sb), norm3(a) * norm3(b)));
    worst_add = std::max(worst_add, detail::relative_error(tri_add(a, b), idem_join(sa + sb), norm3(a) + norm3(b)));
    const int m = exponent(rng);
    Tricomplex repeated = a;
    for (int i = 1; i < m; ++i) repeated = tri_mul(repeated, a);
    worst_pow = std::max(worst_pow, detail::relative_error(tri_pow(a, m), repeated, std::pow(norm3(a), m)));
    const double n8 = norm3(a), nb = norm3_bicomplex(a);
    worst_norm = std::max(worst_norm, std::abs(n8 - nb) / std::max(n8, nb));
  }
  r.add_at_most("idempotent multiplication (10^4 pairs)", worst_mul, 1e-10);
  r.add_at_most("idempotent addition (10^4 pairs)", worst_add, 1e-10);
  r.add_at_most("idempotent power m<=8 (10^4 samples)", worst_pow, 1e-10);
  r.add_at_most("norm formulas agree (10^4 samples)", worst_norm, 1e-14);

  const double eps = std::numeric_limits<double>::epsilon();
  r.add_at_most("gamma3_bar^2 == gamma3_bar", norm3(gamma3_bar * gamma3_bar - gamma3_bar), eps);
  r.add_at_most("gamma3^2 == gamma3", norm3(gamma3 * gamma3 - gamma3), eps);
  r.add_at_most("gamma3_bar * gamma3 == 0", norm3(gamma3_bar * gamma3), eps);
  return r;
}

/// Runs the named suite; returns nullopt for an unknown name.
inline std::optional<SuiteReport> run_suite(const std::string& name, const VerifyConfig& cfg = {}) {
  if (name == "interval") return verify_interval(cfg);
  if (name == "square") return verify_square(cfg);
  if (name == "octahedron") return verify_octahedron(cfg);
  if (name == "hausdorff") return verify_hausdorff(cfg);
  if (name == "algebra") return verify_algebra(cfg);
  return std::nullopt;
}

}  // namespace multibrot
