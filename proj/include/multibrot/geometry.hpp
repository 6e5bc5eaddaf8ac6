// Membership rasters and voxel grids, discrete Hausdorff distance, the
// Perplexbrot octahedron mesh and iterative-versus-closed-form agreement.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multibrot/analytic.hpp"
#include "multibrot/dynamics.hpp"
#include "multibrot/parallel.hpp"

namespace multibrot {

template <std::size_t N>
using Point = std::array<double, N>;

using PointSet2D = std::vector<Point<2>>;
using PointSet3D = std::vector<Point<3>>;

/// One sampled axis: `n` cells over [lo, hi], sampled at cell centers.
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;

  double step() const { return (hi - lo) / n; }
  double center(int i) const { return lo + (i + 0.5) * step(); }
  friend constexpr bool operator==(const Axis&, const Axis&) = default;
};

/// Axis-aligned sampling domain in N dimensions (x-fastest cell order).
template <std::size_t N>
struct Domain {
  std::array<Axis, N> axes{};

  void validate() const {
    for (const Axis& a : axes) {
      if (!(a.lo < a.hi)) throw std::invalid_argument("domain axis requires lo < hi");
      if (a.n < 2) throw std::invalid_argument("domain axis resolution must be >= 2");
    }
  }

  std::size_t cell_count() const {
    std::size_t total = 1;
    for (const Axis& a : axes) total *= static_cast<std::size_t>(a.n);
    return total;
  }

  Point<N> center(std::size_t index) const {
    Point<N> p{};
    for (std::size_t d = 0; d < N; ++d) {
      const auto n = static_cast<std::size_t>(axes[d].n);
      p[d] = axes[d].center(static_cast<int>(index % n));
      index /= n;
    }
    return p;
  }

  double cell_volume() const {
    double v = 1.0;
    for (const Axis& a : axes) v *= a.step();
    return v;
  }

  friend constexpr bool operator==(const Domain&, const Domain&) = default;
};

using Window2D = Domain<2>;
using Box3D = Domain<3>;

inline Window2D make_window(double x0, double x1, double y0, double y1, int nx, int ny) {
  Window2D w{{Axis{x0, x1, nx}, Axis{y0, y1, ny}}};
  w.validate();
  return w;
}

inline Box3D make_box(double x0, double x1, double y0, double y1, double z0, double z1, int nx, int ny, int nz) {
  Box3D b{{Axis{x0, x1, nx}, Axis{y0, y1, ny}, Axis{z0, z1, nz}}};
  b.validate();
  return b;
}

/// Boolean membership field, one byte per cell (1 = member).  Bytes rather
/// than vector<bool> so workers can write disjoint ranges concurrently.
template <std::size_t N>
struct MembershipGrid {
  Domain<N> domain;
  EscapeParams params;
  std::vector<std::uint8_t> cells;

  std::size_t size() const { return cells.size(); }
  bool member(std::size_t index) const { return cells[index] != 0; }
  std::size_t member_count() const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
  }
};

using RasterGrid = MembershipGrid<2>;
using VoxelGrid = MembershipGrid<3>;

/// Evaluates pred(Point<N>) at every cell center.
template <std::size_t N, class Predicate>
MembershipGrid<N> sample_grid(const Domain<N>& domain, const EscapeParams& params, Predicate&& pred,
                              unsigned threads = 0) {
  domain.validate();
  MembershipGrid<N> grid{domain, params, std::vector<std::uint8_t>(domain.cell_count(), 0)};
  parallel_for(grid.cells.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) grid.cells[i] = pred(domain.center(i)) ? 1 : 0;
  });
  return grid;
}

inline RasterGrid raster_multibrot(const Window2D& w, const EscapeParams& params, unsigned threads = 0) {
  params.validate();
  return sample_grid(
      w, params, [&](const Point<2>& c) { return is_member(Complex{c[0], c[1]}, params); }, threads);
}

inline RasterGrid raster_hyperbrot(const Window2D& w, const EscapeParams& params, unsigned threads = 0) {
  params.validate();
  return sample_grid(
      w, params, [&](const Point<2>& c) { return hyperbolic_member_via_split(Hyperbolic{c[0], c[1]}, params); },
      threads);
}

inline VoxelGrid voxelize_perplexbrot(const Box3D& b, const EscapeParams& params, unsigned threads = 0) {
  params.validate();
  return sample_grid(
      b, params, [&](const Point<3>& c) { return perplexbrot_member(c[0], c[1], c[2], params); }, threads);
}

// ---------------------------------------------------------------------------
// Hausdorff distance between finite point sets.
// ---------------------------------------------------------------------------

template <std::size_t N>
double euclidean_distance(const Point<N>& a, const Point<N>& b) {
  double s = 0.0;
  for (std::size_t d = 0; d < N; ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(s);
}

/// d(A, B) = max over a in A of min over b in B of |a - b|.  O(|A| |B|).
template <std::size_t N>
double directed_hausdorff(std::span<const Point<N>> a, std::span<const Point<N>> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff distance needs non-empty point sets");
  double worst = 0.0;
  for (const Point<N>& x : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Point<N>& y : b) {
      double s = 0.0;
      for (std::size_t d = 0; d < N; ++d) s += (x[d] - y[d]) * (x[d] - y[d]);
      nearest = std::min(nearest, s);
      if (nearest <= worst * worst) break;  // cannot raise the maximum
    }
    worst = std::max(worst, std::sqrt(nearest));
  }
  return worst;
}

/// h(A, B) = max{d(A, B), d(B, A)}, brute force.
template <std::size_t N>
double discrete_hausdorff(std::span<const Point<N>> a, std::span<const Point<N>> b) {
  return std::max(directed_hausdorff<N>(a, b), directed_hausdorff<N>(b, a));
}

template <std::size_t N>
double discrete_hausdorff(const std::vector<Point<N>>& a, const std::vector<Point<N>>& b) {
  return discrete_hausdorff<N>(std::span<const Point<N>>(a), std::span<const Point<N>>(b));
}

/// Points on the boundary of {|x - cx| + |y| <= r}: every edge is split into
/// equal segments no longer than `spacing`; the four vertices are included.
inline PointSet2D l1_circle_samples(double cx, double r, double spacing) {
  if (!(r > 0.0) || !(spacing > 0.0)) throw std::invalid_argument("l1_circle_samples: r and spacing must be > 0");
  const double edge = std::sqrt(2.0) * r;
  const int segments = std::max(1, static_cast<int>(std::ceil(edge / spacing)));
  const std::array<Point<2>, 4> corners{{{cx + r, 0.0}, {cx, r}, {cx - r, 0.0}, {cx, -r}}};
  PointSet2D out;
  out.reserve(static_cast<std::size_t>(4 * segments));
  for (int e = 0; e < 4; ++e) {
    const Point<2>& a = corners[e];
    const Point<2>& b = corners[(e + 1) % 4];
    for (int k = 0; k < segments; ++k) {
      const double s = static_cast<double>(k) / segments;
      out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
    }
  }
  return out;
}

/// Spacing actually produced by l1_circle_samples.
inline double l1_circle_spacing(double r, double spacing) {
  const double edge = std::sqrt(2.0) * r;
  return edge / std::max(1, static_cast<int>(std::ceil(edge / spacing)));
}

// ---------------------------------------------------------------------------
// Octahedron mesh.
// ---------------------------------------------------------------------------

struct OctahedronMesh {
  std::array<Point<3>, 6> vertices{};
  /// Zero-based, counter-clockwise seen from outside.
  std::array<std::array<int, 3>, 8> faces{};

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& f : faces)
      for (int k = 0; k < 3; ++k) {
        const int a = f[k], b = f[(k + 1) % 3];
        out.emplace_back(std::min(a, b), std::max(a, b));
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// Regular octahedron {|x - t| + |y| + |z| <= l/2}.
inline OctahedronMesh octahedron_mesh(double t, double l) {
  if (!(l > 0.0)) throw std::invalid_argument("octahedron_mesh: l must be > 0");
  const double r = 0.5 * l;
  OctahedronMesh m;
  m.vertices = {{{t + r, 0, 0}, {t - r, 0, 0}, {t, r, 0}, {t, -r, 0}, {t, 0, r}, {t, 0, -r}}};
  m.faces = {{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}}};
  return m;
}

/// Surface points of {|x - cx| + |y| + |z| <= r}: each face sampled on a
/// barycentric lattice with `subdivisions` steps per edge.
inline PointSet3D octahedron_surface_samples(double cx, double r, int subdivisions) {
  if (subdivisions < 1) throw std::invalid_argument("octahedron_surface_samples: subdivisions must be >= 1");
  const OctahedronMesh mesh = octahedron_mesh(cx, 2.0 * r);
  PointSet3D out;
  for (const auto& f : mesh.faces) {
    const Point<3>& a = mesh.vertices[f[0]];
    const Point<3>& b = mesh.vertices[f[1]];
    const Point<3>& c = mesh.vertices[f[2]];
    for (int i = 0; i <= subdivisions; ++i)
      for (int j = 0; i + j <= subdivisions; ++j) {
        const double u = static_cast<double>(i) / subdivisions;
        const double v = static_cast<double>(j) / subdivisions;
        const double w = 1.0 - u - v;
        out.push_back({w * a[0] + u * b[0] + v * c[0], w * a[1] + u * b[1] + v * c[1], w * a[2] + u * b[2] + v * c[2]});
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Agreement between an iterative grid and a closed-form membership test.
// ---------------------------------------------------------------------------

struct AgreementReport {
  /// Upper edges of the disagreement bins, by |L1 distance| to the boundary.
  static constexpr std::array<double, 4> band_edges{1e-6, 1e-3, 1e-2, std::numeric_limits<double>::infinity()};

  std::size_t cells = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t iterative_members = 0;
  std::size_t analytic_members = 0;
  /// Largest |boundary distance| over disagreeing cells (0 when none).
  double max_band = 0.0;
  std::array<std::size_t, 4> band_histogram{};

  double agreement_fraction() const { return cells == 0 ? 1.0 : static_cast<double>(agree) / cells; }
};

/// `boundary_distance` returns the signed L1 excess of a point over the
/// closed-form set (<= 0 inside).
template <std::size_t N, class Distance>
AgreementReport agreement_report(const MembershipGrid<N>& iterative, const MembershipGrid<N>& analytic,
                                 Distance&& boundary_distance) {
  if (!(iterative.domain == analytic.domain) || iterative.cells.size() != analytic.cells.size())
    throw std::invalid_argument("agreement_report: grids have mismatched dimensions");
  AgreementReport r;
  r.cells = iterative.cells.size();
  for (std::size_t i = 0; i < r.cells; ++i) {
    const bool a = iterative.member(i);
    const bool b = analytic.member(i);
    r.iterative_members += a;
    r.analytic_members += b;
    if (a == b) {
      ++r.agree;
      continue;
    }
    ++r.disagree;
    const double d = std::abs(boundary_distance(iterative.domain.center(i)));
    r.max_band = std::max(r.max_band, d);
    std::size_t bin = 0;
    while (d > AgreementReport::band_edges[bin]) ++bin;
    ++r.band_histogram[bin];
  }
  return r;
}

template <std::size_t N, class Membership, class Distance>
AgreementReport agreement_report_against(const MembershipGrid<N>& iterative, Membership&& analytic_test,
                                         Distance&& boundary_distance, unsigned threads = 0) {
  const MembershipGrid<N> analytic = sample_grid(iterative.domain, iterative.params, analytic_test, threads);
  return agreement_report(iterative, analytic, boundary_distance);
}

}  // namespace multibrot
