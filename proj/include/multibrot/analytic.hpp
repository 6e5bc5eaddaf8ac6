// Closed-form characterizations: real-axis intervals of M^p, the Hyperbrot
// square, the Perplexbrot octahedron and the Hausdorff distance to the limit
// shapes.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "multibrot/multicomplex.hpp"

namespace multibrot {

inline constexpr int max_degree = 64;

struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  constexpr bool contains(double c) const { return lo <= c && c <= hi; }
  constexpr double width() const { return hi - lo; }
};

/// Center abscissa t and full diagonal l of the order-p Hyperbrot square.
struct SquareParams {
  double t = 0.0;
  double l = 0.0;
  constexpr double half_diagonal() const { return 0.5 * l; }
};

enum class LimitKind { square, octahedron };

/// Limit of H^p (square) or P^p (octahedron): an L1 ball of unit half-diagonal
/// centered at the origin.
struct LimitShape {
  LimitKind kind = LimitKind::square;
  double half_diagonal = 1.0;
};

namespace detail {
inline void check_degree(int p) {
  if (p < 2 || p > max_degree)
    throw std::invalid_argument("degree p must be in [2, " + std::to_string(max_degree) + "], got " +
                                std::to_string(p));
}
inline void check_even_degree(int p) {
  check_degree(p);
  if (p % 2 != 0) throw std::invalid_argument("degree p must be even, got " + std::to_string(p));
}
}  // namespace detail

/// (p - 1) / p^{p/(p-1)}: right endpoint of M^p on the real axis.
inline double parabolic_endpoint(int p) {
  const double q = static_cast<double>(p);
  return (q - 1.0) / std::pow(q, q / (q - 1.0));
}

inline RealInterval real_interval(int p) {
  detail::check_degree(p);
  const double hi = parabolic_endpoint(p);
  if (p % 2 == 0) return {-std::pow(2.0, 1.0 / (p - 1.0)), hi};
  return {-hi, hi};
}

inline SquareParams square_params(int p) {
  detail::check_even_degree(p);
  const double q = static_cast<double>(p);
  const double root = std::pow(2.0 * q, 1.0 / (q - 1.0));
  const double scale = std::pow(q, q / (q - 1.0));
  return {(-q * (root - 1.0) - 1.0) / (2.0 * scale), (q * (root + 1.0) - 1.0) / scale};
}

/// |x - t_p| + |y| - l_p/2: negative inside the square, zero on its boundary.
inline double hyperbrot_l1_excess(Hyperbolic c, int p) {
  const SquareParams s = square_params(p);
  return std::abs(c.x - s.t) + std::abs(c.y) - s.half_diagonal();
}

inline bool hyperbrot_contains(Hyperbolic c, int p) {
  const SquareParams s = square_params(p);
  return std::abs(c.x - s.t) + std::abs(c.y) <= s.half_diagonal();
}

inline double perplexbrot_l1_excess(double x, double y, double z, int p) {
  const SquareParams s = square_params(p);
  return std::abs(x - s.t) + std::abs(y) + std::abs(z) - s.half_diagonal();
}

inline bool perplexbrot_contains(double x, double y, double z, int p) {
  const SquareParams s = square_params(p);
  return std::abs(x - s.t) + std::abs(y) + std::abs(z) <= s.half_diagonal();
}

/// Edge length of the Perplexbrot octahedron, sqrt(2)/2 * l_p.
inline double octahedron_edge(int p) { return std::sqrt(2.0) / 2.0 * square_params(p).l; }

/// A 2D L1 ball {(x, w) : |x - center| + |w| <= half_diagonal}.
struct L1Disk {
  double center = 0.0;
  double half_diagonal = 0.0;
  bool contains(double x, double w) const { return std::abs(x - center) + std::abs(w) <= half_diagonal; }
};

/// The section (H^p - y j1) ∩ (H^p + y j1) placed at height y along j2, or
/// nothing when |y| > l_p/2.
inline std::optional<L1Disk> perplexbrot_slab(double y, int p) {
  const SquareParams s = square_params(p);
  const double r = s.half_diagonal() - std::abs(y);
  if (r < 0.0) return std::nullopt;
  return L1Disk{s.t, r};
}

/// max{|(t_p + l_p/2) - 1|, |(t_p - l_p/2) + 1|}: distance from the order-p
/// set to its limit shape.  The octahedron case has the same corner formula.
inline double hausdorff_analytic(int p, LimitKind /*kind*/ = LimitKind::square) {
  const SquareParams s = square_params(p);
  return std::max(std::abs((s.t + s.half_diagonal()) - 1.0), std::abs((s.t - s.half_diagonal()) + 1.0));
}

}  // namespace multibrot
