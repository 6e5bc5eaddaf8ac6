// Escape-time iteration of Q_{p,c}(z) = z^p + c over R, C, D, M(2) and M(3),
// plus the real-axis verification devices (bisection and fixed-point test).
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multibrot/analytic.hpp"
#include "multibrot/multicomplex.hpp"

namespace multibrot {

inline constexpr int render_max_iter = 1000;
inline constexpr int verify_max_iter = 100000;

struct EscapeParams {
  int p = 2;
  int max_iter = render_max_iter;
  /// When unset, each component uses max(2^{1/(p-1)}, |c_k|) + 1e-9.
  std::optional<double> escape_radius;

  void validate() const {
    if (p < 2) throw std::invalid_argument("EscapeParams: p must be >= 2, got " + std::to_string(p));
    if (max_iter < 1) throw std::invalid_argument("EscapeParams: max_iter must be >= 1");
    if (escape_radius && !(*escape_radius > 1.0))
      throw std::invalid_argument("EscapeParams: escape_radius must be > 1");
  }

  /// Radius beyond which |z| forces divergence for a parameter of modulus c_modulus.
  double radius_for(double c_modulus) const {
    if (escape_radius) return *escape_radius;
    return std::max(std::pow(2.0, 1.0 / (p - 1.0)), c_modulus) + 1e-9;
  }
};

struct OrbitResult {
  bool escaped = false;
  int iterations_used = 0;
  /// Largest component modulus at the last step (+inf on overflow).
  double final_norm = 0.0;
};

// z^p + c in each algebra.
inline double step(double z, double c, int p) { return ipow(z, p) + c; }
inline Complex step(Complex z, Complex c, int p) { return pow(z, p) + c; }
inline Hyperbolic step(Hyperbolic z, Hyperbolic c, int p) { return hyp_pow(z, p) + c; }
inline Bicomplex step(const Bicomplex& z, const Bicomplex& c, int p) { return pow(z, p) + c; }
inline Tricomplex step(const Tricomplex& z, const Tricomplex& c, int p) { return tri_pow(z, p) + c; }

// Moduli of the idempotent complex components.  An orbit is bounded iff every
// component orbit is bounded, and each component escapes against its own radius.
inline std::array<double, 1> component_moduli(double z) { return {std::abs(z)}; }
inline std::array<double, 1> component_moduli(Complex z) { return {modulus(z)}; }
inline std::array<double, 2> component_moduli(const Bicomplex& z) {
  const BicomplexSplit s = bicomplex_split(z);
  return {modulus(s.w1), modulus(s.w2)};
}
inline std::array<double, 4> component_moduli(const Tricomplex& z) {
  const auto w = complex_components(z);
  return {modulus(w[0]), modulus(w[1]), modulus(w[2]), modulus(w[3])};
}

/// Orbit of 0 under z -> z^p + c with the per-component escape policy.
/// NaN or overflow counts as escape.
template <class T>
OrbitResult run_orbit(const T& c, const EscapeParams& params) {
  params.validate();
  auto radii = component_moduli(c);
  for (double& r : radii) r = params.radius_for(r);

  T z{};
  double largest = 0.0;
  for (int n = 1; n <= params.max_iter; ++n) {
    z = step(z, c, params.p);
    const auto moduli = component_moduli(z);
    largest = 0.0;
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      // Written so that NaN fails the bounded test.
      if (!(moduli[k] <= radii[k])) {
        const double norm = std::isfinite(moduli[k]) ? moduli[k] : std::numeric_limits<double>::infinity();
        return {true, n, norm};
      }
      largest = std::max(largest, moduli[k]);
    }
  }
  return {false, params.max_iter, largest};
}

/// Direct iteration in D with the Euclidean modulus.  The radius sqrt(2) times
/// the larger split-coordinate radius guarantees one split orbit has escaped.
inline OrbitResult run_orbit(Hyperbolic c, const EscapeParams& params) {
  params.validate();
  const HyperbolicSplit cs = hyp_split(c);
  const double radius =
      std::sqrt(2.0) * std::max(params.radius_for(std::abs(cs.minus)), params.radius_for(std::abs(cs.plus)));
  Hyperbolic z{};
  double norm = 0.0;
  for (int n = 1; n <= params.max_iter; ++n) {
    z = step(z, c, params.p);
    norm = modulus(z);
    if (!(norm <= radius)) return {true, n, std::isfinite(norm) ? norm : std::numeric_limits<double>::infinity()};
  }
  return {false, params.max_iter, norm};
}

template <class T>
bool is_member(const T& c, const EscapeParams& params) {
  return !run_orbit(c, params).escaped;
}

/// Bounded iff the real orbits at x - y and x + y are both bounded.
inline bool hyperbolic_member_via_split(Hyperbolic c, const EscapeParams& params) {
  const HyperbolicSplit s = hyp_split(c);
  return is_member(s.minus, params) && is_member(s.plus, params);
}

inline constexpr std::array<Unit, 3> perplexbrot_units{Unit::one, Unit::j1, Unit::j2};

/// Membership of c = x + y j1 + z j2 in the tricomplex Multibrot set.
inline bool perplexbrot_member(double x, double y, double z, const EscapeParams& params) {
  return is_member(embed_slice(x, y, z, perplexbrot_units), params);
}

/// First `steps` iterates Q^1(0), ..., Q^steps(0) of the real orbit.
inline std::vector<double> real_orbit(double c, int p, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  double z = 0.0;
  for (int n = 0; n < steps; ++n) {
    z = step(z, c, p);
    out.push_back(z);
  }
  return out;
}

enum class Side { left, right };

inline constexpr double bisection_width = 1e-9;

/// Bisects the real-axis membership boundary inside [bracket.first, bracket.second].
/// Exactly one end of the bracket must be a member.
inline double real_endpoint_bisection(int p, const EscapeParams& params, std::pair<double, double> bracket) {
  EscapeParams q = params;
  q.p = p;
  auto [a, b] = bracket;
  const bool a_in = is_member(a, q);
  const bool b_in = is_member(b, q);
  if (a_in == b_in)
    throw std::invalid_argument(std::string("real_endpoint_bisection: bracket ends are both ") +
                                (a_in ? "members" : "non-members"));
  while (std::abs(b - a) >= bisection_width) {
    const double mid = 0.5 * (a + b);
    if (is_member(mid, q) == a_in)
      a = mid;
    else
      b = mid;
  }
  return 0.5 * (a + b);
}

/// Bracket seeded at the closed-form endpoint +/- 0.5; the decision itself
/// comes from the iteration oracle only.
inline double real_endpoint_bisection(int p, Side side, const EscapeParams& params) {
  const RealInterval guess = real_interval(p);
  const double centre = side == Side::left ? guess.lo : guess.hi;
  return real_endpoint_bisection(p, params, {centre - 0.5, centre + 0.5});
}

/// Even-p membership on the real axis without iteration: for c >= 0 the sign
/// of min g_c with g_c(x) = x^p - x + c, for c < 0 the bound c >= -2^{1/(p-1)}.
inline bool fixed_point_member_test(double c, int p) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument("fixed_point_member_test: p must be even and >= 2, got " + std::to_string(p));
  if (c >= 0.0) {
    const double critical = std::pow(1.0 / p, 1.0 / (p - 1.0));
    return ipow(critical, p) - critical + c <= 0.0;
  }
  return c >= -std::pow(2.0, 1.0 / (p - 1.0));
}

}  // namespace multibrot
