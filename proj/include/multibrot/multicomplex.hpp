// Multicomplex arithmetic: C = M(1), bicomplex M(2), tricomplex M(3) and the
// hyperbolic plane D.  Every type is a small immutable value; every operation
// is a pure function.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace multibrot {

// ---------------------------------------------------------------------------
// Complex numbers over the unit i1.
// ---------------------------------------------------------------------------
struct Complex {
  double re = 0.0;
  double im = 0.0;

  constexpr Complex() = default;
  constexpr Complex(double r, double i = 0.0) : re(r), im(i) {}

  friend constexpr Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr Complex operator-(Complex a) { return {-a.re, -a.im}; }
  friend constexpr Complex operator*(Complex a, Complex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr Complex operator*(double s, Complex a) { return {s * a.re, s * a.im}; }
  friend constexpr bool operator==(Complex, Complex) = default;

  static constexpr Complex identity() { return {1.0, 0.0}; }
};

/// Multiplication by the imaginary unit i1.
constexpr Complex times_i(Complex a) { return {-a.im, a.re}; }

inline double modulus_squared(Complex a) { return a.re * a.re + a.im * a.im; }
inline double modulus(Complex a) { return std::hypot(a.re, a.im); }
inline bool is_finite(Complex a) { return std::isfinite(a.re) && std::isfinite(a.im); }

// ---------------------------------------------------------------------------
// Hyperbolic (split-complex) numbers x + y j, j^2 = +1.
// ---------------------------------------------------------------------------
struct Hyperbolic {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return {a.x * b.x + a.y * b.y, a.x * b.y + b.x * a.y};
  }
  friend constexpr bool operator==(Hyperbolic, Hyperbolic) = default;

  static constexpr Hyperbolic identity() { return {1.0, 0.0}; }
};

/// Split coordinates: x + y j corresponds to the real pair (x - y, x + y).
struct HyperbolicSplit {
  double minus = 0.0;  // x - y
  double plus = 0.0;   // x + y
  friend constexpr bool operator==(HyperbolicSplit, HyperbolicSplit) = default;
};

constexpr HyperbolicSplit hyp_split(Hyperbolic a) { return {a.x - a.y, a.x + a.y}; }
constexpr Hyperbolic hyp_join(HyperbolicSplit s) {
  return {0.5 * (s.minus + s.plus), 0.5 * (s.plus - s.minus)};
}

inline double modulus(Hyperbolic a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Hyperbolic a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// ---------------------------------------------------------------------------
// Integer powers.
// ---------------------------------------------------------------------------

/// Binary exponentiation for any type with an associative operator* and a
/// static identity().  m must be >= 1.
template <class T>
constexpr T power_by_squaring(T base, int m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  T result = base;
  T acc = base;
  --m;
  while (m > 0) {
    if (m & 1) result = result * acc;
    m >>= 1;
    if (m > 0) acc = acc * acc;
  }
  return result;
}

constexpr double ipow(double base, int m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  double result = base;
  double acc = base;
  --m;
  while (m > 0) {
    if (m & 1) result *= acc;
    m >>= 1;
    if (m > 0) acc *= acc;
  }
  return result;
}

inline Complex pow(Complex a, int m) { return power_by_squaring(a, m); }

inline Hyperbolic hyp_mul(Hyperbolic a, Hyperbolic b) { return a * b; }

/// Powers decouple on the split coordinates: (x - y)^m and (x + y)^m.
inline Hyperbolic hyp_pow(Hyperbolic a, int m) {
  const HyperbolicSplit s = hyp_split(a);
  return hyp_join({ipow(s.minus, m), ipow(s.plus, m)});
}
inline Hyperbolic pow(Hyperbolic a, int m) { return hyp_pow(a, m); }

// ---------------------------------------------------------------------------
// Bicomplex numbers z1 + z2 i2 with z1, z2 complex in i1.
// ---------------------------------------------------------------------------
struct Bicomplex {
  Complex z1;
  Complex z2;

  friend constexpr Bicomplex operator+(Bicomplex a, Bicomplex b) { return {a.z1 + b.z1, a.z2 + b.z2}; }
  friend constexpr Bicomplex operator-(Bicomplex a, Bicomplex b) { return {a.z1 - b.z1, a.z2 - b.z2}; }
  friend constexpr Bicomplex operator-(Bicomplex a) { return {-a.z1, -a.z2}; }
  friend constexpr Bicomplex operator*(Bicomplex a, Bicomplex b) {
    return {a.z1 * b.z1 - a.z2 * b.z2, a.z1 * b.z2 + a.z2 * b.z1};
  }
  friend constexpr Bicomplex operator*(double s, Bicomplex a) { return {s * a.z1, s * a.z2}; }
  friend constexpr bool operator==(Bicomplex, Bicomplex) = default;

  static constexpr Bicomplex identity() { return {Complex{1.0}, Complex{}}; }
};

/// Multiplication by i2: (z1 + z2 i2) i2 = -z2 + z1 i2.
constexpr Bicomplex times_i2(Bicomplex a) { return {-a.z2, a.z1}; }

/// Complex components along e1 = (1 + j1)/2 and e2 = (1 - j1)/2, j1 = i1 i2.
struct BicomplexSplit {
  Complex w1;  // z1 - z2 i1
  Complex w2;  // z1 + z2 i1
};

constexpr BicomplexSplit bicomplex_split(Bicomplex a) {
  return {a.z1 - times_i(a.z2), a.z1 + times_i(a.z2)};
}
constexpr Bicomplex bicomplex_join(BicomplexSplit s) {
  // z1 = (w1 + w2)/2, z2 i1 = (w2 - w1)/2  =>  z2 = -i1 (w2 - w1)/2
  const Complex half_diff = 0.5 * (s.w2 - s.w1);
  return {0.5 * (s.w1 + s.w2), -times_i(half_diff)};
}

inline Bicomplex pow(Bicomplex a, int m) {
  const BicomplexSplit s = bicomplex_split(a);
  return bicomplex_join({pow(s.w1, m), pow(s.w2, m)});
}

/// ||z1 + z2 i2||_2 = sqrt(|z1|^2 + |z2|^2).
inline double norm2(Bicomplex a) { return std::sqrt(modulus_squared(a.z1) + modulus_squared(a.z2)); }
inline bool is_finite(Bicomplex a) { return is_finite(a.z1) && is_finite(a.z2); }

// ---------------------------------------------------------------------------
// Tricomplex units and their multiplication table.
// ---------------------------------------------------------------------------

/// The eight tricomplex units, numbered as the coefficients x0..x7 of the
/// eight-real view x0 + x1 i1 + x2 i2 + x3 i3 + x4 i4 + x5 j1 + x6 j2 + x7 j3.
enum class Unit : std::uint8_t { one = 0, i1, i2, i3, i4, j1, j2, j3 };

inline constexpr std::array<Unit, 8> all_units{Unit::one, Unit::i1, Unit::i2, Unit::i3,
                                               Unit::i4,  Unit::j1, Unit::j2, Unit::j3};

constexpr const char* unit_name(Unit u) {
  constexpr const char* names[] = {"1", "i1", "i2", "i3", "i4", "j1", "j2", "j3"};
  return names[static_cast<int>(u)];
}

struct SignedUnit {
  int sign = 1;  // +1 or -1
  Unit unit = Unit::one;
  friend constexpr bool operator==(SignedUnit, SignedUnit) = default;
};

namespace detail {
// Rows and columns in the order 1, i1, i2, i3, i4, j1, j2, j3.
// Encoded as +/-(index + 1).
inline constexpr std::array<std::array<int, 8>, 8> unit_table{{
    {+1, +2, +3, +4, +5, +6, +7, +8},
    {+2, -1, +6, +7, -8, -3, -4, +5},
    {+3, +6, -1, +8, -7, -2, +5, -4},
    {+4, +7, +8, -1, -6, +5, -2, -3},
    {+5, -8, -7, -6, -1, +4, +3, +2},
    {+6, -3, -2, +5, +4, +1, -8, -7},
    {+7, -4, +5, -2, +3, -8, +1, -6},
    {+8, +5, -4, -3, +2, -7, -6, +1},
}};
}  // namespace detail

constexpr SignedUnit unit_product(Unit a, Unit b) {
  const int code = detail::unit_table[static_cast<int>(a)][static_cast<int>(b)];
  return {code > 0 ? 1 : -1, static_cast<Unit>((code > 0 ? code : -code) - 1)};
}

inline std::ostream& operator<<(std::ostream& os, Unit u) { return os << unit_name(u); }
inline std::ostream& operator<<(std::ostream& os, SignedUnit s) {
  return os << (s.sign < 0 ? "-" : "+") << unit_name(s.unit);
}

// ---------------------------------------------------------------------------
// Tricomplex numbers.  Canonical storage is the eight-real view; the
// pair-of-bicomplex and four-complex views are re-indexings of it.
// ---------------------------------------------------------------------------

/// Four-complex view: z1 + z2 i2 + z3 i3 + z4 j3.
struct ComplexQuad {
  Complex z1, z2, z3, z4;
  friend constexpr bool operator==(const ComplexQuad&, const ComplexQuad&) = default;
};

/// Pair-of-bicomplex view: zeta1 + zeta2 i3.
struct BicomplexPair {
  Bicomplex zeta1;
  Bicomplex zeta2;
  friend constexpr bool operator==(const BicomplexPair&, const BicomplexPair&) = default;
};

class Tricomplex {
 public:
  using Coefficients = std::array<double, 8>;

  constexpr Tricomplex() = default;
  constexpr explicit Tricomplex(const Coefficients& x) : x_(x) {}
  constexpr Tricomplex(double real) { x_[0] = real; }  // NOLINT: implicit real embedding

  static constexpr Tricomplex unit(Unit u, double coefficient = 1.0) {
    Coefficients x{};
    x[static_cast<int>(u)] = coefficient;
    return Tricomplex{x};
  }
  static constexpr Tricomplex identity() { return Tricomplex{1.0}; }

  constexpr double operator[](Unit u) const { return x_[static_cast<int>(u)]; }
  constexpr const Coefficients& coefficients() const { return x_; }

  // z1 = x0 + x1 i1, z2 = x2 + x5 i1 (i1 i2 = j1), z3 = x3 + x6 i1 (i1 i3 = j2),
  // z4 = x7 + x4 i1 (i1 j3 = i4).
  constexpr ComplexQuad complex_view() const {
    return {{x_[0], x_[1]}, {x_[2], x_[5]}, {x_[3], x_[6]}, {x_[7], x_[4]}};
  }
  static constexpr Tricomplex from_complex(const ComplexQuad& q) {
    return Tricomplex{Coefficients{q.z1.re, q.z1.im, q.z2.re, q.z3.re, q.z4.im, q.z2.im, q.z3.im, q.z4.re}};
  }

  constexpr BicomplexPair bicomplex_view() const {
    const ComplexQuad q = complex_view();
    return {{q.z1, q.z2}, {q.z3, q.z4}};
  }
  static constexpr Tricomplex from_bicomplex(const BicomplexPair& b) {
    return from_complex({b.zeta1.z1, b.zeta1.z2, b.zeta2.z1, b.zeta2.z2});
  }

  friend constexpr Tricomplex operator+(const Tricomplex& a, const Tricomplex& b) {
    Coefficients x{};
    for (int k = 0; k < 8; ++k) x[k] = a.x_[k] + b.x_[k];
    return Tricomplex{x};
  }
  friend constexpr Tricomplex operator-(const Tricomplex& a, const Tricomplex& b) {
    Coefficients x{};
    for (int k = 0; k < 8; ++k) x[k] = a.x_[k] - b.x_[k];
    return Tricomplex{x};
  }
  friend constexpr Tricomplex operator*(double s, const Tricomplex& a) {
    Coefficients x{};
    for (int k = 0; k < 8; ++k) x[k] = s * a.x_[k];
    return Tricomplex{x};
  }
  /// (zeta1 zeta3 - zeta2 zeta4) + (zeta1 zeta4 + zeta2 zeta3) i3
  friend constexpr Tricomplex operator*(const Tricomplex& a, const Tricomplex& b) {
    const BicomplexPair p = a.bicomplex_view();
    const BicomplexPair q = b.bicomplex_view();
    return from_bicomplex({p.zeta1 * q.zeta1 - p.zeta2 * q.zeta2, p.zeta1 * q.zeta2 + p.zeta2 * q.zeta1});
  }
  friend constexpr bool operator==(const Tricomplex&, const Tricomplex&) = default;

 private:
  Coefficients x_{};
};

inline Tricomplex tri_add(const Tricomplex& a, const Tricomplex& b) { return a + b; }
inline Tricomplex tri_mul(const Tricomplex& a, const Tricomplex& b) { return a * b; }

inline std::ostream& operator<<(std::ostream& os, const Tricomplex& a) {
  os << '(';
  for (Unit u : all_units) os << (u == Unit::one ? "" : " ") << a[u] << (u == Unit::one ? "" : unit_name(u));
  return os << ')';
}

/// The idempotents (1 + j3)/2 and (1 - j3)/2.
inline constexpr Tricomplex gamma3_bar = Tricomplex{Tricomplex::Coefficients{0.5, 0, 0, 0, 0, 0, 0, 0.5}};
inline constexpr Tricomplex gamma3 = Tricomplex{Tricomplex::Coefficients{0.5, 0, 0, 0, 0, 0, 0, -0.5}};

/// Bicomplex components u1 (along gamma3_bar) and u2 (along gamma3).
struct IdempotentPair {
  Bicomplex u1;
  Bicomplex u2;

  friend constexpr IdempotentPair operator+(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.u1 + b.u1, a.u2 + b.u2};
  }
  friend constexpr IdempotentPair operator*(const IdempotentPair& a, const IdempotentPair& b) {
    return {a.u1 * b.u1, a.u2 * b.u2};
  }
};

/// eta = (zeta1 - zeta2 i2) gamma3_bar + (zeta1 + zeta2 i2) gamma3
constexpr IdempotentPair idem_split(const Tricomplex& a) {
  const BicomplexPair b = a.bicomplex_view();
  const Bicomplex t = times_i2(b.zeta2);
  return {b.zeta1 - t, b.zeta1 + t};
}

constexpr Tricomplex idem_join(const IdempotentPair& p) {
  // zeta1 = (u1 + u2)/2 and zeta2 i2 = (u2 - u1)/2, so zeta2 = -(u2 - u1) i2 / 2.
  const Bicomplex half_diff = 0.5 * (p.u2 - p.u1);
  return Tricomplex::from_bicomplex({0.5 * (p.u1 + p.u2), -times_i2(half_diff)});
}

/// The four complex components of eta: (u1.w1, u1.w2, u2.w1, u2.w2).
inline std::array<Complex, 4> complex_components(const Tricomplex& a) {
  const IdempotentPair p = idem_split(a);
  const BicomplexSplit s1 = bicomplex_split(p.u1);
  const BicomplexSplit s2 = bicomplex_split(p.u2);
  return {s1.w1, s1.w2, s2.w1, s2.w2};
}

inline Tricomplex tri_pow(const Tricomplex& a, int m) {
  const IdempotentPair p = idem_split(a);
  return idem_join({pow(p.u1, m), pow(p.u2, m)});
}
inline Tricomplex pow(const Tricomplex& a, int m) { return tri_pow(a, m); }

/// Euclidean norm over the eight-real view.
inline double norm3(const Tricomplex& a) {
  double s = 0.0;
  for (double v : a.coefficients()) s += v * v;
  return std::sqrt(s);
}

/// Same norm through the pair-of-bicomplex view: sqrt(||zeta1||^2 + ||zeta2||^2).
inline double norm3_bicomplex(const Tricomplex& a) {
  const BicomplexPair b = a.bicomplex_view();
  const double n1 = norm2(b.zeta1);
  const double n2 = norm2(b.zeta2);
  return std::sqrt(n1 * n1 + n2 * n2);
}

inline bool is_finite(const Tricomplex& a) {
  for (double v : a.coefficients())
    if (!std::isfinite(v)) return false;
  return true;
}

/// x1 k + x2 l + x3 m for three distinct units (k, l, m).
inline Tricomplex embed_slice(double x1, double x2, double x3, const std::array<Unit, 3>& units) {
  if (units[0] == units[1] || units[0] == units[2] || units[1] == units[2])
    throw std::invalid_argument("embed_slice: units must be distinct");
  Tricomplex::Coefficients x{};
  x[static_cast<int>(units[0])] = x1;
  x[static_cast<int>(units[1])] = x2;
  x[static_cast<int>(units[2])] = x3;
  return Tricomplex{x};
}

}  // namespace multibrot
