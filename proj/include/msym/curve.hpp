#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msym {

/// Arithmetic in the prime field F_q. Residues are kept in [0, q).
class PrimeField {
 public:
  explicit PrimeField(int q);

  int modulus() const noexcept { return q_; }
  int reduce(std::int64_t v) const noexcept;
  int add(int a, int b) const noexcept { return reduce(std::int64_t{a} + b); }
  int sub(int a, int b) const noexcept { return reduce(std::int64_t{a} - b); }
  int mul(int a, int b) const noexcept { return reduce(std::int64_t{a} * b); }
  int neg(int a) const noexcept { return reduce(-std::int64_t{a}); }

 private:
  int q_;
};

bool is_prime(int n) noexcept;

/// x-coordinate on P^1(F_q). Affine values sort before the point at infinity.
struct XCoord {
  int value = 0;
  bool infinite = false;

  static XCoord affine(int x) { return XCoord{x, false}; }
  static XCoord infinity() { return XCoord{0, true}; }

  friend bool operator==(const XCoord& a, const XCoord& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const XCoord& a, const XCoord& b) {
    if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
    if (a.infinite) return std::strong_ordering::equal;
    return a.value <=> b.value;
  }
};

/// Rational point of E: an affine solution (x, y) or the point at infinity.
struct Point {
  int x = 0;
  int y = 0;
  bool infinite = false;

  static Point affine(int x, int y) { return Point{x, y, false}; }
  static Point infinity() { return Point{0, 0, true}; }

  XCoord xcoord() const { return infinite ? XCoord::infinity() : XCoord::affine(x); }

  friend bool operator==(const Point& a, const Point& b) {
    return a.infinite == b.infinite && (a.infinite || (a.x == b.x && a.y == b.y));
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
    if (a.infinite) return std::strong_ordering::equal;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Number of solutions y over a fixed x: none, one, or two.
enum class FiberType : std::uint8_t { NS, OS, S };

struct FiberClass {
  FiberType type = FiberType::NS;
  std::vector<Point> solutions;  // canonical order, smaller residue first
};

/// Weierstrass data y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q.
struct CurveSpec {
  int q = 0;
  std::array<int, 5> a{};  // a1, a2, a3, a4, a6

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Discriminant of the Weierstrass equation reduced into [0, q). Valid in every
/// characteristic (b2, b4, b6, b8 form).
int discriminant(const CurveSpec& spec);

/// A validated, nonsingular curve with its P^1 fibre table precomputed.
class Curve {
 public:
  /// Throws NonPrimeModulus or SingularCurve.
  static Curve validate(const CurveSpec& spec);

  const CurveSpec& spec() const noexcept { return spec_; }
  int q() const noexcept { return spec_.q; }
  const PrimeField& field() const noexcept { return field_; }
  int discriminant() const noexcept { return disc_; }

  /// f(x, y) = y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6) mod q.
  int evaluate(int x, int y) const noexcept;

  /// All of P^1(F_q): 0, 1, ..., q-1, then infinity.
  const std::vector<XCoord>& xcoords() const noexcept { return xs_; }
  std::size_t x_index(const XCoord& x) const noexcept;

  const FiberClass& fiber(const XCoord& x) const { return fibers_[x_index(x)]; }
  FiberType fiber_type(const XCoord& x) const { return fiber(x).type; }

  /// E(F_q) in canonical order (affine points by (x, y), then infinity).
  const std::vector<Point>& points() const noexcept { return points_; }

  /// The other solution over the same x: (x, -y - a1 x - a3). Infinity is fixed.
  Point negate(const Point& p) const noexcept;

 private:
  Curve(CurveSpec spec, int disc);

  CurveSpec spec_;
  PrimeField field_;
  int disc_;
  std::vector<XCoord> xs_;
  std::vector<FiberClass> fibers_;
  std::vector<Point> points_;
};

// Free-function forms of the curve operations.
Curve validate_curve(const CurveSpec& spec);
FiberClass fiber_solutions(const Curve& curve, const XCoord& x);
std::vector<Point> rational_points(const Curve& curve);

/// Parses `q=<int>;a=[a1,a2,a3,a4,a6]`; coefficients are reduced mod q.
CurveSpec parse_curve_spec(std::string_view text);
std::string to_string(const CurveSpec& spec);

std::string to_string(const XCoord& x);
std::string to_string(const Point& p);
std::string to_string(FiberType t);

}  // namespace msym
