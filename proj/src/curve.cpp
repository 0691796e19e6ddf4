#include "msym/curve.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "msym/error.hpp"

namespace msym {

PrimeField::PrimeField(int q) : q_(q) {}

int PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % q_;
  if (r < 0) r += q_;
  return static_cast<int>(r);
}

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int discriminant(const CurveSpec& spec) {
  const std::int64_t a1 = spec.a[0], a2 = spec.a[1], a3 = spec.a[2], a4 = spec.a[3],
                     a6 = spec.a[4];
  const std::int64_t b2 = a1 * a1 + 4 * a2;
  const std::int64_t b4 = 2 * a4 + a1 * a3;
  const std::int64_t b6 = a3 * a3 + 4 * a6;
  const std::int64_t b8 =
      a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  const std::int64_t delta =
      -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  return PrimeField(spec.q).reduce(delta);
}

Curve::Curve(CurveSpec spec, int disc) : spec_(spec), field_(spec.q), disc_(disc) {
  const int q = spec_.q;
  for (int x = 0; x < q; ++x) xs_.push_back(XCoord::affine(x));
  xs_.push_back(XCoord::infinity());

  fibers_.reserve(xs_.size());
  for (const XCoord& x : xs_) {
    FiberClass fc;
    if (x.infinite) {
      fc.solutions.push_back(Point::infinity());
    } else {
      for (int y = 0; y < q; ++y)
        if (evaluate(x.value, y) == 0) fc.solutions.push_back(Point::affine(x.value, y));
    }
    switch (fc.solutions.size()) {
      case 0: fc.type = FiberType::NS; break;
      case 1: fc.type = FiberType::OS; break;
      default: fc.type = FiberType::S; break;
    }
    for (const Point& p : fc.solutions) points_.push_back(p);
    fibers_.push_back(std::move(fc));
  }
  std::sort(points_.begin(), points_.end());
}

Curve Curve::validate(const CurveSpec& spec) {
  if (!is_prime(spec.q))
    throw NonPrimeModulus("q = " + std::to_string(spec.q) + " is not prime");
  CurveSpec reduced = spec;
  const PrimeField f(spec.q);
  for (int& c : reduced.a) c = f.reduce(c);
  const int d = msym::discriminant(reduced);
  if (d == 0) throw SingularCurve("discriminant vanishes for " + to_string(reduced));
  return Curve(reduced, d);
}

int Curve::evaluate(int x, int y) const noexcept {
  const auto& a = spec_.a;
  const std::int64_t X = x, Y = y;
  const std::int64_t lhs = Y * Y + a[0] * X * Y + a[2] * Y;
  const std::int64_t rhs = X * X * X + a[1] * X * X + a[3] * X + a[4];
  return field_.reduce(lhs - rhs);
}

std::size_t Curve::x_index(const XCoord& x) const noexcept {
  return x.infinite ? static_cast<std::size_t>(spec_.q) : static_cast<std::size_t>(x.value);
}

Point Curve::negate(const Point& p) const noexcept {
  if (p.infinite) return p;
  const auto& a = spec_.a;
  const int y = field_.reduce(-std::int64_t{p.y} - std::int64_t{a[0]} * p.x - a[2]);
  return Point::affine(p.x, y);
}

Curve validate_curve(const CurveSpec& spec) { return Curve::validate(spec); }

FiberClass fiber_solutions(const Curve& curve, const XCoord& x) { return curve.fiber(x); }

std::vector<Point> rational_points(const Curve& curve) { return curve.points(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

}  // namespace

CurveSpec parse_curve_spec(std::string_view text) {
  const std::string_view s = trim(text);
  const auto semi = s.find(';');
  if (semi == std::string_view::npos || s.substr(0, 2) != "q=")
    throw ParseError("curve must look like q=<int>;a=[a1,a2,a3,a4,a6], got '" +
                     std::string(s) + "'");
  CurveSpec spec;
  const long long q = parse_int(s.substr(2, semi - 2), "q");
  if (q < 2 || q > 1'000'000) throw NonPrimeModulus("q = " + std::to_string(q) + " out of range");
  spec.q = static_cast<int>(q);

  std::string_view rest = trim(s.substr(semi + 1));
  if (rest.substr(0, 3) != "a=[" || rest.back() != ']')
    throw ParseError("coefficient list must look like a=[a1,a2,a3,a4,a6]");
  rest = rest.substr(3, rest.size() - 4);
  const PrimeField f(spec.q);
  std::size_t i = 0;
  while (true) {
    const auto comma = rest.find(',');
    if (i >= 5) throw ParseError("expected exactly 5 coefficients");
    spec.a[i++] = f.reduce(parse_int(rest.substr(0, comma), "coefficient list"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (i != 5) throw ParseError("expected exactly 5 coefficients");
  return spec;
}

std::string to_string(const CurveSpec& spec) {
  std::ostringstream os;
  os << "q=" << spec.q << ";a=[";
  for (std::size_t i = 0; i < spec.a.size(); ++i) os << (i ? "," : "") << spec.a[i];
  os << "]";
  return os.str();
}

std::string to_string(const XCoord& x) {
  return x.infinite ? std::string("inf") : std::to_string(x.value);
}

std::string to_string(const Point& p) {
  if (p.infinite) return "inf";
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::NS: return "ns";
    case FiberType::OS: return "os";
    case FiberType::S: return "s";
  }
  return "?";
}

}  // namespace msym
