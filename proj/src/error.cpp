#include "conelab/error.hpp"
#include "conelab/matrix.hpp"
#include "conelab/numeric.hpp"

namespace conelab {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionLimit: return "DimensionLimit";
    case ErrorKind::DegenerateLattice: return "DegenerateLattice";
    case ErrorKind::NotAnIsometry: return "NotAnIsometry";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NonPositiveSquare: return "NonPositiveSquare";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::InfiniteOrder: return "InfiniteOrder";
    case ErrorKind::FixedDirection: return "FixedDirection";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::RankObstruction: return "RankObstruction";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

Int floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

Int ceil(const Rational& q) {
  return -floor_div(-numerator(q), denominator(q));
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Bezout extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

int sign(const Int& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntVector primitive_on_ray(const RatVector& v) {
  Int common = 1;
  for (const auto& x : v) common = lcm(common, denominator(x));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i] * common);
  return primitive_on_ray(out);
}

IntVector primitive_on_ray(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (denominator(x) != 1) return false;
  return true;
}

std::string to_string(const Int& x) { return x.str(); }
std::string to_string(const Rational& q) { return q.str(); }

}  // namespace conelab
