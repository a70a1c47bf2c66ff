#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace conelab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor and ceiling of an exact rational.
Int floor(const Rational& q);
Int ceil(const Rational& q);

/// Floor division for integers, rounding toward negative infinity.
Int floor_div(const Int& a, const Int& b);
/// Nonnegative remainder of a modulo b (b > 0).
Int mod(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 and s, t with s*a + t*b = g.
struct Bezout {
  Int g, s, t;
};
Bezout extended_gcd(const Int& a, const Int& b);

int sign(const Int& x);
int sign(const Rational& x);

RatVector to_rational(const IntVector& v);

/// Scales a rational vector to the primitive integer vector on the same ray
/// (gcd 1, positive multiple). The zero vector maps to zero.
IntVector primitive_on_ray(const RatVector& v);
IntVector primitive_on_ray(const IntVector& v);

/// True when every entry is an integer.
bool is_integral(const RatVector& v);

std::string to_string(const Int& x);
std::string to_string(const Rational& q);

}  // namespace conelab
