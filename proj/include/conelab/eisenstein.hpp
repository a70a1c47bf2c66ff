#pragma once

#include "conelab/cones.hpp"
#include "conelab/cyclo.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace conelab {

/// x + y zeta in Z[zeta_3], with zeta^2 = -1 - zeta.
struct Eisenstein {
  Int x = 0;
  Int y = 0;

  static Eisenstein from(const CyclotomicElement& e);
  CyclotomicElement element() const { return CyclotomicElement(3, {x, y}); }

  Eisenstein conj() const { return {x - y, -y}; }
  Int norm() const { return x * x - x * y + y * y; }
  /// z + conj(z).
  Int trace() const { return 2 * x - y; }
  bool is_zero() const { return x == 0 && y == 0; }
  bool is_unit() const { return norm() == 1; }

  friend Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) { return {a.x + b.x, a.y + b.y}; }
  friend Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) { return {a.x - b.x, a.y - b.y}; }
  friend Eisenstein operator-(const Eisenstein& a) { return {-a.x, -a.y}; }
  friend Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
  }
  friend Eisenstein operator*(const Int& s, const Eisenstein& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Eisenstein& a, const Eisenstein& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Eisenstein& a, const Eisenstein& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// The six units of Z[zeta_3], +-1, +-zeta, +-zeta^2.
std::vector<Eisenstein> eisenstein_units();

/// Nearest point of Z[zeta_3] to t0 + t1 zeta; ties go to the
/// lexicographically smallest (q0, q1).
Eisenstein nearest_eisenstein(const Rational& t0, const Rational& t1);

/// [[a, h], [conj(h), d]] with integer diagonal.
struct HermitianForm {
  Int a = 0;
  Int d = 0;
  Eisenstein h;

  /// Coordinates (a, d, h0, h1) on the real 4-space of such forms.
  IntVector coords() const { return {a, d, h.x, h.y}; }
  static HermitianForm from_coords(const IntVector& c);

  /// H(v) = v^* H v for v = (v1, v2).
  Int value(const Eisenstein& v1, const Eisenstein& v2) const;

  friend bool operator==(const HermitianForm& p, const HermitianForm& q) {
    return p.a == q.a && p.d == q.d && p.h == q.h;
  }
  friend bool operator<(const HermitianForm& p, const HermitianForm& q) { return p.coords() < q.coords(); }
};

struct HermInvariants {
  Int det;
  bool psd = false;
  bool pd = false;
};

HermInvariants herm_invariants(const HermitianForm& form);

/// [[p, q], [r, s]] over Z[zeta_3] with unit determinant.
class UnimodularTransform {
 public:
  /// Throws NotUnimodular when ps - qr is not a unit.
  static UnimodularTransform verified(Eisenstein p, Eisenstein q, Eisenstein r, Eisenstein s);
  static UnimodularTransform identity();
  static UnimodularTransform swap();
  /// [[1, t], [0, 1]].
  static UnimodularTransform translation(const Eisenstein& t);

  const Eisenstein& p() const noexcept { return p_; }
  const Eisenstein& q() const noexcept { return q_; }
  const Eisenstein& r() const noexcept { return r_; }
  const Eisenstein& s() const noexcept { return s_; }
  Eisenstein det() const { return p_ * s_ - q_ * r_; }

  UnimodularTransform inverse() const;
  friend UnimodularTransform operator*(const UnimodularTransform& a, const UnimodularTransform& b);
  friend bool operator==(const UnimodularTransform& a, const UnimodularTransform& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
  }

  /// Entries as eight integers p0 p1 q0 q1 r0 r1 s0 s1.
  IntVector coefficients() const { return {p_.x, p_.y, q_.x, q_.y, r_.x, r_.y, s_.x, s_.y}; }

 private:
  UnimodularTransform(Eisenstein p, Eisenstein q, Eisenstein r, Eisenstein s)
      : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {}
  Eisenstein p_, q_, r_, s_;
};

/// H -> g^* H g. A right action: act(g1 g2, H) = act(g2, act(g1, H)).
HermitianForm gl2_action(const UnimodularTransform& g, const HermitianForm& form);

/// The same action as a 4x4 integer matrix on (a, d, h0, h1).
IntMatrix action_matrix(const UnimodularTransform& g);

struct Reduction {
  HermitianForm form;
  UnimodularTransform transform;  // gl2_action(transform, input) = form
};

/// Alternates translation of h into the hexagonal cell of a Z[zeta_3] and
/// swapping when d < a. Throws NotPositiveDefinite.
Reduction basic_reduce(const HermitianForm& form);

/// Canonical reduced representative: the lexicographically smallest
/// (a, d, h0, h1) in the orbit. It satisfies a <= d and h is a nearest-point
/// representative modulo a Z[zeta_3]. Returns the identity transform when the
/// input is already canonical. Throws NotPositiveDefinite.
Reduction reduce(const HermitianForm& form);

std::vector<HermitianForm> eisenstein_cone_generators();
RationalCone eisenstein_cone();

/// Every transform with all coefficients in [-radius, radius], one per
/// action class (the six unit scalars act trivially). The identity class comes first.
std::vector<UnimodularTransform> unimodular_ball(int radius);

/// mt19937_64 with an explicit rejection draw; the standard distributions
/// are implementation-defined, this is not.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Uniform among transforms with coefficients in [-box, box], by rejection.
UnimodularTransform random_unimodular(SampleRng& rng, int box = 3);

/// A small positive definite base form moved by a random transform.
HermitianForm random_pd_form(SampleRng& rng, int box = 3);

struct DomainOverlap {
  UnimodularTransform transform;
  IntVector point;  // lies in relint(D) and relint(g D)
};

struct DomainReport {
  std::size_t samples_total = 0;
  std::size_t reduced_in_cone = 0;  // reduced form already lies in D
  std::size_t samples_covered = 0;  // some ball element moves the reduced form into D
  std::vector<HermitianForm> uncovered_witnesses;
  std::size_t ball_classes = 0;
  std::size_t classes_separated = 0;  // settled by a single facet
  std::vector<DomainOverlap> overlap_witnesses;

  double coverage() const noexcept {
    return samples_total == 0 ? 0.0 : static_cast<double>(samples_covered) / static_cast<double>(samples_total);
  }
};

/// Sample 0 is the identity form; the others come from random_pd_form.
std::vector<HermitianForm> domain_samples(std::size_t sample_count, std::uint64_t seed);

/// Reduces each sample and looks for a ball element moving it into D, then
/// decides relint(D) against relint(g D) exactly for every non-identity ball
/// class. Throws InvalidInput when sample_count is zero or the radius is negative.
DomainReport verify_eisenstein_domain(std::size_t sample_count, std::uint64_t seed, int ball_radius);

}  // namespace conelab
