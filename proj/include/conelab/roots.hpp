#pragma once

#include "conelab/lattice.hpp"

#include <functional>
#include <span>
#include <vector>

namespace conelab {

/// A lattice vector of square -2.
class Root {
 public:
  /// Throws NotARoot unless (v . v) = -2.
  static Root verified(const IntegralLattice& lattice, LatticeVector v);

  const LatticeVector& vector() const noexcept { return vector_; }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.vector_ <=> b.vector_; }

 private:
  explicit Root(LatticeVector v) : vector_(std::move(v)) {}
  LatticeVector vector_;
};

/// D -> D + (D . C) C.
LatticeVector reflect(const IntegralLattice& lattice, const Root& root, const LatticeVector& d);

/// Matrix of the reflection in C; involutive isometry.
Isometry reflection_matrix(const IntegralLattice& lattice, const Root& root);

/// All integer x with x^T Q x <= bound for a positive definite rational form Q
/// (Fincke-Pohst over an exact rational LDL^T). Each vector appears once; the
/// order is deterministic. `visit` may return false to stop early.
void short_vectors(const RatMatrix& form, const Rational& bound,
                   const std::function<bool(const IntVector&)>& visit);
std::vector<IntVector> short_vectors(const RatMatrix& form, const Rational& bound);

/// Roots C with 0 <= (C . h) <= bound in a hyperbolic lattice, one per +/- pair
/// when (C . h) = 0 (first nonzero coordinate positive), keeping only those
/// orthogonal to every excluded class and distinct from it. Sorted by
/// ((C . h), coordinates).
std::vector<Root> enumerate_roots(const IntegralLattice& lattice, const LatticeVector& h, const Int& bound,
                                  std::span<const Root> excluded = {});

/// Applies the nodal filter to an existing root list.
std::vector<Root> nodal_filter(const IntegralLattice& lattice, std::span<const Root> roots,
                               std::span<const Root> excluded);

inline constexpr std::size_t kDefaultWalkCap = 10000;

struct WalkResult {
  LatticeVector final;
  std::vector<std::size_t> word;  // indices into the root list, in application order
  std::size_t steps = 0;
};

/// Reflects D in the root of most negative pairing (lowest index on ties)
/// until (D . C) >= 0 for every supplied root. Throws CapExceeded after `cap` steps.
WalkResult chamber_walk(const IntegralLattice& lattice, std::span<const Root> roots, const LatticeVector& d,
                        std::size_t cap = kDefaultWalkCap);

/// Replays a walk word starting from D.
LatticeVector apply_word(const IntegralLattice& lattice, std::span<const Root> roots,
                         std::span<const std::size_t> word, const LatticeVector& d);

/// Product of the reflections of a word, as a matrix acting on the left
/// (the last reflection applied is the leftmost factor).
IntMatrix word_matrix(const IntegralLattice& lattice, std::span<const Root> roots,
                      std::span<const std::size_t> word);

/// C' = M^{-1} C, for which M^{-1} r_C M = r_{C'}.
Root conjugate_root(const IntegralLattice& lattice, const Isometry& isometry, const Root& root);

/// Sign-canonical representative: first nonzero coordinate positive.
LatticeVector canonical_sign(const LatticeVector& v);

}  // namespace conelab
