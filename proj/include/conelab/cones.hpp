#pragma once

#include "conelab/lattice.hpp"
#include "conelab/roots.hpp"

#include <optional>
#include <vector>

namespace conelab {

/// Largest ambient dimension accepted by the facet and feasibility routines.
inline constexpr std::size_t kMaxConeDimension = 6;

/// Finitely generated cone in Q^n. Generators are stored as primitive integer
/// vectors on the same rays; duplicates are dropped, order is kept.
class RationalCone {
 public:
  /// Throws InvalidInput for a zero generator, DimensionMismatch for a length
  /// mismatch and DimensionLimit above kMaxConeDimension.
  RationalCone(std::size_t ambient_dim, const std::vector<RatVector>& generators);
  RationalCone(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }

  /// Dimension of the linear span.
  std::size_t dimension() const noexcept { return dimension_; }
  bool full_dimensional() const noexcept { return dimension_ == ambient_dim_; }

  /// The span is {x : f . x = 0 for every equality f}; inside the span the
  /// cone is {x : f . x >= 0 for every facet f}. Facet normals lie in the span.
  const std::vector<IntVector>& equalities() const noexcept { return equalities_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }

  /// Image under a linear map of the ambient space.
  RationalCone transformed(const RatMatrix& map) const;
  RationalCone transformed(const IntMatrix& map) const;

 private:
  void build();

  std::size_t ambient_dim_;
  std::vector<IntVector> generators_;
  std::size_t dimension_ = 0;
  std::vector<IntVector> equalities_;
  std::vector<IntVector> facets_;
};

struct Membership {
  bool member = false;
  RatVector coefficients;  // one per generator, all >= 0, when member
  RatVector separator;     // f with f . g >= 0 on generators and f . v < 0, otherwise
};

/// Throws DimensionMismatch.
Membership cone_contains(const RationalCone& cone, const RatVector& v);
Membership cone_contains(const RationalCone& cone, const IntVector& v);

/// Re-checks a certificate from cone_contains.
bool verify_membership(const RationalCone& cone, const RatVector& v, const Membership& m);

struct InteriorTest {
  bool inside = false;
  bool lower_dimensional = false;  // the cone spans a proper subspace; "inside" is relative
};

/// Strict facet inequalities inside the span of the cone.
InteriorTest interior_contains(const RationalCone& cone, const RatVector& v);
InteriorTest interior_contains(const RationalCone& cone, const IntVector& v);

struct DisjointnessResult {
  bool disjoint = true;
  std::optional<RatVector> witness;  // common relative-interior point when not disjoint
};

/// Exact emptiness test for relint(K1) and relint(K2) by Fourier-Motzkin
/// elimination. Throws DimensionMismatch.
DisjointnessResult interiors_disjoint(const RationalCone& k1, const RationalCone& k2);

/// Some x with A x >= b, or nothing when the system is infeasible.
std::optional<RatVector> fourier_motzkin(const RatMatrix& a, const RatVector& b);

struct OverlapWitness {
  std::size_t first = 0;   // group indices i < j with relint(g_i D) and relint(g_j D) meeting
  std::size_t second = 0;
  RatVector point;
};

struct CoverageReport {
  std::size_t samples_total = 0;
  std::size_t samples_covered = 0;
  std::vector<std::optional<std::size_t>> covering_element;  // per sample
  std::vector<RatVector> uncovered_witnesses;
  std::vector<OverlapWitness> overlap_witnesses;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;  // pairs acting identically on the span of D

  bool coverage_ok() const noexcept { return samples_covered == samples_total; }
  bool overlap_ok() const noexcept { return overlap_witnesses.empty(); }
  bool passed() const noexcept { return coverage_ok() && overlap_ok(); }
};

/// Condition (1): each sample s has some g with g^{-1} s in D. Condition (2):
/// for every pair g_i, g_j that differ on the span of D, the relative
/// interiors of g_i D and g_j D are disjoint. Throws InvalidInput for a
/// singular map, DimensionMismatch for a shape mismatch.
CoverageReport fundamental_domain_check(const RationalCone& delta, const std::vector<RatMatrix>& group,
                                        const std::vector<RatVector>& samples);

struct SemidirectFailure {
  std::vector<std::size_t> word;  // letters: reflections first, then symmetries
  std::string reason;
};

struct SemidirectReport {
  std::size_t words_checked = 0;
  std::vector<SemidirectFailure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// For every word of length <= max_length in the reflections of `roots`
/// followed by the `symmetries`, walks W p back into the chamber with the
/// reflection word R and checks that R W lies in the group generated by the
/// symmetries. `probe` must lie in the open chamber of `roots`.
SemidirectReport semidirect_check(const IntegralLattice& lattice, const std::vector<Root>& roots,
                                  const std::vector<IntMatrix>& symmetries, const LatticeVector& probe,
                                  std::size_t max_length = 4, std::size_t walk_cap = kDefaultWalkCap);

}  // namespace conelab
