#pragma once

#include "conelab/linalg.hpp"
#include "conelab/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Coordinates of a lattice vector in the fixed basis of its lattice.
using LatticeVector = IntVector;

/// Free Z-module of finite rank with an integral symmetric bilinear form.
class IntegralLattice {
 public:
  /// Throws InvalidInput for an empty or non-symmetric Gram matrix.
  explicit IntegralLattice(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Int pair(std::span<const Int> u, std::span<const Int> v) const;
  Int pair(const LatticeVector& u, const LatticeVector& v) const {
    return pair(std::span<const Int>(u), std::span<const Int>(v));
  }
  Int square(const LatticeVector& v) const { return pair(v, v); }

  /// Gram matrix times v: the functional (v . -) in dual coordinates.
  IntVector gram_times(const LatticeVector& v) const;

  void require_vector(std::span<const Int> v) const;

  /// Orthogonal direct sum.
  friend IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

struct LatticeInvariants {
  std::size_t rank = 0;
  Int det;
  bool even = false;
  linalg::Inertia signature;
  /// Signature (1, rank - 1, 0).
  bool hyperbolic() const noexcept {
    return signature.positive == 1 && signature.negative + 1 == rank && signature.zero == 0;
  }
};

LatticeInvariants lattice_invariants(const IntegralLattice& lattice);

/// An integer matrix M with M^T G M = G and |det M| = 1 for a given lattice.
class Isometry {
 public:
  /// Throws NotAnIsometry (or DimensionMismatch) when the check fails.
  static Isometry verified(const IntegralLattice& lattice, IntMatrix matrix);
  static Isometry identity(std::size_t rank);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return matrix_.rows(); }

  LatticeVector apply(const LatticeVector& v) const { return matrix_ * v; }
  Isometry inverse() const;

  /// this o other.
  Isometry compose(const Isometry& other) const { return Isometry(matrix_ * other.matrix_); }

  friend bool operator==(const Isometry& a, const Isometry& b) { return a.matrix_ == b.matrix_; }
  friend bool operator<(const Isometry& a, const Isometry& b) { return a.matrix_ < b.matrix_; }

 private:
  explicit Isometry(IntMatrix matrix) : matrix_(std::move(matrix)) {}
  IntMatrix matrix_;
};

bool verify_isometry(const IntegralLattice& lattice, const IntMatrix& matrix);

inline constexpr std::size_t kDefaultGroupCap = 1000;

/// A finite group of isometries, stored as an explicit element list.
struct GroupAction {
  std::vector<Isometry> elements;  // elements[0] is the identity
  std::size_t order() const noexcept { return elements.size(); }
};

/// Closes the generators under composition. Throws CapExceeded when more
/// than `cap` elements appear.
GroupAction group_closure(const IntegralLattice& lattice, std::span<const IntMatrix> generators,
                          std::size_t cap = kDefaultGroupCap);

/// A saturated sublattice given by basis columns, with its induced Gram matrix.
struct Sublattice {
  IntMatrix basis;  // rank(L) x k
  IntMatrix gram;   // k x k
  std::size_t rank() const noexcept { return basis.cols(); }
  std::vector<LatticeVector> vectors() const;
};

/// Common fixed vectors of the group: the saturated integer kernel of the stacked (g - id).
Sublattice fixed_sublattice(const IntegralLattice& lattice, const GroupAction& group);

/// {v : (v . s) = 0 for every basis column s}.
Sublattice orthogonal_complement(const IntegralLattice& lattice, const IntMatrix& basis);

/// S*/S for S = Z^n with Gram G: each generator v = V e_i / d_i has order d_i.
struct DiscriminantData {
  std::vector<Int> invariant_factors;   // d_1 | d_2 | ..., all > 1
  std::vector<RatVector> dual_generators;
  IntMatrix smith_left;                  // U rows used for coordinates in S*/S
  std::size_t first_factor_row = 0;      // row of U matching invariant_factors[0]

  Int order() const;
  /// Residues of a dual vector (given as G x = y, y integral) in Z/d_1 x Z/d_2 x ...
  IntVector coordinates_of_functional(const IntVector& y) const;
};

/// Throws DegenerateLattice when det = 0.
DiscriminantData discriminant_group(const IntegralLattice& lattice);

struct DiscriminantAction {
  /// Column i holds the residues of the image of dual generator i.
  IntMatrix induced;
  bool is_identity = false;
};

DiscriminantAction discriminant_action(const IntegralLattice& lattice, const Isometry& isometry);
DiscriminantAction discriminant_action(const IntegralLattice& lattice, const DiscriminantData& data,
                                       const Isometry& isometry);

/// True when the basis columns span a primitive sublattice.
bool is_saturated(const IntMatrix& basis);

}  // namespace conelab
