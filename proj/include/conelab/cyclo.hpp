#pragma once

#include "conelab/matrix.hpp"

#include <map>
#include <vector>

namespace conelab {

/// Integer polynomial, coefficients from degree 0 upward, no trailing zeros
/// (except the zero polynomial, stored empty).
using IntPoly = std::vector<Int>;

int euler_phi(int n);
IntPoly cyclotomic_polynomial(int n);

/// Exact division a = q * b + r with b monic. Returns (q, r).
std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& a, const IntPoly& b);

/// Element of Z[zeta_I] for I in {3, 5}, in the power basis 1, zeta, ...,
/// zeta^{phi(I)-1}.
class CyclotomicElement {
 public:
  /// Reduces arbitrary-length coefficient input modulo Phi_I. Throws
  /// UnsupportedOrder for I outside {3, 5}.
  CyclotomicElement(int order, std::vector<Int> coeffs);

  static CyclotomicElement zero(int order) { return {order, {}}; }
  static CyclotomicElement one(int order) { return {order, {Int(1)}}; }
  /// zeta^power (any integer power).
  static CyclotomicElement zeta(int order, int power = 1);

  int order() const noexcept { return order_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  const Int& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  /// Galois automorphism zeta -> zeta^k, gcd(k, I) = 1.
  CyclotomicElement galois(int k) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  CyclotomicElement conjugate() const { return galois(order_ - 1); }
  /// Product of all Galois conjugates; an ordinary integer.
  Int norm() const;
  /// Sum of all Galois conjugates; an ordinary integer. For I = 3 this is x + conj(x).
  Int trace() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const Int& s, const CyclotomicElement& a);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<Int> coeffs_;  // length phi(order)
};

struct CycloArithmetic {
  CyclotomicElement sum;
  CyclotomicElement product;
  CyclotomicElement conjugate;
  Int norm;
};

/// Throws OrderMismatch when the orders differ.
CycloArithmetic cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b);

/// Companion matrix of a monic polynomial (last column carries -coefficients).
IntMatrix companion_matrix(const IntPoly& monic);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// True iff Phi_I(M) = 0. Throws UnsupportedOrder for I outside {3, 5}.
bool annihilator_check(const IntMatrix& m, int order);

/// Multiplicative order of a square integer matrix, or 0 when it is
/// infinite. The candidate order is the lcm of the cyclotomic factors of the
/// characteristic polynomial, confirmed by exponentiation.
unsigned matrix_order(const IntMatrix& m);

struct CoverAction {
  IntMatrix matrix;
  int order = 0;
};

/// Gates, in order: InfiniteOrder, FixedDirection (det(M - id) = 0),
/// EvenOrder, RankObstruction (phi(I) does not divide 4, or the lattice rank
/// is not 4). The surviving order is 3 or 5.
CoverAction classify_cover_order(const IntMatrix& m);

struct EigenPair {
  int k1 = 0;
  int k2 = 0;
  friend bool operator==(const EigenPair&, const EigenPair&) = default;
  friend auto operator<=>(const EigenPair&, const EigenPair&) = default;
};

/// Smallest pair in the orbit under g -> g^m (gcd(m, I) = 1) and coordinate swap.
EigenPair normalize_pair(EigenPair p, int order);

/// True when {k1, k2, -k1, -k2} covers each unit residue mod I equally often,
/// i.e. the pair can be the holomorphic half of a rank-4 lattice action.
bool realizable_on_rank4(EigenPair p, int order);

struct EigenPairClassification {
  int order = 0;
  std::vector<EigenPair> raw;                  // all determinant-compatible pairs
  std::vector<EigenPair> admissible;           // raw pairs surviving the rank-4 exclusion
  std::vector<EigenPair> normalized;           // classes of admissible pairs
  std::vector<EigenPair> excluded_normalized;  // classes removed by the exclusion
};

EigenPairClassification admissible_eigen_pairs(int order);

/// Induced action on the second exterior power, basis e_i ^ e_j (i < j) in
/// lexicographic order.
IntMatrix wedge2(const IntMatrix& m);

struct Wedge2Ranks {
  std::size_t invariant = 0;
  std::size_t complement = 0;
};

/// Throws InfiniteOrder when M does not have finite order.
Wedge2Ranks wedge2_invariant_rank(const IntMatrix& m);

/// 4 / phi(I). Throws UnsupportedOrder.
int module_rank(int order);

/// Multiplicity of each cyclotomic factor Phi_d in the characteristic
/// polynomial, found by exact division. Throws InvalidInput when the
/// polynomial is not a product of cyclotomic polynomials of order <= max_order.
std::map<int, int> cyclotomic_factorization(const IntPoly& charpoly, int max_order = 64);

/// A Z-basis of Z^4 of the form {v, Mv, M^2 v, M^3 v} (I = 5) or
/// {v1, Mv1, v2, Mv2} (I = 3), as matrix columns. Throws NotFree when the
/// bounded search fails.
IntMatrix free_basis(const CoverAction& action, int search_radius = 2);

}  // namespace conelab
