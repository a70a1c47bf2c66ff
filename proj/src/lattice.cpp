#include "conelab/lattice.hpp"

#include <map>
#include <set>

namespace conelab {

IntegralLattice::IntegralLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() == 0) throw Error(ErrorKind::InvalidInput, "lattice rank must be at least 1");
  if (!gram_.square()) throw Error(ErrorKind::InvalidInput, "Gram matrix is not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorKind::InvalidInput,
                    "Gram matrix is not symmetric: gram[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] = " + to_string(gram_(i, j)) + " but gram[" + std::to_string(j) + "][" +
                        std::to_string(i) + "] = " + to_string(gram_(j, i)));
      }
  if (!labels_.empty() && labels_.size() != gram_.rows()) {
    throw Error(ErrorKind::InvalidInput, "label count does not match rank");
  }
}

void IntegralLattice::require_vector(std::span<const Int> v) const {
  if (v.size() != rank()) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " in a lattice of rank " + std::to_string(rank()));
  }
}

Int IntegralLattice::pair(std::span<const Int> u, std::span<const Int> v) const {
  require_vector(u);
  require_vector(v);
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

IntVector IntegralLattice::gram_times(const LatticeVector& v) const {
  require_vector(v);
  return gram_ * v;
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return IntegralLattice(std::move(g), std::move(labels));
}

LatticeInvariants lattice_invariants(const IntegralLattice& lattice) {
  LatticeInvariants inv;
  inv.rank = lattice.rank();
  inv.det = linalg::determinant(lattice.gram());
  inv.even = true;
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (lattice.gram()(i, i) % 2 != 0) inv.even = false;
  inv.signature = linalg::inertia(to_rational(lattice.gram()));
  return inv;
}

bool verify_isometry(const IntegralLattice& lattice, const IntMatrix& matrix) {
  if (matrix.rows() != lattice.rank() || matrix.cols() != lattice.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "isometry candidate has shape " + std::to_string(matrix.rows()) +
                                                  "x" + std::to_string(matrix.cols()) + " for rank " +
                                                  std::to_string(lattice.rank()));
  }
  if (matrix.transposed() * lattice.gram() * matrix != lattice.gram()) return false;
  const Int det = linalg::determinant(matrix);
  return det == 1 || det == -1;
}

Isometry Isometry::verified(const IntegralLattice& lattice, IntMatrix matrix) {
  if (!verify_isometry(lattice, matrix)) {
    throw Error(ErrorKind::NotAnIsometry, "matrix does not preserve the Gram form");
  }
  return Isometry(std::move(matrix));
}

Isometry Isometry::identity(std::size_t rank) { return Isometry(IntMatrix::identity(rank)); }

Isometry Isometry::inverse() const { return Isometry(linalg::unimodular_inverse(matrix_)); }

GroupAction group_closure(const IntegralLattice& lattice, std::span<const IntMatrix> generators,
                          std::size_t cap) {
  std::vector<Isometry> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(Isometry::verified(lattice, g));

  GroupAction group;
  group.elements.push_back(Isometry::identity(lattice.rank()));
  std::set<IntMatrix> seen{group.elements.front().matrix()};
  // Breadth-first: every element is a word in the generators; finiteness
  // makes closure under products sufficient for closure under inverses.
  for (std::size_t next = 0; next < group.elements.size(); ++next) {
    for (const auto& g : gens) {
      Isometry h = group.elements[next].compose(g);
      if (seen.insert(h.matrix()).second) {
        if (group.elements.size() >= cap) {
          throw Error(ErrorKind::CapExceeded,
                      "group closure exceeded " + std::to_string(cap) + " elements");
        }
        group.elements.push_back(std::move(h));
      }
    }
  }
  return group;
}

std::vector<LatticeVector> Sublattice::vectors() const {
  std::vector<LatticeVector> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) out.push_back(basis.column(j));
  return out;
}

namespace {

Sublattice with_gram(const IntegralLattice& lattice, IntMatrix basis) {
  Sublattice s;
  s.gram = basis.transposed() * lattice.gram() * basis;
  s.basis = std::move(basis);
  return s;
}

}  // namespace

Sublattice fixed_sublattice(const IntegralLattice& lattice, const GroupAction& group) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Int>> rows;
  const IntMatrix id = IntMatrix::identity(n);
  for (const auto& g : group.elements) {
    if (g.rank() != n) throw Error(ErrorKind::DimensionMismatch, "group element rank");
    const IntMatrix diff = g.matrix() - id;
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(diff.row(i).begin(), diff.row(i).end());
  }
  IntMatrix stacked = rows.empty() ? IntMatrix(1, n) : IntMatrix::from_rows(rows);
  return with_gram(lattice, linalg::integer_kernel(stacked));
}

Sublattice orthogonal_complement(const IntegralLattice& lattice, const IntMatrix& basis) {
  if (basis.cols() > 0 && basis.rows() != lattice.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "sublattice basis rows must equal the lattice rank");
  }
  if (basis.cols() == 0) return with_gram(lattice, IntMatrix::identity(lattice.rank()));
  const IntMatrix functionals = basis.transposed() * lattice.gram();
  return with_gram(lattice, linalg::integer_kernel(functionals));
}

bool is_saturated(const IntMatrix& basis) {
  if (basis.cols() == 0) return true;
  const auto snf = linalg::smith_normal_form(basis);
  for (std::size_t i = 0; i < basis.cols(); ++i)
    if (snf.diagonal(i, i) != 1) return false;
  return true;
}

Int DiscriminantData::order() const {
  Int o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

IntVector DiscriminantData::coordinates_of_functional(const IntVector& y) const {
  IntVector coords(invariant_factors.size());
  for (std::size_t k = 0; k < invariant_factors.size(); ++k) {
    Int s = 0;
    const auto row = smith_left.row(first_factor_row + k);
    for (std::size_t j = 0; j < y.size(); ++j) s += row[j] * y[j];
    coords[k] = mod(s, invariant_factors[k]);
  }
  return coords;
}

DiscriminantData discriminant_group(const IntegralLattice& lattice) {
  if (linalg::determinant(lattice.gram()) == 0) {
    throw Error(ErrorKind::DegenerateLattice, "Gram determinant is zero");
  }
  const auto snf = linalg::smith_normal_form(lattice.gram());
  DiscriminantData data;
  data.smith_left = snf.left;
  const std::size_t n = lattice.rank();
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = snf.diagonal(i, i);
    if (d == 1) continue;
    if (first) {
      data.first_factor_row = i;
      first = false;
    }
    data.invariant_factors.push_back(d);
    RatVector gen(n);
    for (std::size_t r = 0; r < n; ++r) gen[r] = Rational(snf.right(r, i), d);
    data.dual_generators.push_back(std::move(gen));
  }
  return data;
}

DiscriminantAction discriminant_action(const IntegralLattice& lattice, const DiscriminantData& data,
                                       const Isometry& isometry) {
  if (isometry.rank() != lattice.rank()) throw Error(ErrorKind::DimensionMismatch, "isometry rank");
  const RatMatrix m = to_rational(isometry.matrix());
  const RatMatrix g = to_rational(lattice.gram());
  const std::size_t k = data.dual_generators.size();
  DiscriminantAction out;
  out.induced = IntMatrix(k, k);
  out.is_identity = true;
  for (std::size_t i = 0; i < k; ++i) {
    const RatVector image = m * data.dual_generators[i];
    RatVector diff(image.size());
    for (std::size_t r = 0; r < image.size(); ++r) diff[r] = image[r] - data.dual_generators[i][r];
    if (!is_integral(diff)) out.is_identity = false;
    const RatVector functional = g * image;
    if (!is_integral(functional)) {
      throw Error(ErrorKind::NotAnIsometry, "image of a dual vector left the dual lattice");
    }
    IntVector y(functional.size());
    for (std::size_t r = 0; r < y.size(); ++r) y[r] = numerator(functional[r]);
    const IntVector coords = data.coordinates_of_functional(y);
    for (std::size_t j = 0; j < k; ++j) out.induced(j, i) = coords[j];
  }
  return out;
}

DiscriminantAction discriminant_action(const IntegralLattice& lattice, const Isometry& isometry) {
  return discriminant_action(lattice, discriminant_group(lattice), isometry);
}

}  // namespace conelab
