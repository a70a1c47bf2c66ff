#include "conelab/roots.hpp"

#include <algorithm>

namespace conelab {

Root Root::verified(const IntegralLattice& lattice, LatticeVector v) {
  lattice.require_vector(v);
  const Int sq = lattice.square(v);
  if (sq != -2) throw Error(ErrorKind::NotARoot, "vector has square " + to_string(sq) + ", expected -2");
  return Root(std::move(v));
}

LatticeVector reflect(const IntegralLattice& lattice, const Root& root, const LatticeVector& d) {
  const Int p = lattice.pair(d, root.vector());
  LatticeVector out = d;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += p * root.vector()[i];
  return out;
}

Isometry reflection_matrix(const IntegralLattice& lattice, const Root& root) {
  const std::size_t n = lattice.rank();
  const IntVector gc = lattice.gram_times(root.vector());
  IntMatrix m = IntMatrix::identity(n);
  // Column j is r_C(e_j) = e_j + (e_j . C) C.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += root.vector()[i] * gc[j];
  return Isometry::verified(lattice, std::move(m));
}

void short_vectors(const RatMatrix& form, const Rational& bound,
                   const std::function<bool(const IntVector&)>& visit) {
  const std::size_t n = form.rows();
  if (n == 0 || bound < 0) return;
  const linalg::Cholesky chol = linalg::rational_cholesky(form);
  IntVector x(n, Int(0));
  bool stop = false;

  // Level i fixes x_i given x_{i+1..n-1}; the feasible x_i form an interval
  // around the center because the level term is a convex quadratic.
  std::function<void(std::size_t, const Rational&)> level = [&](std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= chol.upper(i, j) * x[j];
    const Rational& q = chol.diag[i];
    auto try_value = [&](const Int& v) -> bool {
      const Rational delta = Rational(v) - center;
      const Rational used = q * delta * delta;
      if (used > remaining) return false;
      x[i] = v;
      if (i == 0) {
        if (!visit(x)) stop = true;
      } else {
        level(i - 1, remaining - used);
      }
      return true;
    };
    const Int start = floor(center);
    for (Int v = start; !stop && try_value(v); --v) {
    }
    for (Int v = start + 1; !stop && try_value(v); ++v) {
    }
    x[i] = 0;
  };
  level(n - 1, bound);
}

std::vector<IntVector> short_vectors(const RatMatrix& form, const Rational& bound) {
  std::vector<IntVector> out;
  short_vectors(form, bound, [&](const IntVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

LatticeVector canonical_sign(const LatticeVector& v) {
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c > 0) return v;
    LatticeVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return neg;
  }
  return v;
}

std::vector<Root> nodal_filter(const IntegralLattice& lattice, std::span<const Root> roots,
                               std::span<const Root> excluded) {
  std::vector<Root> out;
  for (const auto& c : roots) {
    bool keep = true;
    for (const auto& e : excluded) {
      if (c == e || lattice.pair(c.vector(), e.vector()) != 0) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(c);
  }
  return out;
}

std::vector<Root> enumerate_roots(const IntegralLattice& lattice, const LatticeVector& h, const Int& bound,
                                  std::span<const Root> excluded) {
  lattice.require_vector(h);
  if (!lattice_invariants(lattice).hyperbolic()) {
    throw Error(ErrorKind::NotHyperbolic, "root enumeration needs signature (1, rank - 1, 0)");
  }
  const Int hh = lattice.square(h);
  if (hh <= 0) throw Error(ErrorKind::NonPositiveSquare, "polarization has square " + to_string(hh));
  if (bound < 0) throw Error(ErrorKind::InvalidInput, "height bound must be nonnegative");

  // Q(x) = 2 (x.h)^2 / (h.h) - (x.x) is positive definite because h^perp is
  // negative definite. A root of height k has Q = 2 + 2 k^2 / (h.h).
  const std::size_t n = lattice.rank();
  const IntVector gh = lattice.gram_times(h);
  RatMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q(i, j) = Rational(2 * gh[i] * gh[j], hh) - Rational(lattice.gram()(i, j));
  const Rational limit = Rational(2 * bound * bound, hh) + 2;

  std::vector<std::pair<Int, Root>> found;
  short_vectors(q, limit, [&](const IntVector& x) {
    if (lattice.square(x) != -2) return true;
    const Int height = lattice.pair(x, h);
    if (height < 0 || height > bound) return true;
    if (height == 0 && canonical_sign(x) != x) return true;
    found.emplace_back(height, Root::verified(lattice, x));
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Root> roots;
  roots.reserve(found.size());
  for (auto& [height, root] : found) roots.push_back(std::move(root));
  return nodal_filter(lattice, roots, excluded);
}

WalkResult chamber_walk(const IntegralLattice& lattice, std::span<const Root> roots, const LatticeVector& d,
                        std::size_t cap) {
  lattice.require_vector(d);
  WalkResult result{d, {}, 0};
  std::vector<IntVector> functionals;
  functionals.reserve(roots.size());
  for (const auto& c : roots) functionals.push_back(lattice.gram_times(c.vector()));

  while (true) {
    std::size_t best = roots.size();
    Int most_negative = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Int p = dot(result.final, functionals[i]);
      if (p < most_negative) {
        most_negative = p;
        best = i;
      }
    }
    if (best == roots.size()) return result;
    if (result.steps == cap) {
      throw Error(ErrorKind::CapExceeded, "chamber walk did not settle within " + std::to_string(cap) + " steps");
    }
    const auto& c = roots[best].vector();
    for (std::size_t i = 0; i < c.size(); ++i) result.final[i] += most_negative * c[i];
    result.word.push_back(best);
    ++result.steps;
  }
}

LatticeVector apply_word(const IntegralLattice& lattice, std::span<const Root> roots,
                         std::span<const std::size_t> word, const LatticeVector& d) {
  LatticeVector v = d;
  for (const auto idx : word) {
    if (idx >= roots.size()) throw Error(ErrorKind::InvalidInput, "walk word index out of range");
    v = reflect(lattice, roots[idx], v);
  }
  return v;
}

IntMatrix word_matrix(const IntegralLattice& lattice, std::span<const Root> roots,
                      std::span<const std::size_t> word) {
  IntMatrix m = IntMatrix::identity(lattice.rank());
  for (const auto idx : word) {
    if (idx >= roots.size()) throw Error(ErrorKind::InvalidInput, "walk word index out of range");
    m = reflection_matrix(lattice, roots[idx]).matrix() * m;
  }
  return m;
}

Root conjugate_root(const IntegralLattice& lattice, const Isometry& isometry, const Root& root) {
  const Isometry inv = isometry.inverse();
  Root conjugated = Root::verified(lattice, inv.apply(root.vector()));
  const IntMatrix lhs = inv.matrix() * reflection_matrix(lattice, root).matrix() * isometry.matrix();
  if (lhs != reflection_matrix(lattice, conjugated).matrix()) {
    throw Error(ErrorKind::NotAnIsometry, "conjugation identity failed; input is not an isometry");
  }
  return conjugated;
}

}  // namespace conelab
