#include "conelab/cones.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace conelab {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational rdot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int idot(const IntVector& a, const IntVector& b) { return dot(a, b); }

IntMatrix rows_matrix(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

void require_length(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(got) + " in ambient dimension " + std::to_string(expected));
  }
}

std::vector<IntVector> canonical_generators(std::size_t n, const std::vector<RatVector>& gens) {
  std::vector<IntVector> out;
  std::set<IntVector> seen;
  for (const auto& g : gens) {
    require_length(n, g.size());
    IntVector p = primitive_on_ray(g);
    if (std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; })) {
      throw Error(ErrorKind::InvalidInput, "cone generators must be nonzero");
    }
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<RatVector> to_rational_all(const std::vector<IntVector>& v) {
  std::vector<RatVector> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_rational(x));
  return out;
}

}  // namespace

RationalCone::RationalCone(std::size_t ambient_dim, const std::vector<RatVector>& generators)
    : ambient_dim_(ambient_dim) {
  if (ambient_dim_ > kMaxConeDimension) {
    throw Error(ErrorKind::DimensionLimit, "ambient dimension " + std::to_string(ambient_dim_) +
                                               " exceeds the limit " + std::to_string(kMaxConeDimension));
  }
  generators_ = canonical_generators(ambient_dim_, generators);
  build();
}

RationalCone::RationalCone(std::size_t ambient_dim, const std::vector<IntVector>& generators)
    : RationalCone(ambient_dim, to_rational_all(generators)) {}

void RationalCone::build() {
  const std::size_t n = ambient_dim_;
  const IntMatrix gens = rows_matrix(n, generators_);
  const IntMatrix kernel = linalg::integer_kernel(gens);
  for (std::size_t j = 0; j < kernel.cols(); ++j) equalities_.push_back(kernel.column(j));
  dimension_ = n - kernel.cols();
  if (dimension_ == 0) return;

  // A basis of the span chosen greedily among the generators.
  std::vector<IntVector> basis;
  for (const auto& g : generators_) {
    basis.push_back(g);
    if (linalg::rank(rows_matrix(n, basis)) < basis.size()) basis.pop_back();
    if (basis.size() == dimension_) break;
  }

  // Each facet is spanned by dimension - 1 independent generators; its normal
  // is the unique direction of the span orthogonal to them.
  std::set<IntVector> found;
  for_each_subset(generators_.size(), dimension_ - 1, [&](const std::vector<std::size_t>& subset) {
    IntMatrix m(subset.size(), dimension_);
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t t = 0; t < dimension_; ++t) m(i, t) = idot(generators_[subset[i]], basis[t]);
    const IntMatrix ker = linalg::integer_kernel(m);
    if (ker.cols() != 1) return true;
    IntVector normal(n, Int(0));
    for (std::size_t t = 0; t < dimension_; ++t)
      for (std::size_t i = 0; i < n; ++i) normal[i] += ker(t, 0) * basis[t][i];
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& g : generators_) {
      const int s = sign(idot(normal, g));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg == nonpos) return true;  // mixed signs, or a normal vanishing on the cone
    if (nonpos)
      for (auto& x : normal) x = -x;
    found.insert(primitive_on_ray(normal));
    return true;
  });
  facets_.assign(found.begin(), found.end());
}

RationalCone RationalCone::transformed(const RatMatrix& map) const {
  if (map.rows() != ambient_dim_ || map.cols() != ambient_dim_) {
    throw Error(ErrorKind::DimensionMismatch, "map shape does not match the ambient dimension");
  }
  std::vector<RatVector> images;
  images.reserve(generators_.size());
  for (const auto& g : generators_) images.push_back(map * to_rational(g));
  return RationalCone(ambient_dim_, images);
}

RationalCone RationalCone::transformed(const IntMatrix& map) const { return transformed(to_rational(map)); }

bool verify_membership(const RationalCone& cone, const RatVector& v, const Membership& m) {
  const auto& gens = cone.generators();
  if (m.member) {
    if (m.coefficients.size() != gens.size()) return false;
    RatVector sum(v.size(), Rational(0));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (m.coefficients[k] < 0) return false;
      for (std::size_t i = 0; i < v.size(); ++i) sum[i] += m.coefficients[k] * gens[k][i];
    }
    return sum == v;
  }
  if (m.separator.size() != v.size()) return false;
  for (const auto& g : gens) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += m.separator[i] * g[i];
    if (s < 0) return false;
  }
  Rational sv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sv += m.separator[i] * v[i];
  return sv < 0;
}

Membership cone_contains(const RationalCone& cone, const RatVector& v) {
  require_length(cone.ambient_dim(), v.size());
  Membership out;
  auto finish = [&]() {
    if (!verify_membership(cone, v, out)) throw std::logic_error("cone membership certificate failed to verify");
    return out;
  };
  for (const auto& f : cone.equalities()) {
    const Rational s = rdot(f, v);
    if (s == 0) continue;
    out.separator = to_rational(f);
    if (s > 0)
      for (auto& x : out.separator) x = -x;
    return finish();
  }
  for (const auto& f : cone.facets()) {
    if (rdot(f, v) < 0) {
      out.separator = to_rational(f);
      return finish();
    }
  }

  // v satisfies the H-description, so by Caratheodory it is a nonnegative
  // combination of some basis of the span chosen among the generators.
  const auto& gens = cone.generators();
  out.member = true;
  out.coefficients.assign(gens.size(), Rational(0));
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return finish();
  bool solved = false;
  for_each_subset(gens.size(), cone.dimension(), [&](const std::vector<std::size_t>& subset) {
    RatMatrix m(cone.ambient_dim(), subset.size());
    for (std::size_t i = 0; i < cone.ambient_dim(); ++i)
      for (std::size_t t = 0; t < subset.size(); ++t) m(i, t) = gens[subset[t]][i];
    if (linalg::rank(m) != subset.size()) return true;
    const auto c = linalg::solve(m, v);
    if (!c || std::any_of(c->begin(), c->end(), [](const Rational& x) { return x < 0; })) return true;
    for (std::size_t t = 0; t < subset.size(); ++t) out.coefficients[subset[t]] = (*c)[t];
    solved = true;
    return false;
  });
  if (!solved) throw std::logic_error("no nonnegative combination found for a point satisfying all facets");
  return finish();
}

Membership cone_contains(const RationalCone& cone, const IntVector& v) { return cone_contains(cone, to_rational(v)); }

InteriorTest interior_contains(const RationalCone& cone, const RatVector& v) {
  require_length(cone.ambient_dim(), v.size());
  InteriorTest out;
  out.lower_dimensional = !cone.full_dimensional();
  for (const auto& f : cone.equalities())
    if (rdot(f, v) != 0) return out;
  for (const auto& f : cone.facets())
    if (rdot(f, v) <= 0) return out;
  out.inside = true;
  return out;
}

InteriorTest interior_contains(const RationalCone& cone, const IntVector& v) {
  return interior_contains(cone, to_rational(v));
}

std::optional<RatVector> fourier_motzkin(const RatMatrix& a, const RatVector& b) {
  const std::size_t p = a.cols();
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  using System = std::map<RatVector, Rational>;  // normalized coefficients -> tightest rhs

  // Stores c . x >= r after scaling c so that its first nonzero entry is +-1.
  // Returns false when a constant constraint is violated.
  auto add = [](System& sys, RatVector c, Rational r) {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) return r <= 0;
    const Rational scale = c[lead] > 0 ? c[lead] : Rational(-c[lead]);
    for (auto& x : c) x /= scale;
    r /= scale;
    auto [it, inserted] = sys.emplace(std::move(c), r);
    if (!inserted && r > it->second) it->second = r;
    return true;
  };

  System current;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RatVector c(a.row(i).begin(), a.row(i).end());
    if (!add(current, std::move(c), b[i])) return std::nullopt;
  }

  std::vector<System> stages(p);
  for (std::size_t j = p; j-- > 0;) {
    stages[j] = current;
    System next;
    std::vector<std::pair<RatVector, Rational>> pos, neg;
    for (const auto& [c, r] : current) {
      if (c[j] > 0)
        pos.emplace_back(c, r);
      else if (c[j] < 0)
        neg.emplace_back(c, r);
      else if (!add(next, c, r))
        return std::nullopt;
    }
    for (const auto& [cp, rp] : pos)
      for (const auto& [cn, rn] : neg) {
        const Rational wp = -cn[j];
        const Rational wn = cp[j];
        RatVector c(p);
        for (std::size_t i = 0; i < p; ++i) c[i] = wp * cp[i] + wn * cn[i];
        c[j] = 0;
        if (!add(next, std::move(c), wp * rp + wn * rn)) return std::nullopt;
      }
    current = std::move(next);
  }

  RatVector x(p, Rational(0));
  for (std::size_t j = 0; j < p; ++j) {
    std::optional<Rational> lower, upper;
    for (const auto& [c, r] : stages[j]) {
      if (c[j] == 0) continue;
      Rational rest = r;
      for (std::size_t i = 0; i < j; ++i) rest -= c[i] * x[i];
      const Rational bound = rest / c[j];
      if (c[j] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    if (lower && upper && *lower > *upper) throw std::logic_error("Fourier-Motzkin back-substitution is empty");
    if (lower)
      x[j] = *lower;
    else if (upper)
      x[j] = *upper;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < p; ++j) s += a(i, j) * x[j];
    if (s < b[i]) throw std::logic_error("Fourier-Motzkin solution violates a constraint");
  }
  return x;
}

DisjointnessResult interiors_disjoint(const RationalCone& k1, const RationalCone& k2) {
  if (k1.ambient_dim() != k2.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "cones live in different ambient dimensions");
  }
  const std::size_t n = k1.ambient_dim();
  std::vector<IntVector> eqs = k1.equalities();
  eqs.insert(eqs.end(), k2.equalities().begin(), k2.equalities().end());
  const IntMatrix param = linalg::integer_kernel(rows_matrix(n, eqs));  // common span = param * Z^m
  const std::size_t m = param.cols();

  // Strict homogeneous inequalities f . z > 0 become f . z >= 1.
  std::vector<IntVector> facets = k1.facets();
  facets.insert(facets.end(), k2.facets().begin(), k2.facets().end());
  RatMatrix a(facets.size(), m);
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t t = 0; t < m; ++t) {
      Int s = 0;
      for (std::size_t r = 0; r < n; ++r) s += facets[i][r] * param(r, t);
      a(i, t) = s;
    }
  const auto t = fourier_motzkin(a, RatVector(facets.size(), Rational(1)));
  DisjointnessResult out;
  if (!t) return out;

  RatVector z(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) z[r] += param(r, c) * (*t)[c];
  if (std::any_of(z.begin(), z.end(), [](const Rational& x) { return x != 0; })) z = to_rational(primitive_on_ray(z));
  if (!interior_contains(k1, z).inside || !interior_contains(k2, z).inside) {
    throw std::logic_error("overlap witness failed to verify");
  }
  out.disjoint = false;
  out.witness = std::move(z);
  return out;
}

CoverageReport fundamental_domain_check(const RationalCone& delta, const std::vector<RatMatrix>& group,
                                        const std::vector<RatVector>& samples) {
  const std::size_t n = delta.ambient_dim();
  std::vector<RatMatrix> inverses;
  inverses.reserve(group.size());
  for (const auto& g : group) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::DimensionMismatch, "group element shape");
    auto inv = linalg::inverse(g);
    if (!inv) throw Error(ErrorKind::InvalidInput, "group element is not invertible");
    inverses.push_back(std::move(*inv));
  }

  CoverageReport report;
  report.samples_total = samples.size();
  for (const auto& s : samples) {
    require_length(n, s.size());
    std::optional<std::size_t> cover;
    for (std::size_t i = 0; i < group.size() && !cover; ++i)
      if (cone_contains(delta, inverses[i] * s).member) cover = i;
    report.covering_element.push_back(cover);
    if (cover)
      ++report.samples_covered;
    else
      report.uncovered_witnesses.push_back(s);
  }

  std::vector<RationalCone> images;
  std::vector<std::vector<RatVector>> generator_images(group.size());
  images.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    images.push_back(delta.transformed(group[i]));
    for (const auto& g : delta.generators()) generator_images[i].push_back(group[i] * to_rational(g));
  }
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      if (generator_images[i] == generator_images[j]) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      auto res = interiors_disjoint(images[i], images[j]);
      if (!res.disjoint) report.overlap_witnesses.push_back({i, j, std::move(*res.witness)});
    }
  return report;
}

SemidirectReport semidirect_check(const IntegralLattice& lattice, const std::vector<Root>& roots,
                                  const std::vector<IntMatrix>& symmetries, const LatticeVector& probe,
                                  std::size_t max_length, std::size_t walk_cap) {
  lattice.require_vector(probe);
  const GroupAction p = group_closure(lattice, symmetries);
  std::set<IntMatrix> p_set;
  for (const auto& e : p.elements) p_set.insert(e.matrix());

  std::vector<IntMatrix> letters;
  for (const auto& c : roots) letters.push_back(reflection_matrix(lattice, c).matrix());
  for (const auto& s : symmetries) letters.push_back(s);

  SemidirectReport report;
  std::vector<std::size_t> word;
  std::function<void(const IntMatrix&)> visit = [&](const IntMatrix& w) {
    ++report.words_checked;
    try {
      const WalkResult walk = chamber_walk(lattice, roots, w * probe, walk_cap);
      const IntMatrix sigma = word_matrix(lattice, roots, walk.word) * w;
      if (!p_set.count(sigma)) report.failures.push_back({word, "remaining factor is not a chamber symmetry"});
    } catch (const Error& e) {
      report.failures.push_back({word, e.what()});
    }
    if (word.size() == max_length) return;
    for (std::size_t l = 0; l < letters.size(); ++l) {
      word.push_back(l);
      visit(letters[l] * w);
      word.pop_back();
    }
  };
  visit(IntMatrix::identity(lattice.rank()));
  return report;
}

}  // namespace conelab
