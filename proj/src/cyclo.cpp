#include "conelab/cyclo.hpp"

#include "conelab/lattice.hpp"
#include "conelab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace conelab {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void require_supported(int order) {
  if (order != 3 && order != 5) {
    throw Error(ErrorKind::UnsupportedOrder,
                "order " + std::to_string(order) + " is outside {3, 5}");
  }
}

int positive_mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

int euler_phi(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidInput, "euler_phi needs a positive argument");
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& a, const IntPoly& b) {
  IntPoly divisor = b;
  trim(divisor);
  if (divisor.empty() || divisor.back() != 1) {
    throw Error(ErrorKind::InvalidInput, "divisor must be monic");
  }
  IntPoly r = a;
  trim(r);
  if (r.size() < divisor.size()) return {{}, r};
  IntPoly q(r.size() - divisor.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int c = r[k + divisor.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) r[k + j] -= c * divisor[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

IntPoly cyclotomic_polynomial(int n) {
  if (n <= 0) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  IntPoly p(static_cast<std::size_t>(n) + 1, Int(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = divide_monic(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

CyclotomicElement::CyclotomicElement(int order, std::vector<Int> coeffs) : order_(order) {
  require_supported(order);
  const auto phi = static_cast<std::size_t>(euler_phi(order));
  IntPoly reduced = divide_monic(coeffs, cyclotomic_polynomial(order)).second;
  reduced.resize(phi, Int(0));
  coeffs_ = std::move(reduced);
}

CyclotomicElement CyclotomicElement::zeta(int order, int power) {
  require_supported(order);
  std::vector<Int> c(static_cast<std::size_t>(positive_mod(power, order)) + 1, Int(0));
  c.back() = 1;
  return {order, std::move(c)};
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& x) { return x == 0; });
}

CyclotomicElement CyclotomicElement::galois(int k) const {
  if (std::gcd(positive_mod(k, order_), order_) != 1) {
    throw Error(ErrorKind::InvalidInput, "Galois exponent must be a unit modulo the order");
  }
  std::vector<Int> acc(static_cast<std::size_t>(order_), Int(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    acc[static_cast<std::size_t>(positive_mod(static_cast<long long>(j) * k, order_))] += coeffs_[j];
  }
  return {order_, std::move(acc)};
}

Int CyclotomicElement::norm() const {
  CyclotomicElement prod = one(order_);
  for (int k = 1; k < order_; ++k)
    if (std::gcd(k, order_) == 1) prod = prod * galois(k);
  for (std::size_t j = 1; j < prod.coeffs_.size(); ++j) {
    if (prod.coeffs_[j] != 0) throw Error(ErrorKind::InvalidInput, "norm is not rational");
  }
  return prod.coeffs_[0];
}

Int CyclotomicElement::trace() const {
  CyclotomicElement sum = zero(order_);
  for (int k = 1; k < order_; ++k)
    if (std::gcd(k, order_) == 1) sum = sum + galois(k);
  return sum.coeffs_[0];
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::OrderMismatch, "adding elements of different orders");
  std::vector<Int> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return {a.order_, std::move(c)};
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::OrderMismatch, "subtracting elements of different orders");
  std::vector<Int> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return {a.order_, std::move(c)};
}

CyclotomicElement operator-(const CyclotomicElement& a) {
  std::vector<Int> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return {a.order_, std::move(c)};
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::OrderMismatch, "multiplying elements of different orders");
  return {a.order_, multiply(a.coeffs_, b.coeffs_)};
}

CyclotomicElement operator*(const Int& s, const CyclotomicElement& a) {
  std::vector<Int> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return {a.order_, std::move(c)};
}

CycloArithmetic cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::OrderMismatch, "operands have different orders");
  return {a + b, a * b, a.conjugate(), a.norm()};
}

IntMatrix companion_matrix(const IntPoly& monic) {
  IntPoly p = monic;
  trim(p);
  if (p.size() < 2 || p.back() != 1) throw Error(ErrorKind::InvalidInput, "companion needs a monic polynomial");
  const std::size_t n = p.size() - 1;
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

bool annihilator_check(const IntMatrix& m, int order) {
  require_supported(order);
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "annihilator check needs a square matrix");
  return linalg::evaluate(cyclotomic_polynomial(order), m).is_zero();
}

std::map<int, int> cyclotomic_factorization(const IntPoly& charpoly, int max_order) {
  IntPoly rest = charpoly;
  trim(rest);
  std::map<int, int> mult;
  for (int d = 1; d <= max_order && rest.size() > 1; ++d) {
    const IntPoly phi = cyclotomic_polynomial(d);
    while (rest.size() >= phi.size()) {
      auto [q, r] = divide_monic(rest, phi);
      if (!r.empty()) break;
      rest = std::move(q);
      ++mult[d];
    }
  }
  if (rest.size() != 1 || rest[0] != 1) {
    throw Error(ErrorKind::InvalidInput, "characteristic polynomial is not a product of cyclotomic factors");
  }
  return mult;
}

unsigned matrix_order(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "order of a non-square matrix");
  std::map<int, int> factors;
  try {
    factors = cyclotomic_factorization(linalg::characteristic_polynomial(m));
  } catch (const Error&) {
    return 0;
  }
  unsigned l = 1;
  for (const auto& [d, k] : factors) l = std::lcm(l, static_cast<unsigned>(d));
  if (!linalg::power(m, l).is_identity()) return 0;  // cyclotomic but not semisimple
  // l is a multiple of the true order; take the least divisor that works.
  for (unsigned k = 1; k <= l; ++k)
    if (l % k == 0 && linalg::power(m, k).is_identity()) return k;
  return l;
}

CoverAction classify_cover_order(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "cover action must be a nonempty square matrix");
  }
  const unsigned ord = matrix_order(m);
  if (ord == 0) throw Error(ErrorKind::InfiniteOrder, "matrix has infinite order");
  const IntMatrix shifted = m - IntMatrix::identity(m.rows());
  if (linalg::determinant(shifted) == 0) {
    throw Error(ErrorKind::FixedDirection, "det(M - id) = 0: the action fixes a direction");
  }
  if (ord % 2 == 0) throw Error(ErrorKind::EvenOrder, "order " + std::to_string(ord) + " is even");
  const int phi = euler_phi(static_cast<int>(ord));
  if (4 % phi != 0) {
    throw Error(ErrorKind::RankObstruction,
                "phi(" + std::to_string(ord) + ") = " + std::to_string(phi) + " does not divide 4");
  }
  if (m.rows() != 4) {
    throw Error(ErrorKind::RankObstruction,
                "lattice rank " + std::to_string(m.rows()) + " is not 4");
  }
  const int order = static_cast<int>(ord);
  if (!annihilator_check(m, order)) {
    throw Error(ErrorKind::RankObstruction, "Phi_I(M) is not zero");
  }
  return {m, order};
}

EigenPair normalize_pair(EigenPair p, int order) {
  require_supported(order);
  EigenPair best{order, order};
  for (int u = 1; u < order; ++u) {
    if (std::gcd(u, order) != 1) continue;
    const EigenPair s{positive_mod(static_cast<long long>(u) * p.k1, order),
                      positive_mod(static_cast<long long>(u) * p.k2, order)};
    best = std::min({best, s, EigenPair{s.k2, s.k1}});
  }
  return best;
}

bool realizable_on_rank4(EigenPair p, int order) {
  const int phi = euler_phi(order);
  if (4 % phi != 0) return false;
  std::map<int, int> count;
  for (int k : {p.k1, p.k2, -p.k1, -p.k2}) ++count[positive_mod(k, order)];
  for (int u = 1; u < order; ++u) {
    if (std::gcd(u, order) != 1) continue;
    if (count[u] != 4 / phi) return false;
  }
  return true;
}

EigenPairClassification admissible_eigen_pairs(int order) {
  require_supported(order);
  EigenPairClassification out;
  out.order = order;
  for (int k1 = 1; k1 < order; ++k1)
    for (int k2 = 1; k2 < order; ++k2) {
      if (std::gcd(k1, order) != 1 || std::gcd(k2, order) != 1) continue;
      if ((k1 + k2) % order != 1 % order) continue;
      out.raw.push_back({k1, k2});
    }
  for (const auto& p : out.raw) {
    const EigenPair n = normalize_pair(p, order);
    const bool realizable = realizable_on_rank4(p, order);
    auto& bucket = realizable ? out.normalized : out.excluded_normalized;
    if (realizable) out.admissible.push_back(p);
    if (std::find(bucket.begin(), bucket.end(), n) == bucket.end()) bucket.push_back(n);
  }
  std::sort(out.normalized.begin(), out.normalized.end());
  std::sort(out.excluded_normalized.begin(), out.excluded_normalized.end());
  return out;
}

IntMatrix wedge2(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "exterior square of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  IntMatrix w(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto [i, j] = idx[r];
      const auto [k, l] = idx[c];
      w(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  return w;
}

Wedge2Ranks wedge2_invariant_rank(const IntMatrix& m) {
  if (matrix_order(m) == 0) throw Error(ErrorKind::InfiniteOrder, "matrix has infinite order");
  const IntMatrix w = wedge2(m);
  const IntMatrix kernel = linalg::integer_kernel(w - IntMatrix::identity(w.rows()));
  return {kernel.cols(), w.rows() - kernel.cols()};
}

int module_rank(int order) {
  require_supported(order);
  return 4 / euler_phi(order);
}

namespace {

// Box [-r, r]^4 minus the origin, coordinate vectors first.
std::vector<IntVector> search_box(int radius) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector e(4, Int(0));
    e[i] = 1;
    out.push_back(e);
  }
  const int w = 2 * radius + 1;
  int total = w * w * w * w;
  for (int code = 0; code < total; ++code) {
    IntVector v(4);
    int c = code;
    bool zero = true;
    for (std::size_t i = 0; i < 4; ++i) {
      v[i] = (c % w) - radius;
      c /= w;
      if (v[i] != 0) zero = false;
    }
    if (zero) continue;
    if (std::find(out.begin(), out.begin() + 4, v) != out.begin() + 4) continue;
    out.push_back(std::move(v));
  }
  return out;
}

bool unimodular_columns(const std::vector<IntVector>& cols) {
  const Int det = linalg::determinant(IntMatrix::from_columns(4, cols));
  return det == 1 || det == -1;
}

}  // namespace

IntMatrix free_basis(const CoverAction& action, int search_radius) {
  if (action.matrix.rows() != 4 || !action.matrix.square()) {
    throw Error(ErrorKind::DimensionMismatch, "free basis search needs a 4x4 action");
  }
  const IntMatrix& m = action.matrix;
  const auto box = search_box(search_radius);
  if (action.order == 5) {
    for (const auto& v : box) {
      std::vector<IntVector> cols{v};
      for (int k = 1; k < 4; ++k) cols.push_back(m * cols.back());
      if (unimodular_columns(cols)) return IntMatrix::from_columns(4, cols);
    }
  } else if (action.order == 3) {
    for (const auto& v1 : box) {
      const IntVector mv1 = m * v1;
      if (!is_saturated(IntMatrix::from_columns(4, {v1, mv1}))) continue;
      for (const auto& v2 : box) {
        std::vector<IntVector> cols{v1, mv1, v2, m * v2};
        if (unimodular_columns(cols)) return IntMatrix::from_columns(4, cols);
      }
    }
  } else {
    require_supported(action.order);
  }
  throw Error(ErrorKind::NotFree, "no Z[zeta]-basis found within radius " + std::to_string(search_radius));
}

}  // namespace conelab
