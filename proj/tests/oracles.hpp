#pragma once

// Brute-force reference computations. Nothing here calls into the library:
// each routine works on plain machine integers or boost rationals so a test
// can compare two independent answers.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;
using Q = boost::multiprecision::cpp_rational;

inline i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec mul(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline Mat mul(const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat transpose(const Mat& m) {
  Mat t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline i64 pair(const Mat& gram, const Vec& u, const Vec& v) { return dot(u, mul(gram, v)); }

/// Cofactor expansion along the first row.
inline i64 det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 == 0 ? 1 : -1) * m[0][j] * det(minor);
  }
  return s;
}

inline i64 igcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

/// Calls f on every integer vector with entries in [-box, box].
template <class F>
void for_box(std::size_t n, i64 box, F&& f) {
  Vec x(n, -box);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) return;
    ++x[i];
  }
}

/// S*/S enumerated as the classes k / |det| in [0, 1)^n with G k = 0 mod |det|.
struct DualQuotient {
  i64 order = 0;
  std::vector<Vec> numerators;  // each class as k, meaning k / modulus
  i64 modulus = 1;

  /// Number of classes x with m x = 0.
  i64 killed_by(i64 m) const {
    i64 c = 0;
    for (const auto& k : numerators) {
      bool zero = true;
      for (i64 e : k) zero = zero && (m * e) % modulus == 0;
      c += zero;
    }
    return c;
  }
};

inline DualQuotient dual_quotient(const Mat& gram) {
  const std::size_t n = gram.size();
  const i64 d = std::abs(det(gram));
  if (d == 0) throw std::invalid_argument("degenerate");
  DualQuotient out;
  out.modulus = d;
  Vec k(n, 0);
  while (true) {
    const Vec gk = mul(gram, k);
    if (std::all_of(gk.begin(), gk.end(), [&](i64 v) { return v % d == 0; })) out.numerators.push_back(k);
    std::size_t i = 0;
    while (i < n && k[i] == d - 1) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
  out.order = static_cast<i64>(out.numerators.size());
  return out;
}

/// Whether M acts trivially on S*/S: M k = k mod |det| for every class.
inline bool acts_trivially(const Mat& gram, const Mat& m) {
  const DualQuotient q = dual_quotient(gram);
  for (const auto& k : q.numerators) {
    const Vec mk = mul(m, k);
    for (std::size_t i = 0; i < k.size(); ++i)
      if ((mk[i] - k[i]) % q.modulus != 0) return false;
  }
  return true;
}

inline Vec sign_canonical(Vec v) {
  for (i64 e : v) {
    if (e == 0) continue;
    if (e < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

/// Roots x with 0 <= (x . h) <= bound in the box, sign-canonical when (x . h) = 0.
inline std::set<Vec> roots_in_box(const Mat& gram, const Vec& h, i64 bound, i64 box) {
  std::set<Vec> out;
  for_box(gram.size(), box, [&](const Vec& x) {
    if (pair(gram, x, x) != -2) return;
    const i64 xh = pair(gram, x, h);
    if (xh < 0 || xh > bound) return;
    out.insert(xh == 0 ? sign_canonical(x) : x);
  });
  return out;
}

inline Vec reflect(const Mat& gram, const Vec& c, const Vec& d) {
  const i64 t = pair(gram, d, c);
  Vec out = d;
  for (std::size_t i = 0; i < d.size(); ++i) out[i] += t * c[i];
  return out;
}

/// Length of the shortest word in `roots` moving d into the closed chamber,
/// searched breadth-first up to max_length; -1 when none is found. `end`
/// receives the chamber point.
inline int shortest_chamber_word(const Mat& gram, const std::vector<Vec>& roots, const Vec& d, int max_length,
                                 Vec& end) {
  std::vector<Vec> layer{d};
  for (int len = 0; len <= max_length; ++len) {
    for (const auto& v : layer) {
      bool inside = true;
      for (const auto& c : roots) inside = inside && pair(gram, v, c) >= 0;
      if (inside) {
        end = v;
        return len;
      }
    }
    std::vector<Vec> next;
    for (const auto& v : layer)
      for (const auto& c : roots) next.push_back(reflect(gram, c, v));
    layer = std::move(next);
  }
  return -1;
}

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier, degree 0 first.
inline std::vector<Q> charpoly(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<Q> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Q>> mk(n, std::vector<Q>(n));  // M_k, starting from M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Q>> next(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Q s = (i == j) ? c[n - k + 1] : Q(0);
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
    mk = next;
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    c[n - k] = -tr / Q(static_cast<long long>(k));
  }
  return c;
}

/// Multiplicity of x = 1 as a root, by repeated synthetic division.
inline int multiplicity_of_one(std::vector<Q> p) {
  int mult = 0;
  while (p.size() > 1) {
    Q s = 0;
    for (const auto& x : p) s += x;
    if (s != 0) break;
    std::vector<Q> q(p.size() - 1);
    Q carry = 0;
    for (std::size_t i = p.size() - 1; i >= 1; --i) {
      carry += p[i];
      q[i - 1] = carry;
    }
    p = q;
    ++mult;
  }
  return mult;
}

/// Second exterior power from 2x2 minors, basis e_i ^ e_j (i < j) in lex order.
inline Mat wedge2(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  Mat w(idx.size(), Vec(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto [i, j] = idx[r];
      const auto [k, l] = idx[c];
      w[r][c] = m[i][k] * m[j][l] - m[j][k] * m[i][l];
    }
  return w;
}

/// x + y zeta as a pair; zeta^2 = -1 - zeta, conj(zeta) = zeta^2.
struct Eis {
  i64 x = 0, y = 0;
};
inline Eis operator*(Eis a, Eis b) {
  // (a0 + a1 z)(b0 + b1 z) = a0 b0 + (a0 b1 + a1 b0) z + a1 b1 (-1 - z)
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x - a.y * b.y};
}
inline Eis operator+(Eis a, Eis b) { return {a.x + b.x, a.y + b.y}; }
inline Eis conj(Eis a) { return {a.x - a.y, -a.y}; }
inline bool operator==(Eis a, Eis b) { return a.x == b.x && a.y == b.y; }

/// |x + y zeta|^2 through the complex embedding zeta = (-1 + i sqrt 3) / 2.
inline Q norm(Eis a) {
  const Q re = Q(a.x) - Q(a.y) / 2;
  const Q im2 = Q(3 * a.y * a.y) / 4;  // (y sqrt3 / 2)^2
  return re * re + im2;
}

/// Hermitian form as a full 2x2 matrix [[a, h], [conj h, d]].
using HMat = std::array<std::array<Eis, 2>, 2>;

inline HMat hmat(i64 a, i64 d, Eis h) { return {{{{Eis{a, 0}, h}}, {{conj(h), Eis{d, 0}}}}}; }

/// g^* H g by explicit matrix products.
inline HMat congruence(const HMat& g, const HMat& h) {
  HMat gs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gs[i][j] = conj(g[j][i]);
  auto prod = [](const HMat& a, const HMat& b) {
    HMat c;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
  };
  return prod(prod(gs, h), g);
}

inline Q herm_det(i64 a, i64 d, Eis h) { return Q(a * d) - norm(h); }

inline bool is_unit(Eis e) { return norm(e) == 1; }

/// Lexicographically smallest (a, d, h0, h1) over g with every coefficient in
/// [-box, box]. Columns are restricted to vectors with H(v) <= cap, which is
/// safe whenever cap bounds both diagonal entries of the minimum.
inline std::array<i64, 4> brute_reduce(i64 a, i64 d, Eis h, i64 box, i64 cap) {
  const HMat hm = hmat(a, d, h);
  struct Col {
    Eis u, v;
    i64 value;
  };
  std::vector<Col> cols;
  for_box(4, box, [&](const Vec& c) {
    const Eis u{c[0], c[1]}, v{c[2], c[3]};
    // H(u, v) = a N(u) + d N(v) + 2 Re(conj(u) h v)
    const HMat g{{{{u, Eis{}}}, {{v, Eis{}}}}};
    const Eis val = congruence(g, hm)[0][0];
    if (val.y != 0) throw std::logic_error("non-real diagonal");
    if (val.x <= cap && !(u.x == 0 && u.y == 0 && v.x == 0 && v.y == 0)) cols.push_back({u, v, val.x});
  });
  std::array<i64, 4> best{};
  bool found = false;
  for (const auto& c1 : cols)
    for (const auto& c2 : cols) {
      const Eis det = c1.u * c2.v + Eis{-1, 0} * (c2.u * c1.v);
      if (!is_unit(det)) continue;
      const HMat g{{{{c1.u, c2.u}}, {{c1.v, c2.v}}}};
      const HMat r = congruence(g, hm);
      const std::array<i64, 4> key{r[0][0].x, r[1][1].x, r[0][1].x, r[0][1].y};
      if (!found || key < best) best = key;
      found = true;
    }
  if (!found) throw std::logic_error("no unimodular pair in the box");
  return best;
}

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

/// Gauss-Jordan inverse; empty when singular.
inline QMat inverse(QMat m) {
  const std::size_t n = m.size();
  QMat inv(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Q piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Q f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline QVec apply(const QMat& m, const QVec& v) {
  QVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// Coefficients of v in a basis given as columns; v lies in the open
/// simplicial cone iff all are positive.
inline QVec simplicial_coefficients(const QMat& basis_columns, const QVec& v) {
  const QMat inv = inverse(basis_columns);
  if (inv.empty()) throw std::invalid_argument("singular basis");
  return apply(inv, v);
}

/// Outward-free facet normals of a full-dimensional cone in Q^3: cross
/// products of generator pairs with every generator on the nonnegative side.
inline std::vector<Vec> facets3(const std::vector<Vec>& gens) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Vec& a = gens[i];
      const Vec& b = gens[j];
      Vec n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (n == Vec{0, 0, 0}) continue;
      bool pos = true, neg = true;
      for (const auto& g : gens) {
        pos = pos && dot(n, g) >= 0;
        neg = neg && dot(n, g) <= 0;
      }
      if (neg && !pos)
        for (auto& x : n) x = -x;
      if (pos || neg) out.push_back(n);
    }
  return out;
}

inline Q qdot(const Vec& a, const QVec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Q(a[i]) * b[i];
  return s;
}

/// Membership in a full-dimensional cone in Q^3 by Caratheodory: some
/// independent triple has nonnegative Cramer coefficients.
inline bool in_cone3(const std::vector<Vec>& gens, const QVec& v) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) {
        const Mat cols = transpose({gens[i], gens[j], gens[k]});
        const i64 dt = det(cols);
        if (dt == 0) continue;
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r) {
          Mat qcols = transpose({gens[i], gens[j], gens[k]});
          QMat qm(3, QVec(3));
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) qm[a][b] = qcols[a][b];
          for (int a = 0; a < 3; ++a) qm[a][r] = v[a];
          // Cramer numerator by explicit 3x3 expansion
          const Q num = qm[0][0] * (qm[1][1] * qm[2][2] - qm[1][2] * qm[2][1]) -
                        qm[0][1] * (qm[1][0] * qm[2][2] - qm[1][2] * qm[2][0]) +
                        qm[0][2] * (qm[1][0] * qm[2][1] - qm[1][1] * qm[2][0]);
          ok = num / Q(dt) >= 0;
        }
        if (ok) return true;
      }
  return false;
}

/// Open angular sector of a pointed 2D cone with extreme rays (u, v), u
/// counterclockwise-before v: x is inside iff cross(u, x) > 0 and cross(x, v) > 0.
inline bool in_open_sector(const Vec& u, const Vec& v, const QVec& x) {
  const Q cu = Q(u[0]) * x[1] - Q(u[1]) * x[0];
  const Q cv = x[0] * Q(v[1]) - x[1] * Q(v[0]);
  return cu > 0 && cv > 0;
}

}  // namespace oracle
