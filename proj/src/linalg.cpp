#include "conelab/linalg.hpp"

#include <utility>

namespace conelab::linalg {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

}  // namespace

Int determinant(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return row_reduce(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<RatMatrix> inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const auto inv = inverse(m);
  if (!inv) throw Error(ErrorKind::InvalidInput, "matrix is singular");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (denominator(x) != 1) throw Error(ErrorKind::InvalidInput, "matrix is not unimodular");
      out(i, j) = numerator(x);
    }
  return out;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve right-hand side");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(n);

  // Column operations on w, mirrored on u, bring w to column echelon form.
  auto combine = [&](std::size_t p, std::size_t j, const Int& s, const Int& t, const Int& x,
                     const Int& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j (old values)
    for (IntMatrix* mat : {&w, &u}) {
      for (std::size_t i = 0; i < mat->rows(); ++i) {
        const Int cp = (*mat)(i, p);
        const Int cj = (*mat)(i, j);
        (*mat)(i, p) = s * cp + t * cj;
        (*mat)(i, j) = x * cp + y * cj;
      }
    }
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m && pivot < n; ++r) {
    for (std::size_t j = pivot + 1; j < n; ++j) {
      if (w(r, j) == 0) continue;
      const Int a0 = w(r, pivot);
      const Int b0 = w(r, j);
      const Bezout bz = extended_gcd(a0, b0);
      combine(pivot, j, bz.s, bz.t, -b0 / bz.g, a0 / bz.g);
    }
    if (w(r, pivot) != 0) ++pivot;
  }

  IntMatrix kernel(n, n - pivot);
  for (std::size_t j = pivot; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) kernel(i, j - pivot) = u(i, j);
  return kernel;
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < n; ++j) d(dst, j) += f * d(src, j);
    for (std::size_t j = 0; j < m; ++j) u(dst, j) += f * u(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m; ++i) d(i, dst) += f * d(i, src);
    for (std::size_t i = 0; i < n; ++i) v(i, dst) += f * v(i, src);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int mag = boost::multiprecision::abs(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (!found) {
        return {u, d, v};
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_axpy(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_axpy(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }
  return {u, d, v};
}

std::vector<Int> characteristic_polynomial(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "characteristic polynomial");
  const std::size_t n = m.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix mk(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const IntMatrix amk = m * mk;
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / Int(k);
  }
  return c;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  require_square(m.rows(), m.cols(), "power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix evaluate(const std::vector<Int>& poly, const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "polynomial evaluation");
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix acc(m.rows(), m.cols());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Inertia inertia(RatMatrix a) {
  require_square(a.rows(), a.cols(), "inertia");
  const std::size_t n = a.rows();
  Inertia out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      std::size_t k = i + 1;
      while (k < n && a(k, k) == 0) ++k;
      if (k < n) {
        a.swap_rows(i, k);
        a.swap_cols(i, k);
      } else {
        std::size_t j = i + 1;
        while (j < n && a(i, j) == 0) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // a(i,i) = a(j,j) = 0 here, so adding row/column j to i yields 2 a(i,j).
        for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      }
    }
    const Rational p = a(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a(r, i) == 0) continue;
      const Rational f = a(r, i) / p;
      for (std::size_t c = i; c < n; ++c) a(r, c) -= f * a(i, c);
      for (std::size_t c = i; c < n; ++c) a(c, r) -= f * a(c, i);
    }
    if (p > 0) ++out.positive;
    else ++out.negative;
  }
  return out;
}

Cholesky rational_cholesky(const RatMatrix& form) {
  require_square(form.rows(), form.cols(), "cholesky");
  const std::size_t n = form.rows();
  RatMatrix a = form;
  Cholesky out{RatVector(n), RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = a(i, i);
    if (d <= 0) throw Error(ErrorKind::NotPositiveDefinite, "form has a non-positive pivot");
    out.diag[i] = d;
    out.upper(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) out.upper(i, j) = a(i, j) / d;
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = i + 1; l < n; ++l) a(k, l) -= a(k, i) * a(i, l) / d;
  }
  return out;
}

}  // namespace conelab::linalg
