#include "msla/matrix.hpp"

#include <stdexcept>

namespace msla {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  std::vector<Rational> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Rational> Matrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void Matrix::append_row(const std::vector<Rational>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("matrix: bad row length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix: shape mismatch");
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix: shape mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    Rational inv = 1 / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix null_space(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  Matrix basis(0, m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> x(m.cols());
    x[j] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      x[rr.pivot_cols[r]] = -rr.m.at(r, j);
    basis.append_row(x);
  }
  return basis;
}

Inertia inertia(const Matrix& sym) {
  std::size_t n = sym.rows();
  if (sym.cols() != n) throw std::invalid_argument("inertia: not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sym.at(i, j) != sym.at(j, i))
        throw std::invalid_argument("inertia: not symmetric");

  Matrix a = sym;
  Inertia out;
  auto add_row_col = [&](std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += a.at(src, j);
    for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += a.at(i, src);
  };
  auto swap_row_col = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, p), a.at(i, q));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i, i) == 0) {
      std::size_t d = i;
      while (d < n && a.at(d, d) == 0) ++d;
      if (d < n) {
        swap_row_col(i, d);
      } else {
        // All trailing diagonal entries vanish; a nonzero off-diagonal
        // entry (p, q) yields a nonzero diagonal after adding q into p.
        std::size_t p = n, q = n;
        for (std::size_t r = i; r < n && p == n; ++r)
          for (std::size_t c = r + 1; c < n; ++c)
            if (a.at(r, c) != 0) {
              p = r;
              q = c;
              break;
            }
        if (p == n) {
          out.zero += n - i;
          return out;
        }
        add_row_col(p, q);
        if (p != i) swap_row_col(i, p);
      }
    }
    Rational d = a.at(i, i);
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a.at(r, i) == 0) continue;
      Rational f = a.at(r, i) / d;
      for (std::size_t j = 0; j < n; ++j) a.at(r, j) -= f * a.at(i, j);
      for (std::size_t c = 0; c < n; ++c) a.at(c, r) -= f * a.at(c, i);
    }
  }
  return out;
}

Rational det(const Matrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det: not square");
  Matrix a = m;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rational inv = 1 / a.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c) == 0) continue;
      Rational f = a.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: not square");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (rr.m.at(i, i) != 1) throw std::domain_error("inverse: singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& m,
                                           const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
    x[rr.pivot_cols[r]] = rr.m.at(r, m.cols());
  return x;
}

std::vector<Rational> scaled(const std::vector<Rational>& v,
                             const Rational& c) {
  std::vector<Rational> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

std::vector<Rational> added(const std::vector<Rational>& a,
                            const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("added: length mismatch");
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace msla
