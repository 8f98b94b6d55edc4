#include "msla/subspace.hpp"

#include <stdexcept>

namespace msla {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  RrefResult rr = rref(rows);
  Matrix b(0, rows.cols());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    b.append_row(rr.m.row(i));
  s.basis_ = b;
  return s;
}

Subspace Subspace::span_rows(std::size_t ambient,
                             const std::vector<std::vector<Rational>>& rows) {
  Matrix m(0, ambient);
  for (const auto& r : rows) {
    if (r.size() != ambient)
      throw std::invalid_argument("subspace: row length != ambient");
    m.append_row(r);
  }
  return span(m);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace sum: ambient mismatch");
  Matrix m = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis_row(i));
  return Subspace::span(m);
}

Subspace perp(const Subspace& a) {
  if (a.dim() == 0) return Subspace::full(a.ambient());
  return Subspace::span(null_space(a.basis()));
}

Subspace perp(const Subspace& a, const Matrix& g) {
  if (g.rows() != a.ambient() || g.cols() != a.ambient())
    throw std::invalid_argument("subspace perp: gram shape mismatch");
  if (a.dim() == 0) return Subspace::full(a.ambient());
  return Subspace::span(null_space(a.basis() * g));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace intersect: ambient mismatch");
  // x in a cap b iff x is annihilated by both annihilators.
  Matrix constraints = perp(a).basis();
  Matrix bann = perp(b).basis();
  for (std::size_t i = 0; i < bann.rows(); ++i)
    constraints.append_row(bann.row(i));
  if (constraints.rows() == 0) return Subspace::full(a.ambient());
  return Subspace::span(null_space(constraints));
}

bool contains(const Subspace& a, const std::vector<Rational>& v) {
  if (v.size() != a.ambient())
    throw std::invalid_argument("subspace contains: length mismatch");
  // Reduce v against the rref basis; membership iff the residue is zero.
  std::vector<Rational> r = v;
  const Matrix& b = a.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t p = 0;
    while (p < b.cols() && b.at(i, p) == 0) ++p;
    if (p == b.cols()) continue;
    if (r[p] == 0) continue;
    Rational f = r[p];  // pivot is 1 in rref
    for (std::size_t j = 0; j < b.cols(); ++j) r[j] -= f * b.at(i, j);
  }
  return is_zero_vector(r);
}

bool includes(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace includes: ambient mismatch");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!contains(a, b.basis_row(i))) return false;
  return true;
}

std::vector<Rational> random_int_vector(std::size_t n, long coeff_bound,
                                        Rng& rng) {
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = Rational(rng.int_in(-coeff_bound, coeff_bound));
  return v;
}

Subspace random_subspace(std::size_t ambient, std::size_t d, long coeff_bound,
                         std::uint64_t seed) {
  if (d > ambient)
    throw std::invalid_argument("random_subspace: dim exceeds ambient");
  Rng rng(seed);
  if (d == 0) return Subspace::zero(ambient);
  for (;;) {
    Matrix m(0, ambient);
    for (std::size_t i = 0; i < d; ++i)
      m.append_row(random_int_vector(ambient, coeff_bound, rng));
    Subspace s = Subspace::span(m);
    if (s.dim() == d) return s;
  }
}

std::vector<Rational> random_vector_in(const Subspace& a, long coeff_bound,
                                       Rng& rng) {
  std::vector<Rational> v(a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rational c(rng.int_in(-coeff_bound, coeff_bound));
    if (c == 0) continue;
    std::vector<Rational> r = a.basis_row(i);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * r[j];
  }
  return v;
}

Subspace random_subspace_of(const Subspace& a, std::size_t d, long coeff_bound,
                            Rng& rng) {
  if (d > a.dim())
    throw std::invalid_argument("random_subspace_of: dim exceeds dim(a)");
  if (d == 0) return Subspace::zero(a.ambient());
  for (;;) {
    Matrix m(0, a.ambient());
    for (std::size_t i = 0; i < d; ++i)
      m.append_row(random_vector_in(a, coeff_bound, rng));
    Subspace s = Subspace::span(m);
    if (s.dim() == d) return s;
  }
}

}  // namespace msla
