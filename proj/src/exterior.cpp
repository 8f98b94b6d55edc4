#include "msla/exterior.hpp"

namespace msla {

Multivector from_vector(const std::vector<Rational>& v) {
  Multivector x(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    x.set(IndexTuple({static_cast<int>(i) + 1}), v[i]);
  return x;
}

Multivector basis_blade(int ambient, const IndexTuple& t) {
  Multivector x(ambient, static_cast<int>(t.size()));
  x.set(t, Rational(1));
  return x;
}

Multivector decomposable(int ambient,
                         const std::vector<std::vector<Rational>>& vectors) {
  Multivector x(ambient, 0);
  x.set(IndexTuple(), Rational(1));
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("decomposable: vector length != ambient");
    x = wedge(x, from_vector(v));
  }
  return x;
}

AlternatingForm contract(const Multivector& x, const AlternatingForm& w) {
  if (x.ambient() != w.ambient())
    throw std::invalid_argument("contract: ambient mismatch");
  if (x.grade() > w.grade())
    throw std::invalid_argument("contract: multivector grade exceeds form");
  AlternatingForm r(w.ambient(), w.grade() - x.grade());
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : w.terms()) {
      IndexTuple rest;
      int sign = removal_sign(s, t, &rest);
      if (sign != 0) r.add(rest, sign * cs * ct);
    }
  return r;
}

Rational eval_form(const AlternatingForm& w,
                   const std::vector<std::vector<Rational>>& vectors) {
  if (static_cast<int>(vectors.size()) != w.grade())
    throw std::invalid_argument("eval_form: wrong number of arguments");
  AlternatingForm scalar = contract(decomposable(w.ambient(), vectors), w);
  return scalar.coeff(IndexTuple());
}

Multivector contract_multivector(const AlternatingForm& xi,
                                 const Multivector& x) {
  if (xi.ambient() != x.ambient())
    throw std::invalid_argument("contract_multivector: ambient mismatch");
  if (xi.grade() > x.grade())
    throw std::invalid_argument("contract_multivector: form grade exceeds");
  Multivector r(x.ambient(), x.grade() - xi.grade());
  for (const auto& [s, cs] : xi.terms())
    for (const auto& [t, ct] : x.terms()) {
      IndexTuple rest;
      int sign = removal_sign(s, t, &rest);
      if (sign != 0) r.add(rest, sign * cs * ct);
    }
  return r;
}

bool is_decomposable2(const Multivector& x) {
  if (x.grade() != 2)
    throw std::invalid_argument("is_decomposable2: grade must be 2");
  return wedge(x, x).is_zero();
}

bool is_decomposable(const Multivector& x) {
  if (x.is_zero()) return true;
  int r = x.grade();
  int n = x.ambient();
  if (r <= 1 || r >= n - 1) return true;
  for (const IndexTuple& s :
       all_tuples(static_cast<std::size_t>(n), static_cast<std::size_t>(r - 1))) {
    AlternatingForm xi(n, r - 1);
    xi.set(s, Rational(1));
    if (!wedge(contract_multivector(xi, x), x).is_zero()) return false;
  }
  return true;
}

std::pair<std::vector<Rational>, std::vector<Rational>> factor_bivector(
    const Multivector& x) {
  if (x.grade() != 2 || x.is_zero() || !is_decomposable2(x))
    throw std::invalid_argument(
        "factor_bivector: need a nonzero decomposable 2-vector");
  std::size_t n = static_cast<std::size_t>(x.ambient());
  // Skew coefficient matrix; its column space is span{u, v}.
  Matrix a(n, n);
  for (const auto& [t, c] : x.terms()) {
    std::size_t i = static_cast<std::size_t>(t[0]) - 1;
    std::size_t j = static_cast<std::size_t>(t[1]) - 1;
    a.at(i, j) = c;
    a.at(j, i) = -c;
  }
  std::vector<Rational> u, v;
  for (std::size_t j = 0; j < n && v.empty(); ++j) {
    std::vector<Rational> c = a.col(j);
    if (is_zero_vector(c)) continue;
    if (u.empty()) {
      u = c;
    } else if (!wedge(from_vector(u), from_vector(c)).is_zero()) {
      v = c;
    }
  }
  if (v.empty())
    throw std::invalid_argument("factor_bivector: rank below 2");
  // u ^ v spans the same line as x; rescale u so the product is exact.
  Multivector uv = wedge(from_vector(u), from_vector(v));
  const auto& [t0, c0] = *x.terms().begin();
  Rational scale = c0 / uv.coeff(t0);
  u = scaled(u, scale);
  if (wedge(from_vector(u), from_vector(v)) != x)
    throw std::logic_error("factor_bivector: factorization check failed");
  return {u, v};
}

Multivector multivector_from_coords(int ambient, int grade,
                                    const std::vector<Rational>& v) {
  std::size_t total = binom(ambient, grade);
  if (v.size() != total)
    throw std::invalid_argument("multivector_from_coords: length mismatch");
  Multivector x(ambient, grade);
  for (std::size_t r = 0; r < total; ++r)
    if (v[r] != 0) x.set(tuple_unrank(r, ambient, grade), v[r]);
  return x;
}

AlternatingForm form_from_coords(int ambient, int grade,
                                 const std::vector<Rational>& v) {
  std::size_t total = binom(ambient, grade);
  if (v.size() != total)
    throw std::invalid_argument("form_from_coords: length mismatch");
  AlternatingForm x(ambient, grade);
  for (std::size_t r = 0; r < total; ++r)
    if (v[r] != 0) x.set(tuple_unrank(r, ambient, grade), v[r]);
  return x;
}

Subspace wedge_power(const Subspace& w, int grade) {
  int n = static_cast<int>(w.ambient());
  std::size_t power_dim = binom(n, grade);
  if (grade < 0) throw std::invalid_argument("wedge_power: negative grade");
  if (static_cast<std::size_t>(grade) > w.dim())
    return Subspace::zero(power_dim);
  std::vector<std::vector<Rational>> rows;
  for (const IndexTuple& t :
       all_tuples(w.dim(), static_cast<std::size_t>(grade))) {
    std::vector<std::vector<Rational>> vs;
    for (std::size_t i = 0; i < t.size(); ++i)
      vs.push_back(w.basis_row(static_cast<std::size_t>(t[i]) - 1));
    rows.push_back(coords(decomposable(n, vs)));
  }
  return Subspace::span_rows(power_dim, rows);
}

}  // namespace msla
