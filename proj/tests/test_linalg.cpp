#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "msla/matrix.hpp"
#include "msla/rng.hpp"
#include "msla/subspace.hpp"

using namespace msla;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.int_in(-4, 4);
  return m;
}

}  // namespace

TEST_CASE("rref and rank") {
  Matrix m = Matrix::from_rows({{rat(1), rat(2), rat(3)},
                                {rat(2), rat(4), rat(6)},
                                {rat(0), rat(1), rat(1)}});
  CHECK(rank(m) == 2);
  RrefResult r = rref(m);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(r.m.at(0, 0) == 1);
  CHECK(r.m.at(0, 1) == 0);
  CHECK(r.m.at(1, 1) == 1);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(rank(Matrix(3, 4)) == 0);
}

TEST_CASE("null space annihilates and has complementary dimension") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.int_in(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.int_in(1, 6));
    Matrix m = random_matrix(r, c, rng);
    Matrix ns = null_space(m);
    CHECK(ns.rows() == c - rank(m));
    for (std::size_t i = 0; i < ns.rows(); ++i)
      CHECK(is_zero_vector(m.apply(ns.row(i))));
    CHECK(rank(ns) == ns.rows());
  }
}

TEST_CASE("determinant basics and multiplicativity") {
  CHECK(det(Matrix::identity(4)) == 1);
  Matrix m = Matrix::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}});
  CHECK(det(m) == -2);
  Matrix s = Matrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  CHECK(det(s) == 0);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(3, 3, rng);
    Matrix b = random_matrix(3, 3, rng);
    Rational lhs = det(a * b);
    Rational rhs = det(a) * det(b);
    CHECK(lhs == rhs);
    CHECK(det(a.transposed()) == det(a));
  }
}

TEST_CASE("inverse multiplies to the identity and rejects singular input") {
  Rng rng(17);
  int inverted = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(4, 4, rng);
    if (det(a) == 0) continue;
    ++inverted;
    CHECK(a * inverse(a) == Matrix::identity(4));
    CHECK(inverse(a) * a == Matrix::identity(4));
  }
  CHECK(inverted > 10);
  Matrix s = Matrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("solve finds solutions exactly when consistent") {
  Matrix m = Matrix::from_rows({{rat(1), rat(1)}, {rat(1), rat(-1)}});
  auto x = solve(m, {rat(3), rat(1)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == std::vector<Rational>{rat(3), rat(1)});

  Matrix s = Matrix::from_rows({{rat(1), rat(2)}, {rat(2), rat(4)}});
  CHECK_FALSE(solve(s, {rat(1), rat(3)}).has_value());
  auto y = solve(s, {rat(1), rat(2)});
  REQUIRE(y.has_value());
  CHECK(s.apply(*y) == std::vector<Rational>{rat(1), rat(2)});

  // Random consistent systems: b manufactured from a known solution.
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(3, 4, rng);
    std::vector<Rational> known(4);
    for (auto& v : known) v = rng.int_in(-3, 3);
    auto sol = solve(a, a.apply(known));
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == a.apply(known));
  }
}

TEST_CASE("inertia is exact and congruence invariant") {
  Matrix d = Matrix::from_rows({{rat(2), rat(0), rat(0)},
                                {rat(0), rat(-3), rat(0)},
                                {rat(0), rat(0), rat(0)}});
  CHECK(inertia(d) == Inertia{1, 1, 1});
  CHECK(inertia(Matrix::identity(7)) == Inertia{7, 0, 0});

  // Congruence S^T D S preserves inertia for invertible S.
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    Matrix s = random_matrix(3, 3, rng);
    if (det(s) == 0) continue;
    Matrix c = s.transposed() * d * s;
    CHECK(inertia(c) == Inertia{1, 1, 1});
  }
  // Gram matrices A^T A are positive semidefinite with rank(A) positives.
  for (int trial = 0; trial < 15; ++trial) {
    Matrix a = random_matrix(3, 4, rng);
    Inertia g = inertia(a.transposed() * a);
    CHECK(g.negative == 0);
    CHECK(g.positive == rank(a));
  }
  Matrix ns = Matrix::from_rows({{rat(0), rat(1)}, {rat(2), rat(0)}});
  CHECK_THROWS_AS(inertia(ns), std::invalid_argument);
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(Matrix::from_rows({{rat(1)}, {rat(1), rat(2)}}),
                  std::invalid_argument);
  Matrix m(2, 3);
  CHECK_THROWS_AS(m.apply({rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(det(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("subspace span, sum, intersection and the dimension formula") {
  Subspace a = Subspace::span_rows(
      4, {{rat(1), rat(0), rat(0), rat(0)}, {rat(2), rat(0), rat(0), rat(0)}});
  CHECK(a.dim() == 1);
  CHECK(Subspace::zero(4).dim() == 0);
  CHECK(Subspace::full(4).dim() == 4);

  Rng rng(47);
  const Subspace full = Subspace::full(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Subspace u = random_subspace_of(
        full, static_cast<std::size_t>(rng.int_in(0, 5)), 3, rng);
    const Subspace w = random_subspace_of(
        full, static_cast<std::size_t>(rng.int_in(0, 5)), 3, rng);
    const Subspace s = sum(u, w);
    const Subspace i = intersect(u, w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(includes(s, u));
    CHECK(includes(s, w));
    CHECK(includes(u, i));
    CHECK(includes(w, i));
    for (std::size_t r = 0; r < i.dim(); ++r) {
      CHECK(contains(u, i.basis_row(r)));
      CHECK(contains(w, i.basis_row(r)));
    }
  }
}

TEST_CASE("subspace equality is basis independent") {
  Subspace a = Subspace::span_rows(
      3, {{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(1)}});
  Subspace b = Subspace::span_rows(
      3, {{rat(1), rat(2), rat(1)}, {rat(2), rat(1), rat(-1)}});
  CHECK(a == b);
  Subspace c = Subspace::span_rows(
      3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(1)}});
  CHECK(a != c);
}

TEST_CASE("euclidean perp and metric perp") {
  Rng rng(53);
  const Subspace full = Subspace::full(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace w = random_subspace_of(
        full, static_cast<std::size_t>(rng.int_in(0, 6)), 3, rng);
    const Subspace p = perp(w);
    CHECK(p.dim() + w.dim() == 6);
    CHECK(perp(p) == w);
    for (std::size_t i = 0; i < w.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        CHECK(dot(w.basis_row(i), p.basis_row(j)) == 0);
  }
  // Gram perp with a definite non-identity metric.
  Matrix g = Matrix::identity(3);
  g.at(0, 0) = 2;
  g.at(1, 1) = rat(1, 2);
  const Subspace w = Subspace::span_rows(3, {{rat(1), rat(1), rat(0)}});
  const Subspace pg = perp(w, g);
  CHECK(pg.dim() == 2);
  for (std::size_t j = 0; j < pg.dim(); ++j)
    CHECK(dot(g.apply(w.basis_row(0)), pg.basis_row(j)) == 0);
}

TEST_CASE("random subspaces are reproducible and respect their parent") {
  CHECK(random_subspace(6, 3, 4, 1234) == random_subspace(6, 3, 4, 1234));
  CHECK(random_subspace(6, 3, 4, 1234) != random_subspace(6, 3, 4, 1235));
  Rng rng(61);
  const Subspace parent = random_subspace(7, 4, 3, 99);
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace s = random_subspace_of(parent, 2, 3, rng);
    CHECK(s.dim() == 2);
    CHECK(includes(parent, s));
  }
  CHECK_THROWS_AS(random_subspace_of(parent, 5, 3, rng),
                  std::invalid_argument);
}
