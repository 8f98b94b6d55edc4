#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "msla/exterior.hpp"
#include "msla/matrix.hpp"
#include "msla/rng.hpp"
#include "msla/subspace.hpp"

using namespace msla;

namespace {

IndexTuple tup(std::vector<int> idx) { return IndexTuple(std::move(idx)); }

AlternatingForm dx(int ambient, std::vector<int> idx) {
  IndexTuple t(std::move(idx));
  AlternatingForm f(ambient, static_cast<int>(t.size()));
  f.set(t, rat(1));
  return f;
}

AlternatingForm random_form(int ambient, int grade, Rng& rng) {
  AlternatingForm f(ambient, grade);
  for (const IndexTuple& t : all_tuples(static_cast<std::size_t>(ambient),
                                        static_cast<std::size_t>(grade)))
    f.set(t, rat(rng.int_in(-3, 3)));
  return f;
}

Multivector random_multivector(int ambient, int grade, Rng& rng) {
  Multivector x(ambient, grade);
  for (const IndexTuple& t : all_tuples(static_cast<std::size_t>(ambient),
                                        static_cast<std::size_t>(grade)))
    x.set(t, rat(rng.int_in(-3, 3)));
  return x;
}

// Natural pairing of a form and a multivector of equal grade.
Rational pair_with(const AlternatingForm& f, const Multivector& x) {
  return contract(x, f).coeff(IndexTuple());
}

}  // namespace

TEST_CASE("index tuples validate and rank-unrank round trips") {
  CHECK_THROWS_AS(tup({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tup({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tup({0}), std::invalid_argument);
  CHECK(tup({1, 3, 6}).max_index() == 6);
  CHECK(tup({1, 3}).subset_of(tup({1, 2, 3})));
  CHECK_FALSE(tup({1, 4}).subset_of(tup({1, 2, 3})));

  CHECK(binom(7, 3) == 35);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);

  const std::size_t n = 7, k = 3;
  std::vector<IndexTuple> ts = all_tuples(n, k);
  REQUIRE(ts.size() == binom(n, k));
  for (std::size_t r = 0; r < ts.size(); ++r) {
    CHECK(tuple_rank(ts[r], n) == r);
    CHECK(tuple_unrank(r, n, k) == ts[r]);
    if (r > 0) CHECK(ts[r - 1] < ts[r]);  // lexicographic enumeration
  }
  CHECK(ts.front() == tup({1, 2, 3}));
  CHECK(ts.back() == tup({5, 6, 7}));
}

TEST_CASE("wedge has the graded algebra laws") {
  Multivector e1 = basis_blade(4, tup({1}));
  Multivector e2 = basis_blade(4, tup({2}));
  CHECK(wedge(e1, e2).coeff(tup({1, 2})) == 1);
  CHECK(wedge(e2, e1).coeff(tup({1, 2})) == -1);
  CHECK(wedge(e1, e1).is_zero());

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector a = random_multivector(5, 1, rng);
    Multivector b = random_multivector(5, 1, rng);
    Multivector c = random_multivector(5, 2, rng);
    CHECK(wedge(a, b) == -wedge(b, a));
    // Odd-times-even grades commute.
    CHECK(wedge(a, c) == wedge(c, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    // Bilinearity in the first slot.
    CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
  }

  CHECK_THROWS_AS(wedge(basis_blade(3, tup({1})), basis_blade(4, tup({1}))),
                  std::invalid_argument);
}

TEST_CASE("sparse exterior elements never store zeros") {
  Multivector x(4, 2);
  x.set(tup({1, 2}), rat(3));
  x.add(tup({1, 2}), rat(-3));
  CHECK(x.is_zero());
  CHECK(x.terms().empty());
  x.set(tup({3, 4}), rat(5));
  x.set(tup({3, 4}), rat(0));
  CHECK(x.is_zero());
  CHECK_THROWS_AS(x.set(tup({1, 2, 3}), rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(x.set(tup({1, 5}), rat(1)), std::invalid_argument);
}

TEST_CASE("contraction fills the leading slots") {
  AlternatingForm w = dx(3, {1, 2, 3});
  CHECK(contract(basis_blade(3, tup({1})), w) == dx(3, {2, 3}));
  CHECK(contract(basis_blade(3, tup({2})), w) == -dx(3, {1, 3}));
  CHECK(contract(basis_blade(3, tup({3})), w) == dx(3, {1, 2}));
  CHECK(contract(basis_blade(3, tup({1, 3})), w) == -dx(3, {2}));
  CHECK(contract(basis_blade(3, tup({2, 3})), w) == dx(3, {1}));

  // Contracting a product fills slots left to right, one factor at a time.
  Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector x = random_multivector(5, 1, rng);
    Multivector y = random_multivector(5, 1, rng);
    AlternatingForm f = random_form(5, 3, rng);
    CHECK(contract(wedge(x, y), f) == contract(y, contract(x, f)));
    Multivector z = random_multivector(5, 2, rng);
    CHECK(contract(wedge(x, z), f) == contract(z, contract(x, f)));
  }

  CHECK_THROWS_AS(contract(basis_blade(4, tup({1})), dx(3, {1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(contract(basis_blade(3, tup({1, 2, 3})), dx(3, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("volume form evaluation matches the determinant") {
  Rng rng(12);
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    AlternatingForm vol = dx(n, full);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<std::vector<Rational>> vs;
      for (int i = 0; i < n; ++i)
        vs.push_back(random_int_vector(static_cast<std::size_t>(n), 4, rng));
      Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              vs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      CHECK(eval_form(vol, vs) == det(m));
    }
  }

  // Antisymmetry and multilinearity in the arguments.
  Rng rng2(13);
  AlternatingForm f = random_form(4, 2, rng2);
  std::vector<Rational> u = random_int_vector(4, 4, rng2);
  std::vector<Rational> v = random_int_vector(4, 4, rng2);
  std::vector<Rational> w = random_int_vector(4, 4, rng2);
  CHECK(eval_form(f, {u, v}) == -eval_form(f, {v, u}));
  CHECK(eval_form(f, {u, u}) == 0);
  std::vector<Rational> vw(4);
  for (std::size_t i = 0; i < 4; ++i) vw[i] = v[i] + w[i];
  CHECK(eval_form(f, {u, vw}) == eval_form(f, {u, v}) + eval_form(f, {u, w}));

  CHECK_THROWS_AS(eval_form(f, {u}), std::invalid_argument);
}

TEST_CASE("interior product is adjoint to wedging") {
  Multivector e12 = basis_blade(3, tup({1, 2}));
  CHECK(contract_multivector(dx(3, {1}), e12) == basis_blade(3, tup({2})));
  CHECK(contract_multivector(dx(3, {2}), e12) == -basis_blade(3, tup({1})));
  CHECK(contract_multivector(dx(3, {3}), e12).is_zero());

  // pair(xi ^ eta, x) == pair(eta, xi -| x) over random inputs.
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    AlternatingForm xi = random_form(5, 1, rng);
    AlternatingForm eta = random_form(5, 2, rng);
    Multivector x = random_multivector(5, 3, rng);
    CHECK(pair_with(wedge(xi, eta), x) ==
          pair_with(eta, contract_multivector(xi, x)));
    AlternatingForm xi2 = random_form(5, 2, rng);
    AlternatingForm eta1 = random_form(5, 1, rng);
    CHECK(pair_with(wedge(xi2, eta1), x) ==
          pair_with(eta1, contract_multivector(xi2, x)));
  }

  CHECK_THROWS_AS(contract_multivector(dx(3, {1, 2}), basis_blade(3, tup({1}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(contract_multivector(dx(4, {1}), basis_blade(3, tup({1, 2}))),
                  std::invalid_argument);
}

TEST_CASE("decomposability criteria agree") {
  Multivector sum(4, 2);
  sum.set(tup({1, 2}), rat(1));
  sum.set(tup({3, 4}), rat(1));
  CHECK_FALSE(is_decomposable2(sum));
  CHECK_FALSE(is_decomposable(sum));

  Multivector shared(4, 2);
  shared.set(tup({1, 2}), rat(1));
  shared.set(tup({1, 3}), rat(1));  // e1 ^ (e2 + e3)
  CHECK(is_decomposable2(shared));
  CHECK(is_decomposable(shared));

  CHECK(is_decomposable(Multivector(5, 3)));       // zero element
  CHECK(is_decomposable(basis_blade(5, tup({2})))); // grade 1
  CHECK(is_decomposable(basis_blade(5, tup({1, 2, 3, 4}))));  // corank 1

  Rng rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    // Products of vectors are always decomposable, in grade 2 and 3.
    std::vector<std::vector<Rational>> vs;
    for (int i = 0; i < 3; ++i) vs.push_back(random_int_vector(6, 3, rng));
    Multivector triple = decomposable(6, vs);
    CHECK(is_decomposable(triple));
    Multivector pair_prod = decomposable(6, {vs[0], vs[1]});
    CHECK(is_decomposable2(pair_prod) == is_decomposable(pair_prod));
    CHECK(is_decomposable2(pair_prod));
    // The two grade-2 criteria agree on arbitrary bivectors too.
    Multivector any = random_multivector(5, 2, rng);
    CHECK(is_decomposable2(any) == is_decomposable(any));
  }

  CHECK_THROWS_AS(is_decomposable2(basis_blade(4, tup({1}))),
                  std::invalid_argument);
}

TEST_CASE("bivector factorization is exact") {
  Rng rng(77);
  int factored = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> u = random_int_vector(5, 3, rng);
    std::vector<Rational> v = random_int_vector(5, 3, rng);
    Multivector x = wedge(from_vector(u), from_vector(v));
    if (x.is_zero()) continue;
    auto [a, b] = factor_bivector(x);
    CHECK(wedge(from_vector(a), from_vector(b)) == x);
    ++factored;
  }
  CHECK(factored > 0);

  Multivector sum(4, 2);
  sum.set(tup({1, 2}), rat(1));
  sum.set(tup({3, 4}), rat(1));
  CHECK_THROWS_AS(factor_bivector(sum), std::invalid_argument);
  CHECK_THROWS_AS(factor_bivector(Multivector(4, 2)), std::invalid_argument);
}

TEST_CASE("coordinates round trip through the lexicographic basis") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Multivector x = random_multivector(6, 2, rng);
    std::vector<Rational> c = coords(x);
    REQUIRE(c.size() == binom(6, 2));
    CHECK(multivector_from_coords(6, 2, c) == x);
    AlternatingForm f = random_form(5, 3, rng);
    CHECK(form_from_coords(5, 3, coords(f)) == f);
  }
  // Basis blades map to unit coordinate vectors at their rank.
  Multivector b = basis_blade(5, tup({2, 4}));
  std::vector<Rational> c = coords(b);
  for (std::size_t r = 0; r < c.size(); ++r)
    CHECK(c[r] == (r == tuple_rank(tup({2, 4}), 5) ? 1 : 0));

  CHECK_THROWS_AS(multivector_from_coords(6, 2, std::vector<Rational>(3)),
                  std::invalid_argument);
}

TEST_CASE("wedge powers of subspaces have binomial dimensions") {
  Rng rng(222);
  for (int trial = 0; trial < 8; ++trial) {
    Subspace w = random_subspace(6, 3, 3, mix_seed(99, trial));
    for (int g = 0; g <= 4; ++g) {
      Subspace p = wedge_power(w, g);
      CHECK(p.ambient() == binom(6, static_cast<std::size_t>(g)));
      std::size_t expect =
          static_cast<std::size_t>(g) <= w.dim()
              ? binom(w.dim(), static_cast<std::size_t>(g))
              : 0;
      CHECK(p.dim() == expect);
    }
    // Products of members land inside the wedge power.
    std::vector<Rational> a = random_vector_in(w, 3, rng);
    std::vector<Rational> b = random_vector_in(w, 3, rng);
    Multivector ab = wedge(from_vector(a), from_vector(b));
    CHECK(contains(wedge_power(w, 2), coords(ab)));
  }
  // The full space recovers the whole exterior power.
  CHECK(wedge_power(Subspace::full(5), 2).dim() == binom(5, 2));
  CHECK(wedge_power(Subspace::full(5), 2) ==
        Subspace::full(binom(5, 2)));
}
