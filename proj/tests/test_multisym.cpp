#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "msla/exterior.hpp"
#include "msla/g2.hpp"
#include "msla/multisym.hpp"
#include "msla/rng.hpp"
#include "msla/subspace.hpp"

using namespace msla;

namespace {

AlternatingForm dx(int ambient, std::vector<int> idx) {
  IndexTuple t(std::move(idx));
  AlternatingForm f(ambient, static_cast<int>(t.size()));
  f.set(t, rat(1));
  return f;
}

std::vector<Rational> unit(std::size_t n, int i) {
  std::vector<Rational> v(n);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

Subspace coord_span(std::size_t n, const std::vector<int>& idx) {
  std::vector<std::vector<Rational>> rows;
  for (int i : idx) rows.push_back(unit(n, i));
  return Subspace::span_rows(n, rows);
}

const MultisymplecticSpace& phi0_space() {
  static MultisymplecticSpace sp(standard_phi());
  return sp;
}

const MultisymplecticSpace& vol_space(int n) {
  static std::vector<MultisymplecticSpace> cache = [] {
    std::vector<MultisymplecticSpace> v;
    for (int m = 3; m <= 6; ++m)
      v.emplace_back(standard_volume(m));
    return v;
  }();
  return cache[static_cast<std::size_t>(n - 3)];
}

}  // namespace

TEST_CASE("weak nondegeneracy and construction guards") {
  CHECK(is_weakly_nondegenerate(standard_phi()));
  CHECK(is_weakly_nondegenerate(standard_volume(4)));
  AlternatingForm sympl(4, 2);
  sympl.set(IndexTuple({1, 2}), rat(1));
  sympl.set(IndexTuple({3, 4}), rat(1));
  CHECK(is_weakly_nondegenerate(sympl));
  // dx^123 on Q^4 kills e4.
  CHECK_FALSE(is_weakly_nondegenerate(dx(4, {1, 2, 3})));
  CHECK_THROWS_AS(MultisymplecticSpace(dx(4, {1, 2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultisymplecticSpace(dx(3, {1})), std::invalid_argument);

  const MultisymplecticSpace& sp = phi0_space();
  CHECK(sp.ambient() == 7);
  CHECK(sp.degree() == 3);
  CHECK(sp.k() == 2);
}

TEST_CASE("first-kind complements at pinned subspaces") {
  const MultisymplecticSpace& sp = phi0_space();

  // A coordinate line is its own depth-1 complement.
  Subspace e1 = coord_span(7, {1});
  CHECK(type_i_complement(sp, e1, 1) == e1);

  // The coordinate 2-plane: depth 1 cuts everything, depth 2 cuts one
  // coordinate. Complements grow with the depth.
  Subspace w12 = coord_span(7, {1, 2});
  Subspace c1 = type_i_complement(sp, w12, 1);
  Subspace c2 = type_i_complement(sp, w12, 2);
  CHECK(c1.dim() == 0);
  CHECK(c2 == coord_span(7, {1, 2, 4, 5, 6, 7}));
  CHECK(includes(c2, c1));

  // The zero subspace imposes no conditions at all.
  CHECK(type_i_complement(sp, Subspace::zero(7), 1) == Subspace::full(7));
  CHECK(type_i_complement(sp, Subspace::zero(7), 2) == Subspace::full(7));

  // Volume form on Q^4 (so k = 3).
  const MultisymplecticSpace& v4 = vol_space(4);
  Subspace u12 = coord_span(4, {1, 2});
  CHECK(type_i_complement(v4, u12, 1).dim() == 0);
  CHECK(type_i_complement(v4, u12, 2) == u12);
  // Depth above dim w is a vacuous condition.
  CHECK(type_i_complement(v4, u12, 3) == Subspace::full(4));

  CHECK_THROWS_AS(type_i_complement(sp, w12, 0), std::invalid_argument);
  CHECK_THROWS_AS(type_i_complement(sp, w12, 3), std::invalid_argument);
}

TEST_CASE("the symplectic plane case reduces to classical complements") {
  AlternatingForm sympl(4, 2);
  sympl.set(IndexTuple({1, 2}), rat(1));
  sympl.set(IndexTuple({3, 4}), rat(1));
  MultisymplecticSpace sp(sympl);
  REQUIRE(sp.k() == 1);

  CHECK(type_i_complement(sp, coord_span(4, {1, 2}), 1) ==
        coord_span(4, {3, 4}));
  Subspace lag = coord_span(4, {1, 3});
  CHECK(type_i_complement(sp, lag, 1) == lag);
  TypeIPredicates p = type_i_predicates(sp, lag, 1);
  CHECK(p.isotropic);
  CHECK(p.coisotropic);
  CHECK(p.lagrangian);

  // First- and second-kind complements coincide at depth/grade 1.
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace w = random_subspace(4, static_cast<std::size_t>(rng.int_in(1, 3)),
                                 3, mix_seed(17, trial));
    CHECK(type_ii_complement(sp, w, 1).span == type_i_complement(sp, w, 1));
  }

  Subspace ext = extend_to_lagrangian(sp, coord_span(4, {1}), 1);
  CHECK(ext.dim() == 2);
  CHECK(contains(ext, unit(4, 1)));
  CHECK(type_i_predicates(sp, ext, 1).lagrangian);
}

TEST_CASE("first-kind predicates distinguish the depths") {
  const MultisymplecticSpace& sp = phi0_space();

  // Lines are 1-isotropic; the 2-plane is only 2-isotropic.
  CHECK(type_i_predicates(sp, coord_span(7, {1}), 1).isotropic);
  Subspace w12 = coord_span(7, {1, 2});
  TypeIPredicates d1 = type_i_predicates(sp, w12, 1);
  CHECK_FALSE(d1.isotropic);
  CHECK(d1.coisotropic);  // the depth-1 complement is {0}
  CHECK_FALSE(d1.lagrangian);
  TypeIPredicates d2 = type_i_predicates(sp, w12, 2);
  CHECK(d2.isotropic);
  CHECK_FALSE(d2.coisotropic);
  CHECK_FALSE(d2.lagrangian);

  // Hyperplanes are k-coisotropic.
  Subspace h = coord_span(7, {1, 2, 3, 4, 5, 6});
  CHECK(type_i_predicates(sp, h, 2).coisotropic);

  // On a volume space a proper subspace is Lagrangian at its own
  // dimension.
  const MultisymplecticSpace& v5 = vol_space(5);
  Subspace u = coord_span(5, {1, 3, 4});
  CHECK(type_i_predicates(v5, u, 3).lagrangian);
  CHECK(type_i_complement(v5, u, 2).dim() == 0);
}

TEST_CASE("second-kind complements at pinned subspaces") {
  const MultisymplecticSpace& sp = phi0_space();
  Subspace w12 = coord_span(7, {1, 2});

  TypeIIComplement c2 = type_ii_complement(sp, w12, 2);
  CHECK(c2.grade == 2);
  CHECK(c2.span.ambient() == binom(7, 2));
  CHECK(c2.span.dim() == 19);
  // e1 ^ e4 annihilates both generators but is not a 2-vector over w.
  Multivector e14 = basis_blade(7, IndexTuple({1, 4}));
  CHECK(contains(c2.span, coords(e14)));
  CHECK_FALSE(includes(wedge_power(w12, 2), c2.span));
  // A subspace is always second-kind isotropic at its own dimension.
  CHECK(type_ii_isotropic(sp, w12, 2));
  CHECK(includes(c2.span, wedge_power(w12, 2)));

  // Grade 1 against the full space: weak nondegeneracy makes it zero.
  CHECK(type_ii_complement(sp, Subspace::full(7), 1).span.dim() == 0);
  // The zero subspace imposes nothing.
  CHECK(type_ii_complement(sp, Subspace::zero(7), 2).span ==
        Subspace::full(binom(7, 2)));
  // Grades at or above the form degree are unconditionally full.
  CHECK(type_ii_complement(sp, Subspace::full(7), 3).span ==
        Subspace::full(binom(7, 3)));

  // Volume form on Q^4: closed forms below, at, and above dim w.
  const MultisymplecticSpace& v4 = vol_space(4);
  Subspace u12 = coord_span(4, {1, 2});
  CHECK(type_ii_complement(v4, u12, 1).span.dim() == 0);
  TypeIIComplement own = type_ii_complement(v4, u12, 2);
  CHECK(own.span == wedge_power(u12, 2));
  CHECK(own.span.dim() == 1);
  TypeIIComplement above = type_ii_complement(v4, u12, 3);
  CHECK(above.span.dim() == 2);  // e12 wedged with anything
  CHECK(contains(above.span, coords(basis_blade(4, IndexTuple({1, 2, 3})))));
  CHECK(contains(above.span, coords(basis_blade(4, IndexTuple({1, 2, 4})))));

  CHECK_THROWS_AS(type_ii_complement(sp, w12, 0), std::invalid_argument);
  CHECK_THROWS_AS(type_ii_complement(sp, w12, 8), std::invalid_argument);
}

TEST_CASE("restricted forms and kernels, including the one-way pin") {
  const MultisymplecticSpace& sp = phi0_space();

  // Restriction to the first coordinate 3-plane is the volume of that
  // plane; to {e4,e5,e6} it vanishes identically.
  CHECK(restrict_form(sp.omega(), coord_span(7, {1, 2, 3})) ==
        dx(3, {1, 2, 3}));
  CHECK(restrict_form(sp.omega(), coord_span(7, {4, 5, 6})).is_zero());
  CHECK(is_multisymplectic_subspace(sp, coord_span(7, {1, 2, 3})));
  CHECK(restricted_kernel(sp, coord_span(7, {1, 2, 3})).dim() == 0);

  // The 3-plane {e1,e2,e4} has identically vanishing restriction (its
  // kernel is everything), yet no single vector of it is killed by all
  // pair contractions: grade-1 second-kind triviality does not imply a
  // nondegenerate restriction.
  Subspace w = coord_span(7, {1, 2, 4});
  CHECK(restrict_form(sp.omega(), w).is_zero());
  CHECK(restricted_kernel(sp, w) == w);
  CHECK_FALSE(is_multisymplectic_subspace(sp, w));
  CHECK(intersect(w, type_ii_complement(sp, w, 1).span).dim() == 0);

  // The converse direction does hold and stays exact.
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace u = random_subspace(7, static_cast<std::size_t>(rng.int_in(1, 5)),
                                 3, mix_seed(23, trial));
    if (is_multisymplectic_subspace(sp, u))
      CHECK(intersect(u, type_ii_complement(sp, u, 1).span).dim() == 0);
    // The kernel of the restriction is the top-depth self-intersection.
    CHECK(restricted_kernel(sp, u) ==
          intersect(u, type_i_complement(sp, u, sp.k())));
  }
}

TEST_CASE("r-nondegeneracy verdicts") {
  // Volume forms have trivial contraction kernels in every grade.
  for (int r = 1; r <= 3; ++r)
    CHECK(r_nondegenerate(standard_volume(4), r, 0, 0).is_proven());

  // The reference 3-form is 1-nondegenerate by construction and has no
  // decomposable 2-vector in its 14-dimensional contraction kernel; the
  // randomized search cannot certify that, so the verdict stays open.
  CHECK(r_nondegenerate(standard_phi(), 1, 0, 0).is_proven());
  Verdict v2 = r_nondegenerate(standard_phi(), 2, 25, 7);
  CHECK(v2.is_unknown());
  CHECK(v2.trials() == 25);

  // dx^123 + dx^145 on Q^5 is weakly nondegenerate but e2 ^ e4 kills it.
  AlternatingForm f(5, 3);
  f.set(IndexTuple({1, 2, 3}), rat(1));
  f.set(IndexTuple({1, 4, 5}), rat(1));
  REQUIRE(is_weakly_nondegenerate(f));
  Verdict ref = r_nondegenerate(f, 2, 200, 11);
  REQUIRE(ref.is_refuted());
  const Multivector& x = ref.witness();
  CHECK(x.grade() == 2);
  CHECK_FALSE(x.is_zero());
  CHECK(is_decomposable(x));
  CHECK(contract(x, f).is_zero());

  CHECK_THROWS_AS(r_nondegenerate(standard_phi(), 0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(r_nondegenerate(standard_phi(), 3, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("full nondegeneracy of restrictions decides exactly") {
  const MultisymplecticSpace& sp = phi0_space();

  // dim k+1 with a volume restriction: proven with zero search budget.
  CHECK(fully_nondegenerate_on(sp, coord_span(7, {1, 2, 3}), 0, 0)
            .is_proven());
  // Same restriction on a tilted plane.
  Subspace tilted = Subspace::span_rows(
      7, {unit(7, 1), unit(7, 2),
          [] {
            std::vector<Rational> v(7);
            v[2] = 1;
            v[3] = 1;
            return v;
          }()});
  CHECK(fully_nondegenerate_on(sp, tilted, 0, 0).is_proven());

  // Zero restriction: refuted by any blade of w.
  Verdict zr = fully_nondegenerate_on(sp, coord_span(7, {4, 5, 6}), 0, 0);
  REQUIRE(zr.is_refuted());
  CHECK(contains(wedge_power(coord_span(7, {4, 5, 6}), 2),
                 coords(zr.witness())));

  // dim k+2: the dual-vector closed form finds a witness without search.
  Subspace w4 = coord_span(7, {1, 2, 3, 4});
  Verdict zd = fully_nondegenerate_on(sp, w4, 0, 0);
  REQUIRE(zd.is_refuted());
  const Multivector& x = zd.witness();
  CHECK(x.grade() == 2);
  CHECK(is_decomposable(x));
  CHECK(contains(wedge_power(w4, 2), coords(x)));
  // The lifted witness contracts the form to something vanishing on w4.
  AlternatingForm rest = contract(x, sp.omega());
  for (std::size_t i = 0; i < w4.dim(); ++i)
    CHECK(contract(from_vector(w4.basis_row(i)), rest).coeff(IndexTuple()) ==
          0);

  // Dimension below k leaves no k-vectors at all.
  CHECK(fully_nondegenerate_on(sp, coord_span(7, {5}), 0, 0).is_proven());
}

TEST_CASE("lagrangian extensions terminate and certify") {
  // Volume on Q^3: a line extends to a 2-plane equal to its own depth-2
  // complement.
  const MultisymplecticSpace& v3 = vol_space(3);
  Subspace line3 = coord_span(3, {2});
  Subspace l3 = extend_to_lagrangian(v3, line3, 2);
  CHECK(l3.dim() == 2);
  CHECK(includes(l3, line3));
  CHECK(type_i_predicates(v3, l3, 2).lagrangian);

  // The reference 3-form: every line grows to a 4-plane with vanishing
  // restriction.
  const MultisymplecticSpace& sp = phi0_space();
  Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    Subspace line = random_subspace(7, 1, 3, mix_seed(5, trial));
    Subspace lag = extend_to_lagrangian(sp, line, 2);
    CHECK(lag.dim() == 4);
    CHECK(includes(lag, line));
    CHECK(type_i_predicates(sp, lag, 2).lagrangian);
    CHECK(restrict_form(sp.omega(), lag).is_zero());
  }

  // Starting from zero works at every depth.
  Subspace z1 = extend_to_lagrangian(sp, Subspace::zero(7), 1);
  CHECK(type_i_predicates(sp, z1, 1).lagrangian);
}

TEST_CASE("second-kind isotropy and coisotropy fast paths") {
  const MultisymplecticSpace& sp = phi0_space();

  // Own-dimension isotropy is unconditional.
  Rng rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t d = static_cast<std::size_t>(rng.int_in(1, 4));
    Subspace w = random_subspace(7, d, 3, mix_seed(29, trial));
    CHECK(type_ii_isotropic(sp, w, static_cast<int>(d)));
  }

  // The full space is second-kind coisotropic at every grade.
  CHECK(type_ii_coisotropic(sp, Subspace::full(7), 2, 0, 0).is_proven());

  // Dimension below the grade: refuted with a decomposable witness
  // outside the power.
  Subspace w12 = coord_span(7, {1, 2});
  Verdict small = type_ii_coisotropic(sp, coord_span(7, {1}), 2, 0, 0);
  REQUIRE(small.is_refuted());
  CHECK(is_decomposable(small.witness()));

  // Verdict consistency against the exact isotropy test.
  Verdict c = type_ii_coisotropic(sp, w12, 2, 20, 3);
  if (c.is_proven()) CHECK(includes(wedge_power(w12, 2),
                                    type_ii_complement(sp, w12, 2).span));
  if (c.is_refuted()) {
    const Multivector& x = c.witness();
    CHECK(contains(type_ii_complement(sp, w12, 2).span, coords(x)));
    CHECK_FALSE(contains(wedge_power(w12, 2), coords(x)));
    CHECK(is_decomposable(x));
  }
}
