#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msla/exterior.hpp"
#include "msla/matrix.hpp"
#include "msla/multisym.hpp"
#include "msla/subspace.hpp"

namespace msla {

// The reference cross-product 3-form on Q^7:
// dx^123 + dx^145 + dx^167 + dx^246 - dx^257 - dx^347 - dx^356.
AlternatingForm standard_phi();

// dx^{1...n} on Q^n.
AlternatingForm standard_volume(int n);

// The symmetric bilinear form b with
//   (u . phi) ^ (v . phi) ^ phi = 6 b(u, v) volume
// as a 7x7 matrix over the coordinate basis (single-vector contractions
// on the left). b is normalized against the caller's volume form; it is
// the metric induced by phi exactly when the volume is the metric volume.
// Requires degree(phi) == 3 and degree(volume) == 7 on the same space.
Matrix metric_from_phi(const AlternatingForm& phi,
                       const AlternatingForm& volume);

// A degree-3 form on Q^7 together with the positive definite inner
// product g and the binary cross product it induces:
//   g(cross(u, v), y) = phi(u, v, y).
//
// Construction rescales the volume-relative bilinear form to the metric
// volume of g itself (the rescaling factor is a rational ninth root; a
// package whose induced metric is irrational is rejected) and then
// validates the whole structure exactly:
//   - weak nondegeneracy of phi,
//   - symmetry and positive definiteness of g,
//   - the polarized double-cross identity
//       a x (b x c) + b x (a x c) = -2 g(a,b) c + g(a,c) b + g(b,c) a
//     on all basis triples.
// The identity on a definite form is what makes phi a genuine cross
// product form; any violation throws std::invalid_argument.
class G2Space {
 public:
  // standard_phi with the standard volume; metric is the identity.
  static G2Space standard();
  static G2Space from_form(AlternatingForm phi, AlternatingForm volume);

  const AlternatingForm& phi() const { return phi_; }
  const Matrix& metric() const { return g_; }
  const Matrix& metric_inverse() const { return ginv_; }
  const MultisymplecticSpace& space() const { return space_; }

  Rational inner(const std::vector<Rational>& u,
                 const std::vector<Rational>& v) const;
  std::vector<Rational> cross(const std::vector<Rational>& u,
                              const std::vector<Rational>& v) const;
  // Extension of the cross product to 2-vectors: x -> raise(x . phi).
  std::vector<Rational> cross2(const Multivector& x) const;
  // cross on basis vectors, precomputed at construction: e_i x e_j.
  const std::vector<Rational>& basis_cross(int i, int j) const;

  // Orthogonal complement with respect to g.
  Subspace metric_perp(const Subspace& w) const;

 private:
  G2Space(AlternatingForm phi, AlternatingForm volume);

  AlternatingForm phi_;
  Matrix g_;
  Matrix ginv_;
  std::vector<std::vector<std::vector<Rational>>> table_;
  MultisymplecticSpace space_;
};

// Every pairwise cross product of basis vectors of w stays inside w.
// Subspaces of dimension <= 1 are trivially closed.
bool is_cross_closed(const G2Space& s, const Subspace& w);

// Three-dimensional and calibrated: phi restricted to w is a volume form
// of the induced metric, detected by phi(x,y,z)^2 == det Gram(x,y,z) on
// a basis. Equivalent to cross closure in dimension three. False for
// any other dimension.
bool is_associative(const G2Space& s, const Subspace& w);

// Four-dimensional with identically vanishing restriction of phi.
// False for any other dimension.
bool is_coassociative(const G2Space& s, const Subspace& w);

// An associative 3-plane contained in w, or nullopt when none exists.
// Exact in every dimension: explicit constructions for dim >= 5, a
// quadratic-form criterion on the cross-compatible bivectors of w for
// dim 4 (the wedge square is the only obstruction to factoring, and the
// inertia of its polar form decides existence), closure testing for
// dim 3. The returned subspace is re-verified before being returned.
std::optional<Subspace> find_associative_in(const G2Space& s,
                                            const Subspace& w);

// Exact dimension-by-dimension decision of full (grade-2) nondegeneracy
// of phi restricted to w; never returns Unknown. Refutations carry an
// ambient decomposable 2-vector witness over w.
Verdict g2_fully_nondegenerate(const G2Space& s, const Subspace& w);

// Exact decision of second-kind grade-2 coisotropy: dimensions >= 6 are
// always coisotropic, lower dimensions never are, and the refutation
// witness is an explicit decomposable cross-annihilating 2-vector
// outside the second power of w. Never returns Unknown.
Verdict g2_type_ii_coisotropic(const G2Space& s, const Subspace& w);

// Everything the classification computes, plus the chosen label. The
// label set refines the dimension: dimension 3 splits into associative,
// isotropic (identically vanishing restriction) and intermediate planes;
// dimension 4 splits into associative-containing, coassociative and
// intermediate. Other dimensions carry a single label.
struct G2Classification {
  std::string label;
  int dim = 0;

  bool one_isotropic = false;
  bool one_coisotropic = false;
  bool one_lagrangian = false;
  bool multisymplectic1 = false;

  bool type_i_isotropic2 = false;
  bool type_i_coisotropic2 = false;
  bool type_i_lagrangian2 = false;
  bool type_ii_isotropic2 = false;
  Verdict type_ii_coisotropic2 = Verdict::unknown(0);
  Verdict fully_nondegenerate2 = Verdict::unknown(0);

  bool cross_closed = false;
  bool associative = false;
  bool coassociative = false;
  std::optional<Subspace> associative_inside;

  int restricted_kernel_dim = 0;
  int type_i_complement2_dim = 0;
};

// Classify a subspace of a G2 space (1 <= dim <= 7). Every relation the
// label provably forces among the computed predicates is re-checked at
// runtime; a violation throws std::logic_error, so a returned value is
// self-consistent by construction.
G2Classification classify_g2_subspace(const G2Space& s, const Subspace& w);

struct CharacterizationOutcome {
  bool holds = false;
  std::string detail;
};

// The classical characterizations under test, decided exactly:
// dimension 3: associative <=> restriction fully nondegenerate;
// dimension 4: coassociative <=> first-kind 2-Lagrangian <=> second-kind
// 2-isotropic. Other dimensions are invalid input.
CharacterizationOutcome characterization_check(const G2Space& s,
                                               const Subspace& w);

}  // namespace msla
