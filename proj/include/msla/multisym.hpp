#pragma once

#include <cstdint>
#include <stdexcept>

#include "msla/exterior.hpp"

namespace msla {

// Outcome of a semi-decidable question. Proven and Refuted are exact;
// a Refuted verdict always carries a witness that has been re-verified
// against the defining conditions before the verdict is constructed.
// Unknown records how many randomized trials were spent.
class Verdict {
 public:
  enum class State { Proven, Refuted, Unknown };

  static Verdict proven() { return Verdict(State::Proven); }
  static Verdict refuted(Multivector witness) {
    Verdict v(State::Refuted);
    v.witness_ = std::move(witness);
    return v;
  }
  static Verdict unknown(std::uint64_t trials) {
    Verdict v(State::Unknown);
    v.trials_ = trials;
    return v;
  }

  State state() const { return state_; }
  bool is_proven() const { return state_ == State::Proven; }
  bool is_refuted() const { return state_ == State::Refuted; }
  bool is_unknown() const { return state_ == State::Unknown; }

  const Multivector& witness() const {
    if (!is_refuted()) throw std::logic_error("verdict: no witness");
    return witness_;
  }
  std::uint64_t trials() const { return trials_; }

 private:
  explicit Verdict(State s) : state_(s) {}
  State state_;
  Multivector witness_;
  std::uint64_t trials_ = 0;
};

// Injectivity of v -> contraction of v into omega.
bool is_weakly_nondegenerate(const AlternatingForm& omega);

// Q^n carrying an alternating form of degree k+1 >= 2 that is weakly
// nondegenerate; both conditions are enforced at construction.
class MultisymplecticSpace {
 public:
  explicit MultisymplecticSpace(AlternatingForm omega);

  int ambient() const { return omega_.ambient(); }
  int degree() const { return omega_.grade(); }  // k + 1
  int k() const { return omega_.grade() - 1; }
  const AlternatingForm& omega() const { return omega_; }

 private:
  AlternatingForm omega_;
};

// First-kind orthogonal complement at depth l:
// { v : contraction of (v ^ w1 ^ ... ^ wl) into omega vanishes for all
//   wi in w }. For l > dim w the condition is vacuous and the whole
// space is returned. Requires 1 <= l <= k.
Subspace type_i_complement(const MultisymplecticSpace& sp, const Subspace& w,
                           int l);

struct TypeIPredicates {
  bool isotropic = false;
  bool coisotropic = false;
  bool lagrangian = false;
};
TypeIPredicates type_i_predicates(const MultisymplecticSpace& sp,
                                  const Subspace& w, int l);

// Second-kind complement at grade l. The complement itself is the set of
// decomposable l-vectors x with (x ^ w) contracted into omega vanishing
// for every w in w; `span` is the linear span of that set inside the
// full grade-l exterior power, which the structural propositions are
// phrased through. Requires 1 <= l <= ambient.
struct TypeIIComplement {
  int grade = 0;
  Subspace span;
};
TypeIIComplement type_ii_complement(const MultisymplecticSpace& sp,
                                    const Subspace& w, int l);

// Exact: the full grade-l power of w lies in the second-kind span.
bool type_ii_isotropic(const MultisymplecticSpace& sp, const Subspace& w,
                       int l);

// Semi-decidable: does every decomposable element of the second-kind
// span already lie in the grade-l power of w? Exact fast paths first,
// then a seeded randomized witness search.
Verdict type_ii_coisotropic(const MultisymplecticSpace& sp, const Subspace& w,
                            int l, std::uint64_t trials, std::uint64_t seed);

// omega restricted to the span of w, written in the basis of w (an
// alternating form on Q^dim(w)).
AlternatingForm restrict_form(const AlternatingForm& omega, const Subspace& w);

// Kernel of the restricted form, as a subspace of the ambient space.
// Computed two independent ways (ambient-side complement intersection
// and restricted-side kernel); disagreement is a hard error.
Subspace restricted_kernel(const MultisymplecticSpace& sp, const Subspace& w);

// The restriction of omega to w is again weakly nondegenerate.
bool is_multisymplectic_subspace(const MultisymplecticSpace& sp,
                                 const Subspace& w);

// Is omega r-nondegenerate: no nonzero decomposable r-vector contracts
// omega to zero. Exact when the full contraction kernel is trivial, has
// a decidable shape, or in grades where decomposability is complete;
// otherwise a seeded search for a refuting witness.
Verdict r_nondegenerate(const AlternatingForm& omega, int r,
                        std::uint64_t trials, std::uint64_t seed);

// Full nondegeneracy (r = k) of the restriction of omega to w.
Verdict fully_nondegenerate_on(const MultisymplecticSpace& sp,
                               const Subspace& w, std::uint64_t trials,
                               std::uint64_t seed);

// Greedy extension of an l-isotropic subspace by complement vectors
// until it equals its own depth-l complement. Terminates because the
// dimension grows at every step.
Subspace extend_to_lagrangian(const MultisymplecticSpace& sp,
                              const Subspace& w, int l);

}  // namespace msla
