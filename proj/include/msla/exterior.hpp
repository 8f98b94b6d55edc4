#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msla/index_tuple.hpp"
#include "msla/rational.hpp"
#include "msla/subspace.hpp"

namespace msla {

struct MultivectorTag {};
struct FormTag {};

// Sparse element of the grade-`grade` exterior power over an
// `ambient`-dimensional space: basis tuple -> coefficient. Zero
// coefficients are never stored, so equality is map equality.
template <class Tag>
class Exterior {
 public:
  Exterior() = default;
  Exterior(int ambient, int grade) : ambient_(ambient), grade_(grade) {
    if (ambient < 0 || grade < 0)
      throw std::invalid_argument("exterior: negative ambient or grade");
  }

  int ambient() const { return ambient_; }
  int grade() const { return grade_; }
  const std::map<IndexTuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const IndexTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set(const IndexTuple& t, const Rational& c) {
    check_tuple(t);
    if (c == 0)
      terms_.erase(t);
    else
      terms_[t] = c;
  }

  void add(const IndexTuple& t, const Rational& c) {
    check_tuple(t);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Exterior operator-() const {
    Exterior r(ambient_, grade_);
    for (const auto& [t, c] : terms_) r.terms_[t] = -c;
    return r;
  }

  Exterior& operator+=(const Exterior& rhs) {
    check_shape(rhs);
    for (const auto& [t, c] : rhs.terms_) add(t, c);
    return *this;
  }

  Exterior& operator-=(const Exterior& rhs) {
    check_shape(rhs);
    for (const auto& [t, c] : rhs.terms_) add(t, -c);
    return *this;
  }

  Exterior& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [t, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator*(const Rational& c, Exterior a) { return a *= c; }

  bool operator==(const Exterior& rhs) const = default;

 private:
  void check_shape(const Exterior& rhs) const {
    if (ambient_ != rhs.ambient_ || grade_ != rhs.grade_)
      throw std::invalid_argument("exterior: shape mismatch");
  }
  void check_tuple(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != grade_ || t.max_index() > ambient_)
      throw std::invalid_argument("exterior: tuple does not fit shape");
  }

  int ambient_ = 0;
  int grade_ = 0;
  std::map<IndexTuple, Rational> terms_;
};

using Multivector = Exterior<MultivectorTag>;
using AlternatingForm = Exterior<FormTag>;

template <class Tag>
Exterior<Tag> wedge(const Exterior<Tag>& a, const Exterior<Tag>& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("wedge: ambient mismatch");
  Exterior<Tag> r(a.ambient(), a.grade() + b.grade());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      IndexTuple merged;
      int sign = merge_tuples(s, t, &merged);
      if (sign != 0) r.add(merged, sign * cs * ct);
    }
  return r;
}

Multivector from_vector(const std::vector<Rational>& v);
Multivector basis_blade(int ambient, const IndexTuple& t);

// v1 ^ v2 ^ ... ^ vl; the empty product is the grade-0 scalar 1.
Multivector decomposable(int ambient,
                         const std::vector<std::vector<Rational>>& vectors);

// (v1 ^ ... ^ vl) contracted into w fills the first l argument slots of w
// with v1, ..., vl in that order. Requires grade(x) <= grade(w).
AlternatingForm contract(const Multivector& x, const AlternatingForm& w);

// w(v1, ..., vk); requires exactly grade(w) vectors.
Rational eval_form(const AlternatingForm& w,
                   const std::vector<std::vector<Rational>>& vectors);

// Interior product of a coordinate (r-1)-form into an r-vector (grade
// drops by the form's grade). Same index combinatorics as contract().
Multivector contract_multivector(const AlternatingForm& xi,
                                 const Multivector& x);

// Grade-2 criterion: x decomposable iff x ^ x = 0.
bool is_decomposable2(const Multivector& x);

// Exact decomposability in any grade via the quadratic relations
// (iota_xi x) ^ x = 0 over all basis forms xi of grade(x) - 1.
// The zero element counts as decomposable.
bool is_decomposable(const Multivector& x);

// Exact factorization u ^ v = x of a nonzero decomposable 2-vector.
std::pair<std::vector<Rational>, std::vector<Rational>> factor_bivector(
    const Multivector& x);

// Coordinates w.r.t. the lexicographic tuple basis of the full exterior
// power; length binom(ambient, grade).
template <class Tag>
std::vector<Rational> coords(const Exterior<Tag>& x) {
  std::vector<Rational> v(binom(x.ambient(), x.grade()));
  for (const auto& [t, c] : x.terms()) v[tuple_rank(t, x.ambient())] = c;
  return v;
}

Multivector multivector_from_coords(int ambient, int grade,
                                    const std::vector<Rational>& v);
AlternatingForm form_from_coords(int ambient, int grade,
                                 const std::vector<Rational>& v);

// The full exterior power of a subspace, as a subspace of the exterior
// power of the ambient space (coordinates in the lexicographic basis).
Subspace wedge_power(const Subspace& w, int grade);

}  // namespace msla
