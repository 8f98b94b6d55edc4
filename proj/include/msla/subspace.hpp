#pragma once

#include <cstdint>
#include <vector>

#include "msla/matrix.hpp"
#include "msla/rng.hpp"

namespace msla {

// Linear subspace of Q^n, stored as the unique reduced-row-echelon basis
// with zero rows dropped. Two Subspace values are equal iff they are the
// same subspace, so operator== is entrywise comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Span of the given rows; rows need not be independent.
  static Subspace span_rows(std::size_t ambient,
                            const std::vector<std::vector<Rational>>& rows);
  static Subspace span(const Matrix& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // dim() x ambient() matrix in reduced row echelon form.
  const Matrix& basis() const { return basis_; }
  std::vector<Rational> basis_row(std::size_t i) const {
    return basis_.row(i);
  }

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // rref, no zero rows
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const std::vector<Rational>& v);
// b subseteq a
bool includes(const Subspace& a, const Subspace& b);

// {x : <x, row> = 0 for every basis row of a}, w.r.t. the standard dot
// product. Used both as the annihilator and as the Euclidean complement.
Subspace perp(const Subspace& a);
// Complement w.r.t. the inner product with Gram matrix g (symmetric,
// nondegenerate): {x : row * g * x = 0 for all basis rows}.
Subspace perp(const Subspace& a, const Matrix& g);

// Uniformly seeded d-dimensional subspace with integer generator entries
// in [-coeff_bound, coeff_bound]; redraws until the rank is exactly d.
// Same seed, same result.
Subspace random_subspace(std::size_t ambient, std::size_t d, long coeff_bound,
                         std::uint64_t seed);

std::vector<Rational> random_int_vector(std::size_t n, long coeff_bound,
                                        Rng& rng);
// Random vector of the subspace: integer combination of its basis rows.
std::vector<Rational> random_vector_in(const Subspace& a, long coeff_bound,
                                       Rng& rng);
// Random subspace of a with the given dimension (redraws on rank deficit).
Subspace random_subspace_of(const Subspace& a, std::size_t d, long coeff_bound,
                            Rng& rng);

}  // namespace msla
