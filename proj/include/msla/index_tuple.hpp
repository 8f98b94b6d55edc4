#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace msla {

// Strictly increasing 1-based index tuple; labels the basis blade
// e_{i1} ^ ... ^ e_{ik} (or the coordinate form dx^{i1...ik}).
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> idx) : idx_(std::move(idx)) {
    for (std::size_t i = 0; i < idx_.size(); ++i)
      if (idx_[i] < 1 || (i > 0 && idx_[i] <= idx_[i - 1]))
        throw std::invalid_argument("index tuple: not strictly increasing");
  }

  std::size_t size() const { return idx_.size(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  const std::vector<int>& indices() const { return idx_; }

  bool contains(int v) const {
    return std::binary_search(idx_.begin(), idx_.end(), v);
  }
  bool subset_of(const IndexTuple& t) const {
    return std::includes(t.idx_.begin(), t.idx_.end(), idx_.begin(),
                         idx_.end());
  }
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

  auto operator<=>(const IndexTuple&) const = default;

 private:
  std::vector<int> idx_;
};

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lexicographic rank of t among all size-|t| tuples over {1..n}.
inline std::size_t tuple_rank(const IndexTuple& t, std::size_t n) {
  std::size_t k = t.size();
  std::size_t r = 0;
  int prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (int v = prev + 1; v < t[i]; ++v)
      r += binom(n - static_cast<std::size_t>(v), k - i - 1);
    prev = t[i];
  }
  return r;
}

inline IndexTuple tuple_unrank(std::size_t r, std::size_t n, std::size_t k) {
  std::vector<int> idx;
  idx.reserve(k);
  int v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++v) {
      std::size_t block = binom(n - static_cast<std::size_t>(v), k - i - 1);
      if (r < block) break;
      r -= block;
    }
    idx.push_back(v);
    ++v;
  }
  return IndexTuple(idx);
}

inline std::vector<IndexTuple> all_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  std::size_t total = binom(n, k);
  out.reserve(total);
  for (std::size_t r = 0; r < total; ++r) out.push_back(tuple_unrank(r, n, k));
  return out;
}

// e_s ^ e_t = sign * e_out with sign in {-1, 0, +1}; 0 iff the tuples
// overlap. The sign counts transpositions needed to sort s followed by t.
inline int merge_tuples(const IndexTuple& s, const IndexTuple& t,
                        IndexTuple* out) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j] == s[i]) return 0;
      if (t[j] < s[i]) ++inversions;
    }
  std::vector<int> merged;
  merged.reserve(s.size() + t.size());
  std::merge(s.indices().begin(), s.indices().end(), t.indices().begin(),
             t.indices().end(), std::back_inserter(merged));
  if (out) *out = IndexTuple(merged);
  return (inversions % 2 == 0) ? 1 : -1;
}

// Contraction of the blade e_s into dx^t: zero unless s is a subset of t,
// otherwise sign * dx^{t minus s}. The sign matches inserting the vectors
// of s into the leading argument slots of dx^t in the order given.
inline int removal_sign(const IndexTuple& s, const IndexTuple& t,
                        IndexTuple* out) {
  if (!s.subset_of(t)) return 0;
  std::size_t exponent = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t pos =
        static_cast<std::size_t>(std::lower_bound(t.indices().begin(),
                                                  t.indices().end(), s[i]) -
                                 t.indices().begin()) +
        1;
    exponent += pos - (i + 1);
  }
  if (out) {
    std::vector<int> rest;
    rest.reserve(t.size() - s.size());
    for (std::size_t j = 0; j < t.size(); ++j)
      if (!s.contains(t[j])) rest.push_back(t[j]);
    *out = IndexTuple(rest);
  }
  return (exponent % 2 == 0) ? 1 : -1;
}

}  // namespace msla
