#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcs/rational.hpp"

namespace lcs {

/// Sparse vector over a caller-owned dense index space.
/// Entries are (index, coefficient) pairs with strictly increasing indices
/// and no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::int64_t, Rational>;

  SparseVector() = default;

  /// Builds from possibly unsorted, possibly repeated entries; collects
  /// like indices and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  /// Smallest index with a nonzero coefficient. Undefined on zero vectors.
  std::int64_t leading_index() const { return entries_.front().first; }
  const Rational& leading_coeff() const { return entries_.front().second; }

  const Rational* find(std::int64_t index) const;

  void scale(const Rational& c);
  /// *this += c * other, merging sorted entry lists.
  void axpy(const Rational& c, const SparseVector& other);

  const std::vector<Entry>& entries() const { return entries_; }

  bool operator==(const SparseVector& other) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace lcs
