#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcs/sparse_vector.hpp"

namespace lcs {

/// A subspace held in reduced row echelon form. Pivot indices are strictly
/// increasing, every pivot coefficient is 1, and each pivot column vanishes
/// in all other rows, so equal subspaces have bitwise-equal rows regardless
/// of insertion order. Pivots are chosen as the smallest basis index of the
/// reduced vector.
class EchelonSubspace {
 public:
  EchelonSubspace() = default;

  std::size_t dim() const { return rows_.size(); }

  /// Reduces v against the rows and inserts the remainder if nonzero.
  /// Returns true iff the dimension grew.
  bool insert(SparseVector v);

  /// True iff v lies in the span, i.e. reduces to zero.
  bool contains(const SparseVector& v) const;

  /// Reduces v in place against the rows; the result has no support on any
  /// pivot column. Returns the reduced remainder.
  SparseVector reduce(SparseVector v) const;

  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::int64_t>& pivots() const { return pivots_; }

  bool operator==(const EchelonSubspace& other) const = default;

 private:
  std::vector<SparseVector> rows_;
  std::vector<std::int64_t> pivots_;
};

// Pure value-level counterparts of the member operations.

inline std::pair<EchelonSubspace, bool> echelon_insert(EchelonSubspace space,
                                                       SparseVector v) {
  bool independent = space.insert(std::move(v));
  return {std::move(space), independent};
}

inline std::size_t subspace_dim(const EchelonSubspace& space) {
  return space.dim();
}

inline bool contains(const EchelonSubspace& space, const SparseVector& v) {
  return space.contains(v);
}

/// Span of the union of the two subspaces.
EchelonSubspace sum_spaces(const EchelonSubspace& a, const EchelonSubspace& b);

/// Basis of { c : sum_i c_i images[i] = 0 }, i.e. the kernel of the linear
/// map sending domain coordinate i to images[i] inside a codomain of
/// dimension image_dim. Returned in reduced echelon form over the domain
/// indices 0..images.size()-1.
EchelonSubspace kernel_of_map(const std::vector<SparseVector>& images,
                              std::int64_t image_dim);

}  // namespace lcs
