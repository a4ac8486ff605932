#pragma once

#include <string>
#include <vector>

namespace lcs {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is allowed and denotes the trivial diagram.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;           // |lambda|
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const {     // 0-based, 0 beyond the last row
    return i < rows() ? parts[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;
  /// Deletes the first column: each part shrinks by one.
  Partition bar() const;
  /// Appends `count` rows of length 1.
  Partition with_unit_rows(int count) const;

  std::string to_string() const;  // "(2,1)"

  auto operator<=>(const Partition&) const = default;
};

/// All partitions of total, optionally with at most max_rows rows,
/// in descending lexicographic order (a linear extension of dominance).
std::vector<Partition> partitions_of(int total, int max_rows = -1);

/// a dominates b (same size assumed): prefix sums of a are >= those of b.
bool dominates(const Partition& a, const Partition& b);

}  // namespace lcs
