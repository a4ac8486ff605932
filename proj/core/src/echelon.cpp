#include "lcs/echelon.hpp"

#include <algorithm>
#include <map>

namespace lcs {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::map<std::int64_t, Rational> acc;
  for (auto& [idx, c] : entries) acc[idx] += c;
  SparseVector v;
  for (auto& [idx, c] : acc) {
    if (c != 0) v.entries_.emplace_back(idx, std::move(c));
  }
  return v;
}

const Rational* SparseVector::find(std::int64_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::int64_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return &it->second;
  return nullptr;
}

void SparseVector::scale(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return;
  }
  for (auto& [idx, coeff] : entries_) coeff *= c;
}

void SparseVector::axpy(const Rational& c, const SparseVector& other) {
  if (c == 0 || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() ||
        (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational sum = a->second + c * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector EchelonSubspace::reduce(SparseVector v) const {
  // Rows are sorted by pivot; one pass eliminates every pivot coordinate.
  for (std::size_t i = 0; i < rows_.size() && !v.is_zero(); ++i) {
    if (pivots_[i] < v.leading_index()) continue;
    if (const Rational* c = v.find(pivots_[i])) {
      v.axpy(-*c, rows_[i]);
    }
  }
  return v;
}

bool EchelonSubspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  Rational inv = 1 / v.leading_coeff();
  v.scale(inv);
  std::int64_t pivot = v.leading_index();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (const Rational* c = rows_[i].find(pivot)) {
      rows_[i].axpy(-*c, v);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

bool EchelonSubspace::contains(const SparseVector& v) const {
  return reduce(v).is_zero();
}

EchelonSubspace sum_spaces(const EchelonSubspace& a, const EchelonSubspace& b) {
  EchelonSubspace out = a;
  for (const SparseVector& row : b.rows()) out.insert(row);
  return out;
}

EchelonSubspace kernel_of_map(const std::vector<SparseVector>& images,
                              std::int64_t image_dim) {
  // Augmented echelonization: rows (f(e_i) | e_i); rows whose pivot lands in
  // the identity tail have zero image part, so the tail is a kernel vector.
  EchelonSubspace augmented;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::vector<SparseVector::Entry> entries(images[i].entries());
    entries.emplace_back(image_dim + static_cast<std::int64_t>(i), rat(1));
    augmented.insert(SparseVector::from_entries(std::move(entries)));
  }
  EchelonSubspace kernel;
  for (std::size_t i = 0; i < augmented.dim(); ++i) {
    if (augmented.pivots()[i] < image_dim) continue;
    std::vector<SparseVector::Entry> tail;
    for (const auto& [idx, c] : augmented.rows()[i].entries()) {
      tail.emplace_back(idx - image_dim, c);
    }
    kernel.insert(SparseVector::from_entries(std::move(tail)));
  }
  return kernel;
}

}  // namespace lcs
