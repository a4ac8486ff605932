#include "lcs/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcs {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw std::invalid_argument("not weakly decreasing positive parts");
    }
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts.empty()) return out;
  for (int col = 1; col <= parts[0]; ++col) {
    int count = 0;
    for (int p : parts) count += p >= col ? 1 : 0;
    out.parts.push_back(count);
  }
  return out;
}

Partition Partition::bar() const {
  Partition out;
  for (int p : parts) {
    if (p > 1) out.parts.push_back(p - 1);
  }
  return out;
}

Partition Partition::with_unit_rows(int count) const {
  Partition out = *this;
  out.parts.insert(out.parts.end(), static_cast<std::size_t>(count), 1);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int total, int max_rows) {
  std::vector<Partition> out;
  Partition current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (max_rows >= 0 && current.rows() >= max_rows) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.parts.push_back(p);
      self(self, remaining - p, p);
      current.parts.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sum_a = 0;
  int sum_b = 0;
  int rows = std::max(a.rows(), b.rows());
  for (int i = 0; i < rows; ++i) {
    sum_a += a.part(i);
    sum_b += b.part(i);
    if (sum_a < sum_b) return false;
  }
  return true;
}

}  // namespace lcs
