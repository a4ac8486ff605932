#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcs {

/// Generator alphabet of A_{m|n}: even x_1..x_m, then odd y_1..y_n.
/// Letters are 0-based indices; letters >= m are odd.
struct GeneratorSet {
  int m = 0;
  int n = 0;

  int count() const { return m + n; }
  bool is_odd(int letter) const { return letter >= m; }

  /// "x3" / "y1" in the 1-based naming of reports.
  std::string letter_name(int letter) const {
    return letter < m ? "x" + std::to_string(letter + 1)
                      : "y" + std::to_string(letter - m + 1);
  }

  bool operator==(const GeneratorSet&) const = default;
};

/// Exponent vector over the m+n generators; the grading lattice.
using MultiDegree = std::vector<int>;

inline int total_degree(const MultiDegree& d) {
  return std::accumulate(d.begin(), d.end(), 0);
}

/// Parity of every homogeneous element of multidegree d: total odd degree
/// mod 2.
inline int degree_parity(const GeneratorSet& gens, const MultiDegree& d) {
  int odd = 0;
  for (int j = gens.m; j < gens.count(); ++j) odd += d[static_cast<std::size_t>(j)];
  return odd & 1;
}

inline MultiDegree degree_sum(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline MultiDegree degree_diff(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) throw std::invalid_argument("degree_diff: not a subdegree");
  }
  return out;
}

inline bool degree_leq(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// All multidegrees with the given total, in lexicographic order.
std::vector<MultiDegree> degrees_of_total(int vars, int total);

/// All multidegrees of total 1..D, ordered by total then lexicographically.
std::vector<MultiDegree> degrees_up_to(int vars, int D);

/// All componentwise subdegrees of d (including zero and d itself),
/// in lexicographic order.
std::vector<MultiDegree> sub_degrees(const MultiDegree& d);

inline std::string degree_str(const MultiDegree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

}  // namespace lcs
