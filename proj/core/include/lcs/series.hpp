#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcs/lcs_engine.hpp"
#include "lcs/multidegree.hpp"
#include "lcs/rational.hpp"

namespace lcs {

/// Multivariate power series in u_1..u_m, v_1..v_n and optionally the form
/// counter t, truncated at total (u,v)-degree D. The t grading is exact:
/// every stored t-power rides on at least one unit of uv-degree, which is
/// what makes inversion and the form-degree slices terminate.
class TruncatedSeries {
 public:
  struct Key {
    MultiDegree degree;
    int t_power = 0;

    auto operator<=>(const Key&) const = default;
  };

  TruncatedSeries(int m, int n, int cutoff, bool has_t = false)
      : m_(m), n_(n), cutoff_(cutoff), has_t_(has_t) {}

  static TruncatedSeries constant(int m, int n, int cutoff, Rational c,
                                  bool has_t = false);
  /// The series u_i (0 <= i < m) or v_{i-m} (m <= i < m+n).
  static TruncatedSeries variable(int m, int n, int cutoff, int index,
                                  bool has_t = false);

  int m() const { return m_; }
  int n() const { return n_; }
  int vars() const { return m_ + n_; }
  int cutoff() const { return cutoff_; }
  bool has_t() const { return has_t_; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<Key, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(const MultiDegree& d, int t_power = 0) const;
  void set_coeff(MultiDegree d, int t_power, Rational c);
  void add_coeff(MultiDegree d, int t_power, const Rational& c);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
    return a *= c;
  }

  /// Multiplicative inverse; requires a nonzero constant term and no pure-t
  /// terms of uv-degree zero.
  TruncatedSeries inverse() const;

  /// Coefficient of t^k, as a series without t.
  TruncatedSeries t_slice(int k) const;

  /// Substitutes t = 1 or t = -1.
  TruncatedSeries eval_t(int sign) const;

  /// Drops every coefficient of total uv-degree above new_cutoff.
  TruncatedSeries truncated(int new_cutoff) const;

  /// Coefficients summed over multidegrees of equal total; keys are
  /// (total, t_power).
  std::map<std::pair<int, int>, Rational> totals() const;

  bool all_coeffs_integer() const;
  bool all_coeffs_nonnegative_integer() const;

  bool operator==(const TruncatedSeries& other) const {
    return coeffs_ == other.coeffs_;
  }

  std::string to_string() const;

 private:
  int m_;
  int n_;
  int cutoff_;
  bool has_t_;
  std::map<Key, Rational> coeffs_;
};

/// Hilbert series of the full super de Rham algebra, t counting form degree:
/// prod(1+v_j)/prod(1-u_i) * prod(1+t u_i)/prod(1-t v_j).
TruncatedSeries omega_series(int m, int n, int D);

/// The product kernel prod (1+u_i)/(1-u_i) * prod (1+v_j)/(1-v_j).
TruncatedSeries p_series(int m, int n, int D);

/// Hilbert series of S(C^{m|n}): prod(1+v_j)/prod(1-u_i).
TruncatedSeries sym_alg_series(int m, int n, int D);

/// Exact p-forms by the recursion h_ex^1 = h^0 - 1,
/// h_ex^i = h^{i-1} - h_ex^{i-1}.
TruncatedSeries exact_form_series(int m, int n, int p, int D);

/// The same series from the alternating-sum solution of the recursion,
/// sum_{j<p} (-1)^{p-j-1} h^j + (-1)^p; kept as an independent route.
TruncatedSeries exact_form_series_sum(int m, int n, int p, int D);

/// Even-form series (P+1)/2.
TruncatedSeries even_forms_series(int m, int n, int D);

/// Sum of the exact 2k-form series: the ground-truth B2 pipeline.
TruncatedSeries pipeline_b2_series(int m, int n, int D);

/// even_forms_series - pipeline_b2_series.
TruncatedSeries pipeline_bbar1_series(int m, int n, int D);

struct ClosedForms {
  TruncatedSeries bbar1;
  TruncatedSeries b2;
  TruncatedSeries b3;
};

/// The three closed formulas exactly as displayed, middle terms
/// u_i/(2(1-u_i)) and v_j/(2(1+v_j)) included verbatim.
ClosedForms printed_closed_forms(int m, int n, int D);

/// Reconciled variants matching the brute-force dimensions:
/// B2 = (P-1)/4 - (sum u_i/(1-u_i) + sum v_j/(1+v_j))/2,
/// Bbar1 = (P+1)/2 - B2, and B3 as displayed.
ClosedForms validated_closed_forms(int m, int n, int D);

/// Brute-force dimension rows of one series as a multigraded power series.
TruncatedSeries series_from_dims(const DimensionTable& table,
                                 SeriesKind series, int k, int m, int n,
                                 int D);

}  // namespace lcs
