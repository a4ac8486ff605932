#include "lcs/schur.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace lcs {

namespace {

/// h_0..h_max as the t-slices of prod(1+t v_j)/prod(1-t u_i).
std::vector<TruncatedSeries> super_h_table(int k_max, int m, int n, int D) {
  TruncatedSeries gen = TruncatedSeries::constant(m, n, D, 1, true);
  for (int j = 0; j < n; ++j) {
    TruncatedSeries factor = TruncatedSeries::constant(m, n, D, 1, true);
    MultiDegree d(static_cast<std::size_t>(m + n), 0);
    d[static_cast<std::size_t>(m + j)] = 1;
    factor.set_coeff(std::move(d), 1, 1);
    gen = gen * factor;
  }
  for (int i = 0; i < m; ++i) {
    TruncatedSeries factor = TruncatedSeries::constant(m, n, D, 1, true);
    MultiDegree d(static_cast<std::size_t>(m + n), 0);
    d[static_cast<std::size_t>(i)] = 1;
    factor.set_coeff(std::move(d), 1, -1);
    gen = gen * factor.inverse();
  }
  std::vector<TruncatedSeries> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(gen.t_slice(k));
  return out;
}

}  // namespace

TruncatedSeries super_h(int k, int m, int n, int D) {
  if (k < 0) throw std::invalid_argument("super_h: k >= 0");
  return super_h_table(k, m, n, D).back();
}

TruncatedSeries hook_schur(const Partition& lambda, int m, int n, int D) {
  const int rows = lambda.rows();
  if (rows == 0) return TruncatedSeries::constant(m, n, D, 1);
  if (rows > 31) throw std::invalid_argument("hook_schur: too many rows");
  int h_max = 0;
  for (int i = 0; i < rows; ++i) {
    h_max = std::max(h_max, lambda.part(i) - i + rows - 1);
  }
  auto h = super_h_table(std::max(h_max, 0), m, n, D);
  auto entry = [&](int i, int j) -> const TruncatedSeries* {
    int idx = lambda.part(i) - i + j;
    if (idx < 0) return nullptr;  // zero entry
    return &h[static_cast<std::size_t>(idx)];
  };
  // Determinant by column-subset dynamic programming: f(mask) expands the
  // minor on rows [rows-|mask| ..) and the columns in mask.
  std::map<std::uint32_t, TruncatedSeries> memo;
  auto det = [&](auto&& self, std::uint32_t mask) -> TruncatedSeries {
    if (mask == 0) return TruncatedSeries::constant(m, n, D, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = rows - std::popcount(mask);
    TruncatedSeries acc(m, n, D);
    int position = 0;
    for (int j = 0; j < rows; ++j) {
      if (!(mask >> j & 1)) continue;
      const TruncatedSeries* e = entry(row, j);
      if (e != nullptr && !e->is_zero()) {
        TruncatedSeries sub = self(self, mask & ~(1u << j));
        TruncatedSeries term = *e * sub;
        if (position & 1) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det(det, (1u << rows) - 1);
}

TruncatedSeries tensor_field_character(const Partition& lambda, int n,
                                       int D) {
  if (lambda.rows() > n) {
    throw std::invalid_argument("tensor_field_character: more rows than n");
  }
  if (lambda.rows() == 0) return TruncatedSeries::constant(n, 0, D, 1);
  bool is_column = lambda.part(0) == 1;
  if (is_column && lambda.rows() < n) {
    return exact_form_series(n, 0, lambda.rows(), D);
  }
  TruncatedSeries out = hook_schur(lambda, n, 0, D);
  for (int i = 0; i < n; ++i) {
    TruncatedSeries factor = TruncatedSeries::constant(n, 0, D, 1);
    MultiDegree d(static_cast<std::size_t>(n), 0);
    d[static_cast<std::size_t>(i)] = 1;
    factor.set_coeff(std::move(d), 0, -1);
    out = out * factor.inverse();
  }
  return out;
}

TruncatedSeries g_lambda_character(const Partition& lambda, int m, int n,
                                   int D) {
  TruncatedSeries columns(m, n, D);
  for (int k = 0; lambda.size() + 2 * k <= D; ++k) {
    columns += hook_schur(lambda.with_unit_rows(2 * k), m, n, D);
  }
  return sym_alg_series(m, n, D) * columns;
}

TruncatedSeries b3_schur_character(int m, int n, int D) {
  TruncatedSeries columns(m, n, D);
  for (int k = 0; 3 + 2 * k <= D; ++k) {
    columns += hook_schur(Partition({2}).with_unit_rows(2 * k + 1), m, n, D);
  }
  return sym_alg_series(m, n, D) * columns;
}

Decomposition decompose_tensor_field(const TruncatedSeries& series, int n,
                                     int D) {
  Decomposition out;
  TruncatedSeries residual = series.truncated(D);
  for (int total = 0; total <= D; ++total) {
    for (const Partition& lambda : partitions_of(total, n)) {
      MultiDegree key(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < lambda.rows(); ++i) {
        key[static_cast<std::size_t>(i)] = lambda.part(i);
      }
      Rational c = residual.coeff(key);
      if (c == 0) continue;
      if (c < 0 || !is_integer(c)) {
        out.failed_degree = key;
        out.failed_coeff = c;
        return out;
      }
      residual -= c * tensor_field_character(lambda, n, D);
      out.table.emplace_back(lambda, static_cast<long>(c.get_num().get_si()));
    }
    // Anything left in this degree is not explained by any leading monomial.
    for (const auto& [key, c] : residual.coeffs()) {
      if (total_degree(key.degree) == total && c != 0) {
        out.failed_degree = key.degree;
        out.failed_coeff = c;
        return out;
      }
    }
  }
  out.success = true;
  return out;
}

bool LambdaBoundsReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const LambdaBoundRow& r) {
    return r.size_ok && r.bar_ok;
  });
}

LambdaBoundsReport check_lambda_bounds(
    const std::vector<std::pair<Partition, long>>& table, int k, int n) {
  auto floor_div = [](int a, int b) {
    int q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
  };
  LambdaBoundsReport report;
  report.k = k;
  report.n = n;
  report.size_bound = 2 * k - 3 + 2 * floor_div(n - 2, 2);
  report.bar_bound = 2 * k - 5;
  for (const auto& [lambda, mult] : table) {
    (void)mult;
    LambdaBoundRow row;
    row.lambda = lambda;
    row.size = lambda.size();
    row.bar_size = lambda.bar().size();
    row.size_ok = row.size <= report.size_bound;
    row.bar_ok = row.bar_size <= report.bar_bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

RationalityProbe rationality_probe(const TruncatedSeries& series, int m,
                                   int n) {
  const int D = series.cutoff();
  TruncatedSeries product = series;
  for (int i = 0; i < m + n; ++i) {
    TruncatedSeries factor = TruncatedSeries::constant(m, n, D, 1);
    MultiDegree d(static_cast<std::size_t>(m + n), 0);
    d[static_cast<std::size_t>(i)] = 1;
    factor.set_coeff(std::move(d), 0, -1);
    product = product * factor;
  }
  RationalityProbe out{false, TruncatedSeries(m, n, D), std::nullopt};
  for (const auto& [key, c] : product.coeffs()) {
    if (total_degree(key.degree) > D - m - n && c != 0) {
      out.offending_degree = key.degree;
      return out;
    }
  }
  out.success = true;
  out.numerator = std::move(product);
  return out;
}

std::optional<MultiDegree> hook_leading_monomial(const Partition& lambda,
                                                 int m, int n) {
  if (lambda.part(m) > n) return std::nullopt;  // misses the (m,n) hook
  MultiDegree weight(static_cast<std::size_t>(m + n), 0);
  for (int i = 0; i < std::min(m, lambda.rows()); ++i) {
    weight[static_cast<std::size_t>(i)] = lambda.part(i);
  }
  Partition conj = lambda.conjugate();
  for (int j = 0; j < n; ++j) {
    weight[static_cast<std::size_t>(m + j)] = std::max(conj.part(j) - m, 0);
  }
  return weight;
}

GLambdaFit fit_g_lambda(const TruncatedSeries& series, int m, int n, int D) {
  GLambdaFit out{false, {}, series.truncated(D)};
  for (int total = 0; total <= D; ++total) {
    // Candidates of this size, ordered by descending leading monomial.
    std::vector<std::pair<MultiDegree, Partition>> candidates;
    for (const Partition& lambda : partitions_of(total)) {
      auto leading = hook_leading_monomial(lambda, m, n);
      if (leading) candidates.emplace_back(*leading, lambda);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [leading, lambda] : candidates) {
      Rational c = out.residual.coeff(leading);
      if (c == 0) continue;
      if (c < 0 || !is_integer(c)) return out;
      out.residual -= c * g_lambda_character(lambda, m, n, D);
      out.multiset.emplace_back(lambda, static_cast<long>(c.get_num().get_si()));
    }
    for (const auto& [key, c] : out.residual.coeffs()) {
      if (total_degree(key.degree) == total && c != 0) return out;
    }
  }
  out.success = out.residual.is_zero();
  return out;
}

WeakboundFit weakbound_fit(
    const std::vector<std::pair<int, long>>& dims_by_total, int m, int n) {
  WeakboundFit out;
  const int exponent = m + n - 1;
  for (const auto& [d, dim] : dims_by_total) {
    if (d <= 0) continue;
    Rational power = 1;
    for (int e = 0; e < exponent; ++e) power *= d;
    Rational ratio = Rational(dim) / power;
    if (ratio > out.constant) out.constant = ratio;
  }
  out.holds = true;
  for (const auto& [d, dim] : dims_by_total) {
    if (d <= 0) continue;
    Rational power = 1;
    for (int e = 0; e < exponent; ++e) power *= d;
    if (Rational(dim) > out.constant * power) {
      out.holds = false;
      break;
    }
  }
  return out;
}

}  // namespace lcs
