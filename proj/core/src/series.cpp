#include "lcs/series.hpp"

#include <stdexcept>

namespace lcs {

TruncatedSeries TruncatedSeries::constant(int m, int n, int cutoff, Rational c,
                                          bool has_t) {
  TruncatedSeries out(m, n, cutoff, has_t);
  out.set_coeff(MultiDegree(static_cast<std::size_t>(m + n), 0), 0, std::move(c));
  return out;
}

TruncatedSeries TruncatedSeries::variable(int m, int n, int cutoff, int index,
                                          bool has_t) {
  TruncatedSeries out(m, n, cutoff, has_t);
  MultiDegree d(static_cast<std::size_t>(m + n), 0);
  d[static_cast<std::size_t>(index)] = 1;
  out.set_coeff(std::move(d), 0, 1);
  return out;
}

Rational TruncatedSeries::coeff(const MultiDegree& d, int t_power) const {
  auto it = coeffs_.find({d, t_power});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coeff(MultiDegree d, int t_power, Rational c) {
  if (total_degree(d) > cutoff_) return;
  Key key{std::move(d), t_power};
  if (c == 0) {
    coeffs_.erase(key);
  } else {
    coeffs_[std::move(key)] = std::move(c);
  }
}

void TruncatedSeries::add_coeff(MultiDegree d, int t_power,
                                const Rational& c) {
  if (c == 0 || total_degree(d) > cutoff_) return;
  Key key{std::move(d), t_power};
  auto [it, inserted] = coeffs_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  for (const auto& [key, c] : other.coeffs_) add_coeff(key.degree, key.t_power, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  for (const auto& [key, c] : other.coeffs_) add_coeff(key.degree, key.t_power, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, coeff] : coeffs_) coeff *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(a.m_, a.n_, std::min(a.cutoff_, b.cutoff_),
                      a.has_t_ || b.has_t_);
  for (const auto& [ka, ca] : a.coeffs_) {
    int ta = total_degree(ka.degree);
    for (const auto& [kb, cb] : b.coeffs_) {
      if (ta + total_degree(kb.degree) > out.cutoff_) continue;
      out.add_coeff(degree_sum(ka.degree, kb.degree), ka.t_power + kb.t_power,
                    ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  MultiDegree zero(static_cast<std::size_t>(vars()), 0);
  Rational c = coeff(zero, 0);
  if (c == 0) throw std::invalid_argument("inverse: zero constant term");
  for (const auto& [key, value] : coeffs_) {
    (void)value;
    if (total_degree(key.degree) == 0 && key.t_power != 0) {
      throw std::invalid_argument("inverse: pure-t term of uv-degree zero");
    }
  }
  // f = c(1 - g) with g of positive uv-degree: 1/f = (1/c) sum g^k.
  TruncatedSeries g = *this;
  g *= -1 / c;
  g.add_coeff(zero, 0, 1);  // g = 1 - f/c
  TruncatedSeries out = constant(m_, n_, cutoff_, 1 / c, has_t_);
  TruncatedSeries power = constant(m_, n_, cutoff_, 1, has_t_);
  for (int k = 1; k <= cutoff_; ++k) {
    power = power * g;
    if (power.is_zero()) break;
    TruncatedSeries term = power;
    term *= 1 / c;
    out += term;
  }
  return out;
}

TruncatedSeries TruncatedSeries::t_slice(int k) const {
  TruncatedSeries out(m_, n_, cutoff_, false);
  for (const auto& [key, c] : coeffs_) {
    if (key.t_power == k) out.set_coeff(key.degree, 0, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::eval_t(int sign) const {
  TruncatedSeries out(m_, n_, cutoff_, false);
  for (const auto& [key, c] : coeffs_) {
    bool negate = sign < 0 && (key.t_power & 1);
    out.add_coeff(key.degree, 0, negate ? Rational(-c) : c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int new_cutoff) const {
  TruncatedSeries out(m_, n_, new_cutoff, has_t_);
  for (const auto& [key, c] : coeffs_) {
    out.add_coeff(key.degree, key.t_power, c);
  }
  return out;
}

std::map<std::pair<int, int>, Rational> TruncatedSeries::totals() const {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [key, c] : coeffs_) {
    out[{total_degree(key.degree), key.t_power}] += c;
  }
  return out;
}

bool TruncatedSeries::all_coeffs_integer() const {
  for (const auto& [key, c] : coeffs_) {
    (void)key;
    if (!is_integer(c)) return false;
  }
  return true;
}

bool TruncatedSeries::all_coeffs_nonnegative_integer() const {
  for (const auto& [key, c] : coeffs_) {
    (void)key;
    if (!is_integer(c) || c < 0) return false;
  }
  return true;
}

std::string TruncatedSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += rat_str(c);
    for (int i = 0; i < vars(); ++i) {
      int e = key.degree[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      out += (i < m_ ? "*u" + std::to_string(i + 1)
                     : "*v" + std::to_string(i - m_ + 1));
      if (e > 1) out += "^" + std::to_string(e);
    }
    if (key.t_power > 0) {
      out += "*t";
      if (key.t_power > 1) out += "^" + std::to_string(key.t_power);
    }
  }
  return out;
}

namespace {

/// (1 + s*x_index) as a series; with_t multiplies the variable by t.
TruncatedSeries one_plus_var(int m, int n, int D, int index, int s,
                             bool with_t) {
  TruncatedSeries out = TruncatedSeries::constant(m, n, D, 1, with_t);
  MultiDegree d(static_cast<std::size_t>(m + n), 0);
  d[static_cast<std::size_t>(index)] = 1;
  out.set_coeff(std::move(d), with_t ? 1 : 0, s);
  return out;
}

}  // namespace

TruncatedSeries omega_series(int m, int n, int D) {
  TruncatedSeries out = TruncatedSeries::constant(m, n, D, 1, true);
  for (int j = 0; j < n; ++j) out = out * one_plus_var(m, n, D, m + j, 1, false);
  for (int i = 0; i < m; ++i) {
    out = out * one_plus_var(m, n, D, i, -1, false).inverse();
  }
  for (int i = 0; i < m; ++i) out = out * one_plus_var(m, n, D, i, 1, true);
  for (int j = 0; j < n; ++j) {
    out = out * one_plus_var(m, n, D, m + j, -1, true).inverse();
  }
  return out;
}

TruncatedSeries p_series(int m, int n, int D) {
  TruncatedSeries out = TruncatedSeries::constant(m, n, D, 1);
  for (int i = 0; i < m + n; ++i) {
    out = out * one_plus_var(m, n, D, i, 1, false);
    out = out * one_plus_var(m, n, D, i, -1, false).inverse();
  }
  return out;
}

TruncatedSeries sym_alg_series(int m, int n, int D) {
  TruncatedSeries out = TruncatedSeries::constant(m, n, D, 1);
  for (int j = 0; j < n; ++j) out = out * one_plus_var(m, n, D, m + j, 1, false);
  for (int i = 0; i < m; ++i) {
    out = out * one_plus_var(m, n, D, i, -1, false).inverse();
  }
  return out;
}

TruncatedSeries exact_form_series(int m, int n, int p, int D) {
  if (p < 1) throw std::invalid_argument("exact_form_series: p >= 1");
  TruncatedSeries omega = omega_series(m, n, D);
  TruncatedSeries exact =
      omega.t_slice(0) - TruncatedSeries::constant(m, n, D, 1);
  for (int i = 2; i <= p; ++i) {
    exact = omega.t_slice(i - 1) - exact;
  }
  return exact;
}

TruncatedSeries exact_form_series_sum(int m, int n, int p, int D) {
  if (p < 1) throw std::invalid_argument("exact_form_series_sum: p >= 1");
  TruncatedSeries omega = omega_series(m, n, D);
  TruncatedSeries out(m, n, D);
  for (int j = 0; j <= p - 1; ++j) {
    TruncatedSeries term = omega.t_slice(j);
    if ((p - j - 1) & 1) {
      out -= term;
    } else {
      out += term;
    }
  }
  out += TruncatedSeries::constant(m, n, D, (p & 1) ? -1 : 1);
  return out;
}

TruncatedSeries even_forms_series(int m, int n, int D) {
  TruncatedSeries out = p_series(m, n, D);
  out += TruncatedSeries::constant(m, n, D, 1);
  out *= rat(1, 2);
  return out;
}

TruncatedSeries pipeline_b2_series(int m, int n, int D) {
  TruncatedSeries out(m, n, D);
  for (int p = 2; p <= D; p += 2) {
    out += exact_form_series(m, n, p, D);
  }
  return out;
}

TruncatedSeries pipeline_bbar1_series(int m, int n, int D) {
  return even_forms_series(m, n, D) - pipeline_b2_series(m, n, D);
}

namespace {

/// sum_i s_num * x_i / (den_scale * (1 + s_den * x_i)).
TruncatedSeries middle_sum(int m, int n, int D, long num_scale,
                           long den_scale) {
  TruncatedSeries out(m, n, D);
  for (int i = 0; i < m; ++i) {
    TruncatedSeries term = TruncatedSeries::variable(m, n, D, i);
    term = term * one_plus_var(m, n, D, i, -1, false).inverse();
    term *= rat(num_scale, den_scale);
    out += term;
  }
  for (int j = 0; j < n; ++j) {
    TruncatedSeries term = TruncatedSeries::variable(m, n, D, m + j);
    term = term * one_plus_var(m, n, D, m + j, 1, false).inverse();
    term *= rat(num_scale, den_scale);
    out += term;
  }
  return out;
}

TruncatedSeries b3_closed_form(int m, int n, int D) {
  TruncatedSeries p = p_series(m, n, D);
  TruncatedSeries linear(m, n, D);
  for (int i = 0; i < m + n; ++i) {
    linear += TruncatedSeries::variable(m, n, D, i);
  }
  TruncatedSeries out =
      linear * (p + TruncatedSeries::constant(m, n, D, 1)) -
      (p - TruncatedSeries::constant(m, n, D, 1));
  out *= rat(1, 2);
  return out;
}

}  // namespace

ClosedForms printed_closed_forms(int m, int n, int D) {
  TruncatedSeries p = p_series(m, n, D);
  TruncatedSeries middle = middle_sum(m, n, D, 1, 2);
  TruncatedSeries bbar1 =
      p + middle + TruncatedSeries::constant(m, n, D, 3);
  bbar1 *= rat(1, 4);
  TruncatedSeries b2 = p - middle - TruncatedSeries::constant(m, n, D, 1);
  b2 *= rat(1, 4);
  return {std::move(bbar1), std::move(b2), b3_closed_form(m, n, D)};
}

ClosedForms validated_closed_forms(int m, int n, int D) {
  TruncatedSeries p = p_series(m, n, D);
  TruncatedSeries b2 = p - TruncatedSeries::constant(m, n, D, 1);
  b2 *= rat(1, 4);
  b2 -= middle_sum(m, n, D, 1, 2);
  TruncatedSeries bbar1 = even_forms_series(m, n, D) - b2;
  return {std::move(bbar1), std::move(b2), b3_closed_form(m, n, D)};
}

TruncatedSeries series_from_dims(const DimensionTable& table,
                                 SeriesKind series, int k, int m, int n,
                                 int D) {
  TruncatedSeries out(m, n, D);
  for (const DimRow& row : table.rows) {
    if (row.series != series || row.k != k) continue;
    if (total_degree(row.degree) > D) continue;
    out.add_coeff(row.degree, 0, row.dim);
  }
  return out;
}

}  // namespace lcs
