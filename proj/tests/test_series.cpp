#include <doctest.h>

#include <random>

#include "lcs/series.hpp"

using namespace lcs;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, int m, int n, int D,
                              bool unit_constant = false) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  TruncatedSeries out(m, n, D);
  MultiDegree zero(static_cast<std::size_t>(m + n), 0);
  if (unit_constant) out.set_coeff(zero, 0, 1);
  for (const MultiDegree& d : degrees_up_to(m + n, D)) {
    int c = coeff(rng);
    if (c != 0) out.set_coeff(d, 0, c);
  }
  return out;
}

Rational total_coeff(const TruncatedSeries& s, int total) {
  auto totals = s.totals();
  auto it = totals.find({total, 0});
  return it == totals.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("series ring laws") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    TruncatedSeries a = random_series(rng, 1, 1, 4);
    TruncatedSeries b = random_series(rng, 1, 1, 4);
    TruncatedSeries c = random_series(rng, 1, 1, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("inverse is a two-sided inverse within the cutoff") {
  std::mt19937_64 rng(61);
  TruncatedSeries one = TruncatedSeries::constant(1, 1, 4, 1);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries f = random_series(rng, 1, 1, 4, true);
    CHECK(f * f.inverse() == one);
  }
  TruncatedSeries zero_constant(1, 1, 4);
  CHECK_THROWS_AS(zero_constant.inverse(), std::invalid_argument);
}

TEST_CASE("omega series slices") {
  TruncatedSeries omega10 = omega_series(1, 0, 5);
  for (int d = 0; d <= 5; ++d) {
    CHECK(omega10.coeff({d}, 0) == 1);
    CHECK(omega10.coeff({d}, 1) == (d >= 1 ? 1 : 0));
    CHECK(omega10.coeff({d}, 2) == 0);
  }
  // (0|1): the coefficient of t^k v^{k+eps} is 1 for eps in {0,1}, else 0.
  TruncatedSeries omega01 = omega_series(0, 1, 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(omega01.coeff({k}, k) == 1);
    CHECK(omega01.coeff({k + 1}, k) == 1);
    if (k + 2 <= 5) CHECK(omega01.coeff({k + 2}, k) == 0);
    if (k >= 1) CHECK(omega01.coeff({k - 1}, k) == 0);
  }
  MultiDegree zero{0};
  CHECK(omega01.coeff(zero, 0) == 1);
}

TEST_CASE("p_series examples") {
  TruncatedSeries p10 = p_series(1, 0, 5);
  CHECK(p10.coeff({0}) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(p10.coeff({d}) == 2);
  CHECK(p_series(0, 0, 3) == TruncatedSeries::constant(0, 0, 3, 1));
  // Symmetry under permuting the u variables.
  TruncatedSeries p20 = p_series(2, 0, 4);
  for (const MultiDegree& d : degrees_up_to(2, 4)) {
    CHECK(p20.coeff(d) == p20.coeff({d[1], d[0]}));
  }
}

TEST_CASE("exact form series by recursion") {
  TruncatedSeries ex1 = exact_form_series(1, 0, 1, 5);
  for (int d = 1; d <= 5; ++d) CHECK(ex1.coeff({d}) == 1);
  CHECK(ex1.coeff({0}) == 0);

  CHECK(exact_form_series(1, 0, 2, 5).is_zero());

  TruncatedSeries ex2 = exact_form_series(2, 0, 2, 5);
  for (const MultiDegree& d : degrees_up_to(2, 5)) {
    Rational expected = (d[0] >= 1 && d[1] >= 1) ? 1 : 0;
    CHECK(ex2.coeff(d) == expected);
  }
}

TEST_CASE("summed solution equals the recursion") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}}) {
    for (int p = 1; p <= 6; ++p) {
      CHECK(exact_form_series(m, n, p, 6) ==
            exact_form_series_sum(m, n, p, 6));
    }
  }
}

TEST_CASE("even forms series") {
  TruncatedSeries ev10 = even_forms_series(1, 0, 5);
  for (int d = 0; d <= 5; ++d) CHECK(ev10.coeff({d}) == 1);
  CHECK(even_forms_series(0, 0, 3) == TruncatedSeries::constant(0, 0, 3, 1));
  // Parity projection of the omega series at t = +-1.
  for (auto [m, n] :
       std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}}) {
    TruncatedSeries omega = omega_series(m, n, 5);
    TruncatedSeries projected = omega.eval_t(1) + omega.eval_t(-1);
    projected *= rat(1, 2);
    CHECK(projected == even_forms_series(m, n, 5));
  }
}

TEST_CASE("printed closed forms") {
  ClosedForms printed = printed_closed_forms(2, 0, 6);
  CHECK(total_coeff(printed.b3, 3) == 2);
  CHECK(total_coeff(printed.b3, 4) == 4);
  CHECK(total_coeff(printed.b3, 5) == 6);

  ClosedForms printed10 = printed_closed_forms(1, 0, 5);
  CHECK(printed10.b2.coeff({1}) == rat(3, 8));
  CHECK_FALSE(printed10.b2.all_coeffs_integer());
  CHECK_FALSE(printed10.bbar1.all_coeffs_integer());
  CHECK(printed10.b3.is_zero());
}

TEST_CASE("validated closed forms") {
  ClosedForms v10 = validated_closed_forms(1, 0, 6);
  CHECK(v10.b2.is_zero());

  ClosedForms v01 = validated_closed_forms(0, 1, 6);
  for (int d = 0; d <= 6; ++d) {
    CHECK(v01.b2.coeff({d}) == ((d >= 2 && d % 2 == 0) ? 1 : 0));
  }

  ClosedForms v20 = validated_closed_forms(2, 0, 5);
  for (int d = 0; d <= 5; ++d) {
    CHECK(total_coeff(v20.bbar1, d) == d + 1);
  }

  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}}) {
    ClosedForms v = validated_closed_forms(m, n, 5);
    CHECK(v.b2 == pipeline_b2_series(m, n, 5));
    CHECK(v.bbar1 == pipeline_bbar1_series(m, n, 5));
    CHECK(v.b2.all_coeffs_nonnegative_integer());
    CHECK(v.bbar1.all_coeffs_nonnegative_integer());
    CHECK(v.b3.all_coeffs_nonnegative_integer());
  }
}

TEST_CASE("series_from_dims round trip") {
  DimensionTable table;
  table.append(SeriesKind::B, 2, {1, 1}, 1);
  table.append(SeriesKind::B, 2, {2, 1}, 2);
  table.append(SeriesKind::B, 3, {2, 1}, 7);  // other k: ignored
  TruncatedSeries s = series_from_dims(table, SeriesKind::B, 2, 2, 0, 4);
  CHECK(s.coeff({1, 1}) == 1);
  CHECK(s.coeff({2, 1}) == 2);
  CHECK(s.coeff({2, 2}) == 0);
}

TEST_CASE("series rendering sorted") {
  TruncatedSeries s(1, 1, 3);
  s.set_coeff({1, 0}, 0, rat(1, 2));
  s.set_coeff({0, 2}, 0, rat(-1));
  CHECK(s.to_string() == "-1*v1^2 + 1/2*u1");
}
