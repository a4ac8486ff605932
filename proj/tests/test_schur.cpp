#include <doctest.h>

#include <functional>

#include "lcs/schur.hpp"

using namespace lcs;

namespace {

/// Test oracle: classical Schur polynomial by enumerating semistandard
/// tableaux of shape lambda with entries in 1..m (rows weakly increase,
/// columns strictly increase), independent of the Jacobi-Trudi route.
TruncatedSeries tableau_schur(const Partition& lambda, int m, int D) {
  TruncatedSeries out(m, 0, D);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == lambda.rows()) {
      MultiDegree weight(static_cast<std::size_t>(m), 0);
      for (const auto& row : rows) {
        for (int e : row) weight[static_cast<std::size_t>(e - 1)] += 1;
      }
      out.add_coeff(weight, 0, 1);
      return;
    }
    if (c == lambda.part(r)) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) - 1]);
    if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1);
    for (int e = lo; e <= m; ++e) {
      rows[static_cast<std::size_t>(r)].push_back(e);
      fill(r, c + 1);
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  fill(0, 0);
  return out;
}

Rational total_coeff(const TruncatedSeries& s, int total) {
  auto totals = s.totals();
  auto it = totals.find({total, 0});
  return it == totals.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition lambda({3, 2, 2, 1});
  CHECK(lambda.size() == 8);
  CHECK(lambda.conjugate() == Partition({4, 3, 1}));
  CHECK(lambda.bar() == Partition({2, 1, 1}));
  CHECK(Partition({1, 1}).bar() == Partition());
  CHECK(Partition({2}).with_unit_rows(3) == Partition({2, 1, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);

  auto parts = partitions_of(4);
  REQUIRE(parts.size() == 5);
  CHECK(parts.front() == Partition({4}));
  CHECK(parts.back() == Partition({1, 1, 1, 1}));
  CHECK(partitions_of(4, 2).size() == 3);

  CHECK(dominates(Partition({2, 2}), Partition({2, 1, 1})));
  CHECK_FALSE(dominates(Partition({2, 1, 1}), Partition({2, 2})));
}

TEST_CASE("supersymmetric h") {
  CHECK(super_h(0, 1, 1, 4) == TruncatedSeries::constant(1, 1, 4, 1));

  TruncatedSeries h1 = super_h(1, 1, 1, 4);
  CHECK(h1.coeff({1, 0}) == 1);
  CHECK(h1.coeff({0, 1}) == 1);
  CHECK(h1.coeff({1, 1}) == 0);

  TruncatedSeries h2 = super_h(2, 1, 1, 4);
  CHECK(h2.coeff({2, 0}) == 1);
  CHECK(h2.coeff({1, 1}) == 1);
  CHECK(h2.coeff({0, 2}) == 0);
}

TEST_CASE("hook Schur basics") {
  TruncatedSeries s1 = hook_schur(Partition({1}), 1, 1, 4);
  CHECK(s1 == super_h(1, 1, 1, 4));

  // s_{(1,1)} = h1^2 - h2 = uv + v^2 on C^{1|1}.
  TruncatedSeries s11 = hook_schur(Partition({1, 1}), 1, 1, 4);
  CHECK(s11.coeff({1, 1}) == 1);
  CHECK(s11.coeff({0, 2}) == 1);
  CHECK(s11.coeff({2, 0}) == 0);

  // Vanishes outside the (m,n) hook.
  CHECK(hook_schur(Partition({1, 1}), 1, 0, 4).is_zero());
  CHECK_FALSE(hook_schur(Partition({1, 1, 1}), 1, 1, 4).is_zero());
}

TEST_CASE("hook Schur matches the tableau oracle at n = 0") {
  for (int m : {2, 3}) {
    for (int size = 1; size <= 4; ++size) {
      for (const Partition& lambda : partitions_of(size)) {
        CHECK(hook_schur(lambda, m, 0, 5) == tableau_schur(lambda, m, 5));
      }
    }
  }
}

TEST_CASE("hook Schur conjugate duality at m = 0") {
  // s_lambda(0|v) = s_{lambda'}(v) as a classical Schur polynomial.
  for (int n : {2, 3}) {
    for (int size = 1; size <= 4; ++size) {
      for (const Partition& lambda : partitions_of(size)) {
        TruncatedSeries super = hook_schur(lambda, 0, n, 5);
        TruncatedSeries classical = tableau_schur(lambda.conjugate(), n, 5);
        // Compare coefficientwise: variables are v_1..v_n on both sides.
        REQUIRE(super.coeffs().size() == classical.coeffs().size());
        for (const auto& [key, c] : classical.coeffs()) {
          CHECK(super.coeff(key.degree) == c);
        }
      }
    }
  }
}

TEST_CASE("tensor field characters") {
  // F_{(2,1)} on C^2 collapses to 2u^3/(1-u)^2.
  TruncatedSeries f21 = tensor_field_character(Partition({2, 1}), 2, 6);
  CHECK(total_coeff(f21, 3) == 2);
  CHECK(total_coeff(f21, 4) == 4);
  CHECK(total_coeff(f21, 5) == 6);
  CHECK(total_coeff(f21, 2) == 0);

  // F_{(1)} on C^1: exact 1-forms u/(1-u).
  TruncatedSeries f1 = tensor_field_character(Partition({1}), 1, 5);
  CHECK(f1 == exact_form_series(1, 0, 1, 5));

  // F_{(1,1)} on C^2: exact 2-forms.
  TruncatedSeries f11 = tensor_field_character(Partition({1, 1}), 2, 5);
  CHECK(f11 == exact_form_series(2, 0, 2, 5));

  CHECK(tensor_field_character(Partition(), 2, 5) ==
        TruncatedSeries::constant(2, 0, 5, 1));
  CHECK_THROWS_AS(tensor_field_character(Partition({1, 1, 1}), 2, 5),
                  std::invalid_argument);
}

TEST_CASE("g_lambda characters") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}}) {
    CHECK(g_lambda_character(Partition(), m, n, 6) ==
          even_forms_series(m, n, 6));
    ClosedForms printed = printed_closed_forms(m, n, 6);
    CHECK(g_lambda_character(Partition({2, 1}), m, n, 6) == printed.b3);
    CHECK(b3_schur_character(m, n, 6) == printed.b3);
  }
  CHECK(b3_schur_character(1, 0, 6).is_zero());
  TruncatedSeries single = g_lambda_character(Partition({3, 1}), 2, 0, 5);
  // D < |lambda| + 2: only the k = 0 summand contributes.
  TruncatedSeries expected =
      sym_alg_series(2, 0, 5) * hook_schur(Partition({3, 1}), 2, 0, 5);
  CHECK(single == expected);
}

TEST_CASE("tensor field decomposition round trips") {
  TruncatedSeries input = tensor_field_character(Partition({2, 1}), 2, 6);
  Decomposition d = decompose_tensor_field(input, 2, 6);
  REQUIRE(d.success);
  REQUIRE(d.table.size() == 1);
  CHECK(d.table[0].first == Partition({2, 1}));
  CHECK(d.table[0].second == 1);

  // A mixed non-trivial combination.
  TruncatedSeries combo = tensor_field_character(Partition({2}), 2, 6);
  combo += 2 * tensor_field_character(Partition({1, 1}), 2, 6);
  Decomposition d2 = decompose_tensor_field(combo, 2, 6);
  REQUIRE(d2.success);
  REQUIRE(d2.table.size() == 2);
  CHECK(d2.table[0].first == Partition({2}));
  CHECK(d2.table[0].second == 1);
  CHECK(d2.table[1].first == Partition({1, 1}));
  CHECK(d2.table[1].second == 2);

  // Negative input fails with a witness.
  TruncatedSeries bad(2, 0, 4);
  bad.set_coeff({1, 0}, 0, rat(-1));
  Decomposition d3 = decompose_tensor_field(bad, 2, 4);
  CHECK_FALSE(d3.success);
  REQUIRE(d3.failed_degree.has_value());
  CHECK(d3.failed_coeff == rat(-1));

  // B2 on two even generators is the exact 2-forms, i.e. F_{(1,1)}.
  Decomposition d4 =
      decompose_tensor_field(validated_closed_forms(2, 0, 6).b2, 2, 6);
  REQUIRE(d4.success);
  REQUIRE(d4.table.size() == 1);
  CHECK(d4.table[0].first == Partition({1, 1}));
  CHECK(d4.table[0].second == 1);
}

TEST_CASE("lambda bound checks") {
  std::vector<std::pair<Partition, long>> table{{Partition({2, 1}), 1}};
  LambdaBoundsReport report = check_lambda_bounds(table, 3, 2);
  CHECK(report.size_bound == 3);
  CHECK(report.bar_bound == 1);
  CHECK(report.all_pass());

  std::vector<std::pair<Partition, long>> synthetic{{Partition({3, 3}), 1}};
  CHECK_FALSE(check_lambda_bounds(synthetic, 3, 2).all_pass());
}

TEST_CASE("rationality probe") {
  // Constant 1: numerator is the full denominator product.
  TruncatedSeries one = TruncatedSeries::constant(1, 1, 6, 1);
  RationalityProbe p1 = rationality_probe(one, 1, 1);
  REQUIRE(p1.success);
  CHECK(p1.numerator.coeff({0, 0}) == 1);
  CHECK(p1.numerator.coeff({1, 0}) == -1);
  CHECK(p1.numerator.coeff({0, 1}) == -1);
  CHECK(p1.numerator.coeff({1, 1}) == 1);

  // 1/(1-u)^2 has the wrong denominator for m = 1.
  TruncatedSeries geometric2(1, 0, 6);
  for (int d = 0; d <= 6; ++d) geometric2.set_coeff({d}, 0, d + 1);
  CHECK_FALSE(rationality_probe(geometric2, 1, 0).success);

  // u1 u2 / ((1-u1)(1-u2)).
  TruncatedSeries exact2 = exact_form_series(2, 0, 2, 6);
  RationalityProbe p2 = rationality_probe(exact2, 2, 0);
  REQUIRE(p2.success);
  CHECK(p2.numerator.coeffs().size() == 1);
  CHECK(p2.numerator.coeff({1, 1}) == 1);
}

TEST_CASE("hook leading monomials") {
  CHECK(*hook_leading_monomial(Partition({2, 1}), 2, 1) ==
        MultiDegree{2, 1, 0});
  CHECK(*hook_leading_monomial(Partition({2, 1, 1, 1}), 2, 1) ==
        MultiDegree{2, 1, 2});
  CHECK_FALSE(hook_leading_monomial(Partition({2, 2, 2}), 1, 1).has_value());
}

TEST_CASE("g_lambda fit round trips") {
  TruncatedSeries input = g_lambda_character(Partition({2, 1}), 2, 1, 6);
  GLambdaFit fit = fit_g_lambda(input, 2, 1, 6);
  REQUIRE(fit.success);
  REQUIRE(fit.multiset.size() == 1);
  CHECK(fit.multiset[0].first == Partition({2, 1}));
  CHECK(fit.multiset[0].second == 1);

  TruncatedSeries combo = g_lambda_character(Partition(), 2, 1, 5);
  combo += g_lambda_character(Partition({2, 1}), 2, 1, 5);
  GLambdaFit fit2 = fit_g_lambda(combo, 2, 1, 5);
  REQUIRE(fit2.success);
  CHECK(fit2.multiset.size() == 2);
}

TEST_CASE("weakbound fit") {
  // dims growing like 2d on m+n = 2: constant 2, bound holds.
  std::vector<std::pair<int, long>> dims{{1, 2}, {2, 4}, {3, 6}, {4, 8}};
  WeakboundFit fit = weakbound_fit(dims, 2, 0);
  CHECK(fit.holds);
  CHECK(fit.constant == rat(2));
}
