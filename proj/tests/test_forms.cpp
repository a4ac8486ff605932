#include <doctest.h>

#include <random>

#include "lcs/forms.hpp"
#include "lcs/series.hpp"

using namespace lcs;

namespace {

FormMonomial mono_of(const GeneratorSet& gens, std::vector<int> x_exps,
                     std::vector<int> dy_exps, std::uint32_t y_mask,
                     std::uint32_t dx_mask) {
  FormMonomial m = FormMonomial::one(gens);
  m.x_exps = std::move(x_exps);
  m.dy_exps = std::move(dy_exps);
  m.y_mask = y_mask;
  m.dx_mask = dx_mask;
  return m;
}

FormElement elem(const GeneratorSet& gens, FormMonomial m) {
  return FormElement::from_monomial(gens, std::move(m));
}

FormMonomial random_monomial(std::mt19937_64& rng, const GeneratorSet& gens,
                             int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> xbits(
      0, (1u << gens.m) - 1);
  std::uniform_int_distribution<std::uint32_t> ybits(
      0, (1u << gens.n) - 1);
  FormMonomial m = FormMonomial::one(gens);
  for (int i = 0; i < gens.m; ++i) m.x_exps[static_cast<std::size_t>(i)] = exp(rng);
  for (int j = 0; j < gens.n; ++j) m.dy_exps[static_cast<std::size_t>(j)] = exp(rng);
  m.y_mask = gens.n ? ybits(rng) : 0;
  m.dx_mask = gens.m ? xbits(rng) : 0;
  return m;
}

}  // namespace

TEST_CASE("form_basis examples") {
  GeneratorSet one_odd{0, 1};
  auto dy_sq = form_basis(one_odd, 2, {2});
  REQUIRE(dy_sq.size() == 1);
  CHECK(dy_sq[0].dy_exps == std::vector<int>{2});
  CHECK(dy_sq[0].y_mask == 0);

  GeneratorSet two_even{2, 0};
  auto dxdx = form_basis(two_even, 2, {1, 1});
  REQUIRE(dxdx.size() == 1);
  CHECK(dxdx[0].dx_mask == 0b11u);

  GeneratorSet one_even{1, 0};
  CHECK(form_basis(one_even, 2, {2}).empty());
  CHECK(form_basis(one_even, 2, {5}).empty());
}

TEST_CASE("form_basis counts match the omega series") {
  for (GeneratorSet gens : {GeneratorSet{2, 0}, GeneratorSet{1, 1},
                            GeneratorSet{0, 2}, GeneratorSet{2, 1}}) {
    const int D = 4;
    TruncatedSeries omega = omega_series(gens.m, gens.n, D);
    for (const MultiDegree& d : degrees_up_to(gens.count(), D)) {
      for (int p = 0; p <= gens.m + total_degree(d) + 1; ++p) {
        Rational expected = omega.coeff(d, p);
        CHECK(Rational(static_cast<long>(form_basis(gens, p, d).size())) ==
              expected);
      }
    }
  }
}

TEST_CASE("wedge sign table") {
  GeneratorSet gens{2, 2};
  FormElement x1 = elem(gens, mono_of(gens, {1, 0}, {0, 0}, 0, 0));
  FormElement y1 = elem(gens, mono_of(gens, {0, 0}, {0, 0}, 0b01, 0));
  FormElement dx1 = elem(gens, mono_of(gens, {0, 0}, {0, 0}, 0, 0b01));
  FormElement dx2 = elem(gens, mono_of(gens, {0, 0}, {0, 0}, 0, 0b10));
  FormElement dy1 = elem(gens, mono_of(gens, {0, 0}, {1, 0}, 0, 0));
  FormElement dy2 = elem(gens, mono_of(gens, {0, 0}, {0, 1}, 0, 0));

  CHECK(wedge(x1, dx1) == wedge(dx1, x1));
  CHECK(wedge(dx1, dx2) == (wedge(dx2, dx1) *= rat(-1)));
  CHECK(wedge(dx1, dx1).is_zero());
  CHECK(wedge(y1, y1).is_zero());
  // dy is a commuting variable: dy1^dy1 = (dy1)^2 != 0.
  FormElement dy1dy1 = wedge(dy1, dy1);
  CHECK_FALSE(dy1dy1.is_zero());
  CHECK(dy1dy1 == elem(gens, mono_of(gens, {0, 0}, {2, 0}, 0, 0)));
  CHECK(wedge(dy1, dy2) == wedge(dy2, dy1));
  // Super signs across blocks: dx and dy anticommute, y and dx commute,
  // y and dy anticommute.
  CHECK(wedge(dx1, dy1) == (wedge(dy1, dx1) *= rat(-1)));
  CHECK(wedge(y1, dx1) == wedge(dx1, y1));
  CHECK(wedge(y1, dy1) == (wedge(dy1, y1) *= rat(-1)));
}

TEST_CASE("bigraded commutativity on random monomials") {
  std::mt19937_64 rng(41);
  GeneratorSet gens{2, 2};
  for (int trial = 0; trial < 200; ++trial) {
    FormMonomial a = random_monomial(rng, gens, 2);
    FormMonomial b = random_monomial(rng, gens, 2);
    int sign = (a.super_parity() * b.super_parity() +
                a.form_degree() * b.form_degree()) &
               1;
    FormElement lhs = wedge(elem(gens, a), elem(gens, b));
    FormElement rhs = wedge(elem(gens, b), elem(gens, a));
    if (sign) rhs *= rat(-1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exterior derivative examples") {
  GeneratorSet gens{2, 1};
  FormElement x1x2 = elem(gens, mono_of(gens, {1, 1}, {0}, 0, 0));
  FormElement expected(gens);
  expected.add_term(mono_of(gens, {0, 1}, {0}, 0, 0b01), rat(1));
  expected.add_term(mono_of(gens, {1, 0}, {0}, 0, 0b10), rat(1));
  CHECK(exterior_derivative(x1x2) == expected);

  FormElement y1 = elem(gens, mono_of(gens, {0, 0}, {0}, 1, 0));
  CHECK(exterior_derivative(y1) ==
        elem(gens, mono_of(gens, {0, 0}, {1}, 0, 0)));

  FormElement dy1 = elem(gens, mono_of(gens, {0, 0}, {1}, 0, 0));
  CHECK(exterior_derivative(dy1).is_zero());
}

TEST_CASE("d squares to zero on a full basis") {
  for (GeneratorSet gens : {GeneratorSet{2, 0}, GeneratorSet{1, 1},
                            GeneratorSet{0, 2}, GeneratorSet{2, 1}}) {
    for (const MultiDegree& d : degrees_up_to(gens.count(), 4)) {
      for (int p = 0; p <= gens.m + total_degree(d); ++p) {
        for (const FormMonomial& mono : form_basis(gens, p, d)) {
          CHECK(exterior_derivative(exterior_derivative(elem(gens, mono)))
                    .is_zero());
        }
      }
    }
  }
}

TEST_CASE("graded Leibniz with the form-degree sign") {
  std::mt19937_64 rng(43);
  GeneratorSet gens{2, 2};
  for (int trial = 0; trial < 200; ++trial) {
    FormMonomial a = random_monomial(rng, gens, 2);
    FormMonomial b = random_monomial(rng, gens, 2);
    FormElement lhs = exterior_derivative(wedge(elem(gens, a), elem(gens, b)));
    FormElement rhs = wedge(exterior_derivative(elem(gens, a)), elem(gens, b));
    FormElement tail = wedge(elem(gens, a), exterior_derivative(elem(gens, b)));
    if (a.form_degree() & 1) tail *= rat(-1);
    rhs += tail;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fedosov examples") {
  GeneratorSet gens{2, 1};
  FormElement x1 = FormElement::generator(gens, 0);
  FormElement x2 = FormElement::generator(gens, 1);
  FormElement y1 = FormElement::generator(gens, 2);

  FormElement prod = fedosov(x1, x2);
  FormElement expected(gens);
  expected.add_term(mono_of(gens, {1, 1}, {0}, 0, 0), rat(1));
  expected.add_term(mono_of(gens, {0, 0}, {0}, 0, 0b11), rat(1));
  CHECK(prod == expected);

  CHECK(fedosov(y1, y1) == elem(gens, mono_of(gens, {0, 0}, {2}, 0, 0)));

  FormElement a(gens);
  a.add_term(mono_of(gens, {1, 0}, {1}, 1, 0b10), rat(3, 2));
  CHECK(fedosov(FormElement::one(gens), a) == a);
}

TEST_CASE("fedosov associativity on random triples") {
  std::mt19937_64 rng(47);
  GeneratorSet gens{2, 1};
  for (int trial = 0; trial < 200; ++trial) {
    FormElement a = elem(gens, random_monomial(rng, gens, 1));
    FormElement b = elem(gens, random_monomial(rng, gens, 1));
    FormElement c = elem(gens, random_monomial(rng, gens, 1));
    CHECK(fedosov(fedosov(a, b), c) == fedosov(a, fedosov(b, c)));
  }
}

TEST_CASE("phi examples") {
  GeneratorSet gens{2, 1};
  AlgebraElement x1 = AlgebraElement::generator(gens, 0);
  CHECK(phi_map(x1) == FormElement::generator(gens, 0));

  AlgebraElement commutator = super_bracket(
      x1, AlgebraElement::generator(gens, 1));
  FormElement expected(gens);
  expected.add_term(mono_of(gens, {0, 0}, {0}, 0, 0b11), rat(2));
  CHECK(phi_map(commutator) == expected);

  AlgebraElement ysq = multiply(AlgebraElement::generator(gens, 2),
                                AlgebraElement::generator(gens, 2));
  CHECK(phi_map(ysq) == elem(gens, mono_of(gens, {0, 0}, {2}, 0, 0)));
}

TEST_CASE("phi is multiplicative for the Fedosov product") {
  std::mt19937_64 rng(53);
  GeneratorSet gens{1, 2};
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> letter(0, gens.count() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word wa(static_cast<std::size_t>(len(rng)));
    Word wb(static_cast<std::size_t>(len(rng)));
    for (int& l : wa) l = letter(rng);
    for (int& l : wb) l = letter(rng);
    AlgebraElement a = AlgebraElement::from_word(gens, wa);
    AlgebraElement b = AlgebraElement::from_word(gens, wb);
    CHECK(phi_map(multiply(a, b)) == fedosov(phi_map(a), phi_map(b)));
  }
}

TEST_CASE("exact and closed subspaces") {
  GeneratorSet one_even{1, 0};
  for (int d = 1; d <= 5; ++d) {
    EchelonSubspace exact = exact_subspace(one_even, 1, {d});
    CHECK(exact.dim() == 1);  // span of x^{d-1} dx
    CHECK(exact_subspace(one_even, 2, {d}).dim() == 0);
  }
  // Poincare: closed = exact away from (p, d) = (0, 0).
  for (GeneratorSet gens : {GeneratorSet{2, 0}, GeneratorSet{1, 1},
                            GeneratorSet{0, 2}}) {
    MultiDegree zero(static_cast<std::size_t>(gens.count()), 0);
    std::vector<MultiDegree> degrees{zero};
    auto positive = degrees_up_to(gens.count(), 4);
    degrees.insert(degrees.end(), positive.begin(), positive.end());
    for (const MultiDegree& d : degrees) {
      for (int p = 0; p <= gens.m + total_degree(d); ++p) {
        long closed = static_cast<long>(closed_subspace(gens, p, d).dim());
        long exact = static_cast<long>(exact_subspace(gens, p, d).dim());
        long unit = (p == 0 && total_degree(d) == 0) ? 1 : 0;
        CHECK(closed == exact + unit);
      }
    }
  }
}

TEST_CASE("verify_fs on small algebras") {
  for (GeneratorSet gens : {GeneratorSet{1, 0}, GeneratorSet{0, 1},
                            GeneratorSet{2, 0}, GeneratorSet{1, 1}}) {
    SubspaceFamily family = compute_lcs(gens, 4, 4);
    SubspaceFamily ideals = compute_ideals(family);
    auto outcomes = verify_fs(family, ideals);
    CHECK_FALSE(outcomes.empty());
    for (const FsOutcome& o : outcomes) {
      CHECK(o.phi_kills_m3);
      CHECK(o.dim_match);
      CHECK(o.exact_match);
      CHECK(o.dim_omega_ev == o.dim_a - o.dim_m3);
    }
  }
  // A_{0|1}: Omega^ev at v-degree 2 is spanned by (dy)^2 alone.
  GeneratorSet one_odd{0, 1};
  EvenFormIndex ambient = even_form_index(one_odd, {2});
  CHECK(ambient.all.dim() == 1);
}

TEST_CASE("form rendering") {
  GeneratorSet gens{2, 2};
  FormElement a(gens);
  a.add_term(mono_of(gens, {2, 0}, {1, 0}, 0b10, 0b01), rat(1));
  CHECK(a.to_string() == "x1^2*dy1*y2*dx1");
  CHECK(FormElement::one(gens).to_string() == "1");
  CHECK(FormElement(gens).to_string() == "0");
}
