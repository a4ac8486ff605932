#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcs/partition.hpp"
#include "lcs/series.hpp"

namespace lcs {

/// Supersymmetric complete homogeneous function h_k(u|v): the t^k slice of
/// prod(1+t v_j)/prod(1-t u_i), i.e. the character of S^k(C^{m|n}).
TruncatedSeries super_h(int k, int m, int n, int D);

/// Hook Schur polynomial via the Jacobi-Trudi determinant det(h_{l_i-i+j})
/// in the supersymmetric h's.
TruncatedSeries hook_schur(const Partition& lambda, int m, int n, int D);

/// Character of the tensor field module on C^n (even variables only):
/// s_lambda / prod(1-u_i) when lambda_1 >= 2 or lambda = (1^n); the exact
/// k-form series when lambda = (1^k) with k < n; 1 for the empty diagram.
TruncatedSeries tensor_field_character(const Partition& lambda, int n, int D);

/// Character of the direct Schur functor S(V) (x) sum_k S_{(lambda,1^{2k})}.
TruncatedSeries g_lambda_character(const Partition& lambda, int m, int n,
                                   int D);

/// S(V)-series times sum_k s_{(2,1^{2k+1})}.
TruncatedSeries b3_schur_character(int m, int n, int D);

/// Greedy triangular peeling of a character into tensor field characters.
struct Decomposition {
  bool success = false;
  std::vector<std::pair<Partition, long>> table;
  // On failure: where peeling broke down.
  std::optional<MultiDegree> failed_degree;
  Rational failed_coeff = 0;
};

Decomposition decompose_tensor_field(const TruncatedSeries& series, int n,
                                     int D);

struct LambdaBoundRow {
  Partition lambda;
  int size;
  int bar_size;
  bool size_ok;   // |lambda| <= 2k-3+2*floor((n-2)/2)
  bool bar_ok;    // |bar lambda| <= 2k-5
};

struct LambdaBoundsReport {
  int k;
  int n;
  int size_bound;
  int bar_bound;
  std::vector<LambdaBoundRow> rows;

  bool all_pass() const;
};

LambdaBoundsReport check_lambda_bounds(
    const std::vector<std::pair<Partition, long>>& table, int k, int n);

/// Multiplies by prod(1-u_i)prod(1-v_j) and requires every coefficient of
/// total degree in (D-m-n, D] to vanish; on success the product is the
/// numerator polynomial.
struct RationalityProbe {
  bool success = false;
  TruncatedSeries numerator;
  std::optional<MultiDegree> offending_degree;
};

RationalityProbe rationality_probe(const TruncatedSeries& series, int m,
                                   int n);

/// Greedy fit of a character as a nonnegative sum of G_lambda characters,
/// peeling by hook-leading monomials; success iff the residual vanishes
/// within the cutoff.
struct GLambdaFit {
  bool success = false;
  std::vector<std::pair<Partition, long>> multiset;
  TruncatedSeries residual;
};

GLambdaFit fit_g_lambda(const TruncatedSeries& series, int m, int n, int D);

/// Smallest exact constant with dim[d] <= C d^{m+n-1} on the sampled range.
struct WeakboundFit {
  Rational constant = 0;
  bool holds = false;
};

WeakboundFit weakbound_fit(const std::vector<std::pair<int, long>>& dims_by_total,
                           int m, int n);

/// Leading (lexicographically greatest) exponent vector of the hook Schur
/// polynomial s_lambda(u|v): rows 1..m go to u-exponents, the remaining
/// rows' conjugate to v-exponents. Empty when lambda misses the (m,n) hook.
std::optional<MultiDegree> hook_leading_monomial(const Partition& lambda,
                                                 int m, int n);

}  // namespace lcs
