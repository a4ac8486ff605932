#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/echelon.hpp"
#include "lcs/word_basis.hpp"

namespace lcs {

/// Graded table of subspaces indexed by (k, multidegree): either the lower
/// central series L_k or the associative ideals M_k, one echelon subspace
/// per graded component, inside the word basis of A[d].
class SubspaceFamily {
 public:
  SubspaceFamily(std::shared_ptr<GradedContext> ctx, int D, int k_max)
      : ctx_(std::move(ctx)), D_(D), k_max_(k_max) {}

  const GradedContext& ctx() const { return *ctx_; }
  std::shared_ptr<GradedContext> ctx_ptr() const { return ctx_; }
  const GeneratorSet& gens() const { return ctx_->gens(); }
  int max_total_degree() const { return D_; }
  int depth() const { return k_max_; }

  /// Component at (k, d); the zero subspace when nothing is stored
  /// (in particular whenever total(d) < k).
  const EchelonSubspace& space(int k, const MultiDegree& d) const;
  long dim(int k, const MultiDegree& d) const { return static_cast<long>(space(k, d).dim()); }

  void set(int k, const MultiDegree& d, EchelonSubspace s);

  const std::map<std::pair<int, MultiDegree>, EchelonSubspace>& table() const {
    return table_;
  }

 private:
  std::shared_ptr<GradedContext> ctx_;
  int D_;
  int k_max_;
  std::map<std::pair<int, MultiDegree>, EchelonSubspace> table_;
};

/// L_1[d] = A[d] and L_{k+1}[d] = span{ [w, b] } over words w of positive
/// degree d' and echelon rows b of L_k[d - d'], for every multidegree of
/// total at most D. Components larger than the context budget throw
/// BudgetExceeded.
SubspaceFamily compute_lcs(std::shared_ptr<GradedContext> ctx, int D,
                           int k_max);

inline SubspaceFamily compute_lcs(const GeneratorSet& gens, int D, int k_max,
                                  long budget = GradedContext::kDefaultBudget) {
  return compute_lcs(std::make_shared<GradedContext>(gens, budget), D, k_max);
}

/// M_k = A L_k A computed as two passes of one-sided multiples,
/// for 2 <= k <= depth; M_1[d] = A[d] is stored explicitly.
SubspaceFamily compute_ideals(const SubspaceFamily& lcs_family);

enum class SeriesKind { A, B, N, Bbar1, Z, AmodM3 };

std::string series_name(SeriesKind kind, int k);

struct DimRow {
  SeriesKind series;
  int k;  // 0 when the series carries no k parameter
  MultiDegree degree;
  long dim;
};

/// Per-multidegree dimension records for the quotient series.
struct DimensionTable {
  std::vector<DimRow> rows;

  void append(SeriesKind series, int k, MultiDegree d, long dim) {
    rows.push_back({series, k, std::move(d), dim});
  }
  void append(const DimensionTable& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }

  /// Sums rows of equal (series, k, total degree); returns rows whose
  /// degree vector has the single entry [total].
  DimensionTable collapsed_by_total() const;

  long lookup(SeriesKind series, int k, const MultiDegree& d) const;
};

/// dim B_k[d] = dim L_k[d] - dim L_{k+1}[d] for k in [k_lo, k_hi].
DimensionTable bk_dims(const SubspaceFamily& lcs_family, int k_lo, int k_hi);

/// dim N_k[d] = dim M_k[d] - dim M_{k+1}[d] for k in [k_lo, k_hi].
DimensionTable nk_dims(const SubspaceFamily& lcs_family,
                       const SubspaceFamily& ideal_family, int k_lo, int k_hi);

/// dim Bbar_1[d] = dim A[d] - dim(L_2[d] + M_3[d]), dim Z[d] the overshoot
/// of the sum over L_2, and dim (A/M_3)[d]; one row per series per degree.
DimensionTable bbar1_dims(const SubspaceFamily& lcs_family,
                          const SubspaceFamily& ideal_family);

struct CheckOutcome {
  MultiDegree degree;
  bool pass;
  std::string witness;  // offending element, empty on pass
};

struct CheckReport {
  std::string name;
  int j = 0;
  int k = 0;
  std::vector<CheckOutcome> rows;

  bool all_pass() const;
};

/// [M_j, L_k] contained in L_{j+k}, testable while j + k <= depth.
CheckReport check_bracket_inclusion(const SubspaceFamily& lcs_family,
                                    const SubspaceFamily& ideal_family, int j,
                                    int k);

/// M_j M_k contained in M_{j+k-1}.
CheckReport check_product_inclusion(const SubspaceFamily& lcs_family,
                                    const SubspaceFamily& ideal_family, int j,
                                    int k);

/// L_k[d] contained in span{ [w, b] : w a word of length 1 or 2,
/// b a row of L_{k-1} } + L_{k+1}[d].
CheckReport check_bmcor(const SubspaceFamily& lcs_family, int k);

/// L_3[d] contained in span{ [symmetrize(w), b] : w nonempty,
/// b a row of L_2 } + L_4[d].
CheckReport check_f3_surjectivity(const SubspaceFamily& lcs_family);

/// Compares the left span {w b} with the two-sided span per component of
/// M_k; the engine computes M_k two-sided and only observes their agreement.
CheckReport check_left_ideal_agreement(const SubspaceFamily& lcs_family,
                                       const SubspaceFamily& ideal_family,
                                       int k);

}  // namespace lcs
