#include "lcs/lcs_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcs {

namespace {

const EchelonSubspace kEmptySpace;

EchelonSubspace full_component(const ComponentBasis& basis) {
  EchelonSubspace s;
  for (std::int64_t i = 0; i < basis.dim(); ++i) {
    s.insert(SparseVector::from_entries({{i, rat(1)}}));
  }
  return s;
}

std::vector<MultiDegree> all_degrees(const GeneratorSet& gens, int D) {
  std::vector<MultiDegree> out;
  out.push_back(MultiDegree(static_cast<std::size_t>(gens.count()), 0));
  auto positive = degrees_up_to(gens.count(), D);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

}  // namespace

const EchelonSubspace& SubspaceFamily::space(int k,
                                             const MultiDegree& d) const {
  auto it = table_.find({k, d});
  return it == table_.end() ? kEmptySpace : it->second;
}

void SubspaceFamily::set(int k, const MultiDegree& d, EchelonSubspace s) {
  table_[{k, d}] = std::move(s);
}

SubspaceFamily compute_lcs(std::shared_ptr<GradedContext> ctx, int D,
                           int k_max) {
  if (D < 1 || k_max < 1) throw std::invalid_argument("compute_lcs: D, k_max >= 1");
  const GeneratorSet gens = ctx->gens();
  SubspaceFamily family(ctx, D, k_max);
  const auto degrees = all_degrees(gens, D);
  for (const MultiDegree& d : degrees) {
    family.set(1, d, full_component(ctx->basis(d)));
  }
  for (int k = 1; k < k_max; ++k) {
    for (const MultiDegree& d : degrees) {
      if (total_degree(d) < k + 1) continue;
      EchelonSubspace next;
      const ComponentBasis& target = ctx->basis(d);
      for (const MultiDegree& dw : sub_degrees(d)) {
        int tw = total_degree(dw);
        if (tw < 1 || total_degree(d) - tw < k) continue;
        MultiDegree db = degree_diff(d, dw);
        const EchelonSubspace& lk = family.space(k, db);
        if (lk.dim() == 0) continue;
        const ComponentBasis& source = ctx->basis(db);
        for (const Word& w : ctx->basis(dw).words) {
          AlgebraElement we = AlgebraElement::from_word(gens, w);
          for (const SparseVector& row : lk.rows()) {
            AlgebraElement b =
                AlgebraElement::from_sparse(gens, db, source, row);
            next.insert(super_bracket(we, b).to_sparse(target));
          }
        }
      }
      if (next.dim() > 0) family.set(k + 1, d, std::move(next));
    }
  }
  return family;
}

SubspaceFamily compute_ideals(const SubspaceFamily& lcs_family) {
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  const int D = lcs_family.max_total_degree();
  const int k_max = lcs_family.depth();
  SubspaceFamily ideals(lcs_family.ctx_ptr(), D, k_max);
  const auto degrees = all_degrees(gens, D);
  for (const MultiDegree& d : degrees) {
    ideals.set(1, d, lcs_family.space(1, d));
  }
  for (int k = 2; k <= k_max; ++k) {
    // First pass: right multiples R = span{ b w }.
    std::map<MultiDegree, EchelonSubspace> right;
    for (const MultiDegree& d : degrees) {
      if (total_degree(d) < k) continue;
      EchelonSubspace r;
      const ComponentBasis& target = ctx.basis(d);
      for (const MultiDegree& dw : sub_degrees(d)) {
        MultiDegree db = degree_diff(d, dw);
        const EchelonSubspace& lk = lcs_family.space(k, db);
        if (lk.dim() == 0) continue;
        const ComponentBasis& source = ctx.basis(db);
        for (const SparseVector& row : lk.rows()) {
          AlgebraElement b = AlgebraElement::from_sparse(gens, db, source, row);
          for (const Word& w : ctx.basis(dw).words) {
            AlgebraElement we = AlgebraElement::from_word(gens, w);
            r.insert(multiply(b, we).to_sparse(target));
          }
        }
      }
      if (r.dim() > 0) right.emplace(d, std::move(r));
    }
    // Second pass: M_k = span{ w r }.
    for (const MultiDegree& d : degrees) {
      if (total_degree(d) < k) continue;
      EchelonSubspace m;
      const ComponentBasis& target = ctx.basis(d);
      for (const MultiDegree& dw : sub_degrees(d)) {
        MultiDegree dr = degree_diff(d, dw);
        auto it = right.find(dr);
        if (it == right.end()) continue;
        const ComponentBasis& source = ctx.basis(dr);
        for (const Word& w : ctx.basis(dw).words) {
          AlgebraElement we = AlgebraElement::from_word(gens, w);
          for (const SparseVector& row : it->second.rows()) {
            AlgebraElement r = AlgebraElement::from_sparse(gens, dr, source, row);
            m.insert(multiply(we, r).to_sparse(target));
          }
        }
      }
      if (m.dim() > 0) ideals.set(k, d, std::move(m));
    }
  }
  return ideals;
}

std::string series_name(SeriesKind kind, int k) {
  switch (kind) {
    case SeriesKind::A:
      return "A";
    case SeriesKind::B:
      return "B" + std::to_string(k);
    case SeriesKind::N:
      return "N" + std::to_string(k);
    case SeriesKind::Bbar1:
      return "Bbar1";
    case SeriesKind::Z:
      return "Z";
    case SeriesKind::AmodM3:
      return "A/M3";
  }
  return "?";
}

DimensionTable DimensionTable::collapsed_by_total() const {
  std::map<std::tuple<SeriesKind, int, int>, long> acc;
  for (const DimRow& row : rows) {
    acc[{row.series, row.k, total_degree(row.degree)}] += row.dim;
  }
  DimensionTable out;
  for (const auto& [key, dim] : acc) {
    out.append(std::get<0>(key), std::get<1>(key),
               MultiDegree{std::get<2>(key)}, dim);
  }
  return out;
}

long DimensionTable::lookup(SeriesKind series, int k,
                            const MultiDegree& d) const {
  for (const DimRow& row : rows) {
    if (row.series == series && row.k == k && row.degree == d) return row.dim;
  }
  return 0;
}

namespace {

void require_depth(const SubspaceFamily& family, int k, const char* what) {
  // L_{k}[d] vanishes for total(d) < k, so depth D is always enough.
  if (k > family.depth() && k <= family.max_total_degree()) {
    throw std::invalid_argument(std::string(what) +
                                ": family depth too small");
  }
}

}  // namespace

DimensionTable bk_dims(const SubspaceFamily& lcs_family, int k_lo, int k_hi) {
  require_depth(lcs_family, k_hi + 1, "bk_dims");
  DimensionTable out;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const MultiDegree& d :
         all_degrees(lcs_family.gens(), lcs_family.max_total_degree())) {
      out.append(SeriesKind::B, k, d,
                 lcs_family.dim(k, d) - lcs_family.dim(k + 1, d));
    }
  }
  return out;
}

DimensionTable nk_dims(const SubspaceFamily& lcs_family,
                       const SubspaceFamily& ideal_family, int k_lo,
                       int k_hi) {
  require_depth(ideal_family, k_hi + 1, "nk_dims");
  DimensionTable out;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const MultiDegree& d :
         all_degrees(lcs_family.gens(), lcs_family.max_total_degree())) {
      out.append(SeriesKind::N, k, d,
                 ideal_family.dim(k, d) - ideal_family.dim(k + 1, d));
    }
  }
  return out;
}

DimensionTable bbar1_dims(const SubspaceFamily& lcs_family,
                          const SubspaceFamily& ideal_family) {
  require_depth(lcs_family, 2, "bbar1_dims");
  require_depth(ideal_family, 3, "bbar1_dims");
  DimensionTable out;
  for (const MultiDegree& d :
       all_degrees(lcs_family.gens(), lcs_family.max_total_degree())) {
    long dim_a = lcs_family.dim(1, d);
    long dim_l2 = lcs_family.dim(2, d);
    long dim_m3 = ideal_family.dim(3, d);
    long dim_sum = static_cast<long>(
        sum_spaces(lcs_family.space(2, d), ideal_family.space(3, d)).dim());
    out.append(SeriesKind::Bbar1, 0, d, dim_a - dim_sum);
    out.append(SeriesKind::Z, 0, d, dim_sum - dim_l2);
    out.append(SeriesKind::AmodM3, 0, d, dim_a - dim_m3);
  }
  return out;
}

bool CheckReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckOutcome& r) { return r.pass; });
}

namespace {

std::string short_witness(const AlgebraElement& e) {
  std::string s = e.to_string();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

}  // namespace

CheckReport check_bracket_inclusion(const SubspaceFamily& lcs_family,
                                    const SubspaceFamily& ideal_family, int j,
                                    int k) {
  require_depth(lcs_family, j + k, "check_bracket_inclusion");
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  CheckReport report{"bracket_inclusion", j, k, {}};
  for (const MultiDegree& d :
       all_degrees(gens, lcs_family.max_total_degree())) {
    const EchelonSubspace& target = lcs_family.space(j + k, d);
    CheckOutcome outcome{d, true, ""};
    for (const MultiDegree& dm : sub_degrees(d)) {
      MultiDegree dl = degree_diff(d, dm);
      const EchelonSubspace& mj = ideal_family.space(j, dm);
      const EchelonSubspace& lk = lcs_family.space(k, dl);
      if (mj.dim() == 0 || lk.dim() == 0) continue;
      for (const SparseVector& mrow : mj.rows()) {
        AlgebraElement melem =
            AlgebraElement::from_sparse(gens, dm, ctx.basis(dm), mrow);
        for (const SparseVector& lrow : lk.rows()) {
          AlgebraElement lelem =
              AlgebraElement::from_sparse(gens, dl, ctx.basis(dl), lrow);
          AlgebraElement bracket = super_bracket(melem, lelem);
          if (!target.contains(bracket.to_sparse(ctx.basis(d)))) {
            outcome.pass = false;
            outcome.witness = short_witness(bracket);
            goto done;
          }
        }
      }
    }
  done:
    report.rows.push_back(std::move(outcome));
  }
  return report;
}

CheckReport check_product_inclusion(const SubspaceFamily& lcs_family,
                                    const SubspaceFamily& ideal_family, int j,
                                    int k) {
  require_depth(ideal_family, j + k - 1, "check_product_inclusion");
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  CheckReport report{"product_inclusion", j, k, {}};
  for (const MultiDegree& d :
       all_degrees(gens, lcs_family.max_total_degree())) {
    const EchelonSubspace& target = ideal_family.space(j + k - 1, d);
    CheckOutcome outcome{d, true, ""};
    for (const MultiDegree& dj : sub_degrees(d)) {
      MultiDegree dk = degree_diff(d, dj);
      const EchelonSubspace& mj = ideal_family.space(j, dj);
      const EchelonSubspace& mk = ideal_family.space(k, dk);
      if (mj.dim() == 0 || mk.dim() == 0) continue;
      for (const SparseVector& jrow : mj.rows()) {
        AlgebraElement jelem =
            AlgebraElement::from_sparse(gens, dj, ctx.basis(dj), jrow);
        for (const SparseVector& krow : mk.rows()) {
          AlgebraElement kelem =
              AlgebraElement::from_sparse(gens, dk, ctx.basis(dk), krow);
          AlgebraElement product = multiply(jelem, kelem);
          if (!target.contains(product.to_sparse(ctx.basis(d)))) {
            outcome.pass = false;
            outcome.witness = short_witness(product);
            goto done;
          }
        }
      }
    }
  done:
    report.rows.push_back(std::move(outcome));
  }
  return report;
}

CheckReport check_bmcor(const SubspaceFamily& lcs_family, int k) {
  if (k < 2) throw std::invalid_argument("check_bmcor: k >= 2");
  require_depth(lcs_family, k + 1, "check_bmcor");
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  CheckReport report{"bmcor", 0, k, {}};
  for (const MultiDegree& d :
       all_degrees(gens, lcs_family.max_total_degree())) {
    const EchelonSubspace& lk = lcs_family.space(k, d);
    CheckOutcome outcome{d, true, ""};
    if (lk.dim() > 0) {
      EchelonSubspace span = lcs_family.space(k + 1, d);
      for (const MultiDegree& dw : sub_degrees(d)) {
        int tw = total_degree(dw);
        if (tw < 1 || tw > 2) continue;
        MultiDegree db = degree_diff(d, dw);
        const EchelonSubspace& prev = lcs_family.space(k - 1, db);
        if (prev.dim() == 0) continue;
        for (const Word& w : ctx.basis(dw).words) {
          AlgebraElement we = AlgebraElement::from_word(gens, w);
          for (const SparseVector& row : prev.rows()) {
            AlgebraElement b =
                AlgebraElement::from_sparse(gens, db, ctx.basis(db), row);
            span.insert(super_bracket(we, b).to_sparse(ctx.basis(d)));
          }
        }
      }
      for (const SparseVector& row : lk.rows()) {
        if (!span.contains(row)) {
          outcome.pass = false;
          outcome.witness = short_witness(
              AlgebraElement::from_sparse(gens, d, ctx.basis(d), row));
          break;
        }
      }
    }
    report.rows.push_back(std::move(outcome));
  }
  return report;
}

CheckReport check_f3_surjectivity(const SubspaceFamily& lcs_family) {
  require_depth(lcs_family, 4, "check_f3_surjectivity");
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  CheckReport report{"f3_surjectivity", 0, 0, {}};
  for (const MultiDegree& d :
       all_degrees(gens, lcs_family.max_total_degree())) {
    const EchelonSubspace& l3 = lcs_family.space(3, d);
    CheckOutcome outcome{d, true, ""};
    if (l3.dim() > 0) {
      EchelonSubspace span = lcs_family.space(4, d);
      for (const MultiDegree& dw : sub_degrees(d)) {
        if (total_degree(dw) < 1) continue;
        MultiDegree db = degree_diff(d, dw);
        const EchelonSubspace& l2 = lcs_family.space(2, db);
        if (l2.dim() == 0) continue;
        // symmetrize(w') of any rearrangement w' equals +-symmetrize(w), so
        // one sorted representative word per multidegree spans the image.
        Word rep;
        for (int letter = 0; letter < gens.count(); ++letter) {
          rep.insert(rep.end(),
                     static_cast<std::size_t>(dw[static_cast<std::size_t>(letter)]), letter);
        }
        AlgebraElement sym = symmetrize(gens, rep);
        if (sym.is_zero()) continue;
        for (const SparseVector& row : l2.rows()) {
          AlgebraElement b =
              AlgebraElement::from_sparse(gens, db, ctx.basis(db), row);
          span.insert(super_bracket(sym, b).to_sparse(ctx.basis(d)));
        }
      }
      for (const SparseVector& row : l3.rows()) {
        if (!span.contains(row)) {
          outcome.pass = false;
          outcome.witness = short_witness(
              AlgebraElement::from_sparse(gens, d, ctx.basis(d), row));
          break;
        }
      }
    }
    report.rows.push_back(std::move(outcome));
  }
  return report;
}

CheckReport check_left_ideal_agreement(const SubspaceFamily& lcs_family,
                                       const SubspaceFamily& ideal_family,
                                       int k) {
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  CheckReport report{"left_ideal_agreement", 0, k, {}};
  for (const MultiDegree& d :
       all_degrees(gens, lcs_family.max_total_degree())) {
    if (total_degree(d) < k) continue;
    EchelonSubspace left;
    const ComponentBasis& target = ctx.basis(d);
    for (const MultiDegree& dw : sub_degrees(d)) {
      MultiDegree db = degree_diff(d, dw);
      const EchelonSubspace& lk = lcs_family.space(k, db);
      if (lk.dim() == 0) continue;
      for (const Word& w : ctx.basis(dw).words) {
        AlgebraElement we = AlgebraElement::from_word(gens, w);
        for (const SparseVector& row : lk.rows()) {
          AlgebraElement b =
              AlgebraElement::from_sparse(gens, db, ctx.basis(db), row);
          left.insert(multiply(we, b).to_sparse(target));
        }
      }
    }
    bool agree = left.dim() == ideal_family.space(k, d).dim();
    report.rows.push_back(
        {d, agree,
         agree ? ""
               : "left span dim " + std::to_string(left.dim()) +
                     " != two-sided dim " +
                     std::to_string(ideal_family.space(k, d).dim())});
  }
  return report;
}

}  // namespace lcs
