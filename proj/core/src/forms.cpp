#include "lcs/forms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lcs {

namespace {

int popcount(std::uint32_t mask) { return std::popcount(mask); }

/// Pairs (a, b) with a in mask_a, b in mask_b, a > b; the inversions created
/// when a sorted block from mask_a precedes one from mask_b.
int merge_inversions(std::uint32_t mask_a, std::uint32_t mask_b) {
  int inv = 0;
  for (std::uint32_t b = mask_b; b; b &= b - 1) {
    int bit = std::countr_zero(b);
    inv += popcount(mask_a >> (bit + 1));
  }
  return inv;
}

}  // namespace

int FormMonomial::form_degree() const {
  return popcount(dx_mask) +
         std::accumulate(dy_exps.begin(), dy_exps.end(), 0);
}

int FormMonomial::super_parity() const {
  return (popcount(y_mask) +
          std::accumulate(dy_exps.begin(), dy_exps.end(), 0)) &
         1;
}

MultiDegree FormMonomial::multidegree() const {
  MultiDegree d;
  d.reserve(x_exps.size() + dy_exps.size());
  for (std::size_t i = 0; i < x_exps.size(); ++i) {
    d.push_back(x_exps[i] + ((dx_mask >> i) & 1));
  }
  for (std::size_t j = 0; j < dy_exps.size(); ++j) {
    d.push_back(dy_exps[j] + ((y_mask >> j) & 1));
  }
  return d;
}

FormElement FormElement::from_monomial(const GeneratorSet& gens,
                                       FormMonomial mono, Rational coeff) {
  FormElement out(gens);
  out.add_term(mono, coeff);
  return out;
}

FormElement FormElement::generator(const GeneratorSet& gens, int letter) {
  FormMonomial mono = FormMonomial::one(gens);
  if (letter < gens.m) {
    mono.x_exps[static_cast<std::size_t>(letter)] = 1;
  } else {
    mono.y_mask |= 1u << (letter - gens.m);
  }
  return from_monomial(gens, mono);
}

void FormElement::add_term(const FormMonomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormElement& FormElement::operator+=(const FormElement& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

FormElement& FormElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

std::string FormElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    auto append = [&factors](const std::string& sym, int power) {
      if (power == 0) return;
      if (!factors.empty()) factors += "*";
      factors += sym;
      if (power > 1) factors += "^" + std::to_string(power);
    };
    for (std::size_t i = 0; i < mono.x_exps.size(); ++i) {
      append("x" + std::to_string(i + 1), mono.x_exps[i]);
    }
    for (std::size_t j = 0; j < mono.dy_exps.size(); ++j) {
      append("dy" + std::to_string(j + 1), mono.dy_exps[j]);
    }
    for (int j = 0; j < 32; ++j) {
      if (mono.y_mask >> j & 1) append("y" + std::to_string(j + 1), 1);
    }
    for (int i = 0; i < 32; ++i) {
      if (mono.dx_mask >> i & 1) append("dx" + std::to_string(i + 1), 1);
    }
    if (factors.empty()) factors = "1";
    if (abs == 1) {
      out += factors;
    } else {
      out += rat_str(abs) + "*" + factors;
    }
  }
  return out;
}

std::vector<FormMonomial> form_basis(const GeneratorSet& gens, int p,
                                     const MultiDegree& d) {
  std::vector<FormMonomial> out;
  std::uint32_t x_support = 0;
  std::uint32_t y_support = 0;
  for (int i = 0; i < gens.m; ++i) {
    if (d[static_cast<std::size_t>(i)] >= 1) x_support |= 1u << i;
  }
  for (int j = 0; j < gens.n; ++j) {
    if (d[static_cast<std::size_t>(gens.m + j)] >= 1) y_support |= 1u << j;
  }
  // At fixed multidegree a monomial is determined by its two odd-symbol
  // sets: the x and dy exponents are forced.
  for (std::uint32_t dx = 0;; dx = (dx - x_support) & x_support) {
    for (std::uint32_t y = 0;; y = (y - y_support) & y_support) {
      FormMonomial mono = FormMonomial::one(gens);
      mono.dx_mask = dx;
      mono.y_mask = y;
      for (int i = 0; i < gens.m; ++i) {
        mono.x_exps[static_cast<std::size_t>(i)] =
            d[static_cast<std::size_t>(i)] - ((dx >> i) & 1);
      }
      for (int j = 0; j < gens.n; ++j) {
        mono.dy_exps[static_cast<std::size_t>(j)] =
            d[static_cast<std::size_t>(gens.m + j)] - ((y >> j) & 1);
      }
      if (mono.form_degree() == p) out.push_back(std::move(mono));
      if (y == y_support) break;
    }
    if (dx == x_support) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FormElement wedge(const FormElement& a, const FormElement& b) {
  FormElement out(a.gens());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.y_mask & mb.y_mask) || (ma.dx_mask & mb.dx_mask)) continue;
      // Normal-ordering b's symbols past a's: only the crossings with swap
      // sign -1 count. b's dy block crosses all of a's y and dx symbols;
      // the y-with-y and dx-with-dx merges contribute their inversions;
      // y crossing dx is sign-free.
      int b_dy = std::accumulate(mb.dy_exps.begin(), mb.dy_exps.end(), 0);
      int inv = b_dy * (popcount(ma.y_mask) + popcount(ma.dx_mask));
      inv += merge_inversions(ma.y_mask, mb.y_mask);
      inv += merge_inversions(ma.dx_mask, mb.dx_mask);
      FormMonomial mono = ma;
      mono.y_mask |= mb.y_mask;
      mono.dx_mask |= mb.dx_mask;
      for (std::size_t i = 0; i < mono.x_exps.size(); ++i) {
        mono.x_exps[i] += mb.x_exps[i];
      }
      for (std::size_t j = 0; j < mono.dy_exps.size(); ++j) {
        mono.dy_exps[j] += mb.dy_exps[j];
      }
      Rational coeff = ca * cb;
      if (inv & 1) coeff = -coeff;
      out.add_term(mono, coeff);
    }
  }
  return out;
}

FormElement exterior_derivative(const FormElement& a) {
  // d acts factor by factor with the Leibniz sign (-1)^{form degree of the
  // prefix}; d preserves super parity, so only form degrees sign.
  FormElement out(a.gens());
  for (const auto& [mono, c] : a.terms()) {
    int dy_total = std::accumulate(mono.dy_exps.begin(), mono.dy_exps.end(), 0);
    // d on an x_i factor: the new dx_i crosses the dy block (sign each) and
    // the smaller dx factors; crossing the y block is sign-free.
    for (std::size_t i = 0; i < mono.x_exps.size(); ++i) {
      if (mono.x_exps[i] == 0) continue;
      if (mono.dx_mask >> i & 1) continue;
      int inv = dy_total + popcount(mono.dx_mask & ((1u << i) - 1));
      FormMonomial image = mono;
      image.x_exps[i] -= 1;
      image.dx_mask |= 1u << i;
      Rational coeff = c * mono.x_exps[i];
      if (inv & 1) coeff = -coeff;
      out.add_term(image, coeff);
    }
    // d on a y_j factor: Leibniz over the dy-block prefix, then the new
    // dy_j crosses the smaller y factors on its way into the dy block.
    for (std::size_t j = 0; j < mono.dy_exps.size(); ++j) {
      if (!(mono.y_mask >> j & 1)) continue;
      int inv = dy_total + popcount(mono.y_mask & ((1u << j) - 1));
      FormMonomial image = mono;
      image.y_mask &= ~(1u << j);
      image.dy_exps[j] += 1;
      out.add_term(image, (inv & 1) ? Rational(-c) : c);
    }
  }
  return out;
}

FormElement fedosov(const FormElement& a, const FormElement& b) {
  FormElement out = wedge(a, b);
  FormElement db = exterior_derivative(b);
  if (db.is_zero()) return out;
  for (const auto& [mono, c] : a.terms()) {
    FormElement da = exterior_derivative(
        FormElement::from_monomial(a.gens(), mono,
                                   (mono.form_degree() & 1) ? -c : c));
    out += wedge(da, db);
  }
  return out;
}

FormElement phi_map(const AlgebraElement& a) {
  FormElement out(a.gens());
  for (const auto& [word, c] : a.terms()) {
    FormElement image = FormElement::one(a.gens());
    for (int letter : word) {
      image = fedosov(image, FormElement::generator(a.gens(), letter));
    }
    image *= c;
    out += image;
  }
  return out;
}

FormComponentIndex form_component_index(const GeneratorSet& gens, int p,
                                        const MultiDegree& d) {
  FormComponentIndex out;
  out.monomials = form_basis(gens, p, d);
  for (std::size_t i = 0; i < out.monomials.size(); ++i) {
    out.index.emplace(out.monomials[i], static_cast<std::int64_t>(i));
  }
  return out;
}

EvenFormIndex even_form_index(const GeneratorSet& gens, const MultiDegree& d) {
  EvenFormIndex out;
  int total_v = 0;
  for (int j = 0; j < gens.n; ++j) total_v += d[static_cast<std::size_t>(gens.m + j)];
  int p_max = gens.m + total_v;
  for (int p = 0; p <= p_max; p += 2) {
    auto block = form_basis(gens, p, d);
    if (block.empty()) continue;
    out.block_offset[p] = static_cast<std::int64_t>(out.all.monomials.size());
    for (FormMonomial& mono : block) {
      out.all.index.emplace(mono, static_cast<std::int64_t>(out.all.monomials.size()));
      out.all.monomials.push_back(std::move(mono));
    }
  }
  return out;
}

SparseVector form_to_sparse(const FormElement& a,
                            const FormComponentIndex& index) {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(a.terms().size());
  for (const auto& [mono, c] : a.terms()) {
    auto it = index.index.find(mono);
    if (it == index.index.end()) {
      throw std::invalid_argument("form monomial outside component index");
    }
    entries.emplace_back(it->second, c);
  }
  return SparseVector::from_entries(std::move(entries));
}

EchelonSubspace exact_subspace(const GeneratorSet& gens, int p,
                               const MultiDegree& d) {
  EchelonSubspace out;
  if (p < 1) return out;
  FormComponentIndex target = form_component_index(gens, p, d);
  for (const FormMonomial& mono : form_basis(gens, p - 1, d)) {
    FormElement image =
        exterior_derivative(FormElement::from_monomial(gens, mono));
    out.insert(form_to_sparse(image, target));
  }
  return out;
}

EchelonSubspace closed_subspace(const GeneratorSet& gens, int p,
                                const MultiDegree& d) {
  FormComponentIndex source = form_component_index(gens, p, d);
  FormComponentIndex target = form_component_index(gens, p + 1, d);
  std::vector<SparseVector> images;
  images.reserve(source.monomials.size());
  for (const FormMonomial& mono : source.monomials) {
    images.push_back(form_to_sparse(
        exterior_derivative(FormElement::from_monomial(gens, mono)), target));
  }
  return kernel_of_map(images, target.dim());
}

std::vector<FsOutcome> verify_fs(const SubspaceFamily& lcs_family,
                                 const SubspaceFamily& ideal_family) {
  const GeneratorSet gens = lcs_family.gens();
  const GradedContext& ctx = lcs_family.ctx();
  std::vector<FsOutcome> out;
  MultiDegree zero(static_cast<std::size_t>(gens.count()), 0);
  std::vector<MultiDegree> degrees{zero};
  auto positive = degrees_up_to(gens.count(), lcs_family.max_total_degree());
  degrees.insert(degrees.end(), positive.begin(), positive.end());
  for (const MultiDegree& d : degrees) {
    EvenFormIndex ambient = even_form_index(gens, d);
    const ComponentBasis& words = ctx.basis(d);

    FsOutcome o{};
    o.degree = d;
    o.dim_a = static_cast<long>(words.dim());
    o.dim_m3 = ideal_family.dim(3, d);
    o.dim_omega_ev = static_cast<long>(ambient.all.dim());

    // (i) phi vanishes on M_3.
    o.phi_kills_m3 = true;
    for (const SparseVector& row : ideal_family.space(3, d).rows()) {
      AlgebraElement e = AlgebraElement::from_sparse(gens, d, words, row);
      if (!phi_map(e).is_zero()) {
        o.phi_kills_m3 = false;
        break;
      }
    }

    // (ii) phi(A[d]) fills the even forms and complements M_3.
    EchelonSubspace image;
    for (const Word& w : words.words) {
      image.insert(
          form_to_sparse(phi_map(AlgebraElement::from_word(gens, w)),
                         ambient.all));
    }
    o.dim_phi_a = static_cast<long>(image.dim());
    o.dim_match = o.dim_phi_a == o.dim_omega_ev &&
                  o.dim_omega_ev == o.dim_a - o.dim_m3;

    // (iii) phi(L_2[d]) equals the exact even forms.
    EchelonSubspace phi_l2;
    for (const SparseVector& row : lcs_family.space(2, d).rows()) {
      AlgebraElement e = AlgebraElement::from_sparse(gens, d, words, row);
      phi_l2.insert(form_to_sparse(phi_map(e), ambient.all));
    }
    EchelonSubspace exact_even;
    for (const auto& [p, offset] : ambient.block_offset) {
      if (p == 0) continue;
      EchelonSubspace block = exact_subspace(gens, p, d);
      for (const SparseVector& row : block.rows()) {
        std::vector<SparseVector::Entry> shifted;
        for (const auto& [idx, c] : row.entries()) {
          shifted.emplace_back(idx + offset, c);
        }
        exact_even.insert(SparseVector::from_entries(std::move(shifted)));
      }
    }
    o.dim_phi_l2 = static_cast<long>(phi_l2.dim());
    o.dim_exact_ev = static_cast<long>(exact_even.dim());
    o.exact_match = phi_l2 == exact_even;

    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace lcs
