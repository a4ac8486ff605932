#include "lcs/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lcs {

AlgebraElement AlgebraElement::from_word(const GeneratorSet& gens,
                                         const Word& w, Rational coeff) {
  AlgebraElement out(gens, word_degree(gens, w));
  out.add_term(w, coeff);
  return out;
}

void AlgebraElement::add_term(const Word& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) {
    throw std::invalid_argument("adding inhomogeneous elements");
  }
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) {
    throw std::invalid_argument("subtracting inhomogeneous elements");
  }
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

SparseVector AlgebraElement::to_sparse(const ComponentBasis& basis) const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(terms_.size());
  for (const auto& [w, c] : terms_) entries.emplace_back(basis.index_of(w), c);
  return SparseVector::from_entries(std::move(entries));
}

AlgebraElement AlgebraElement::from_sparse(const GeneratorSet& gens,
                                           const MultiDegree& degree,
                                           const ComponentBasis& basis,
                                           const SparseVector& v) {
  AlgebraElement out(gens, degree);
  for (const auto& [idx, c] : v.entries()) {
    out.add_term(basis.words[static_cast<std::size_t>(idx)], c);
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string word_part;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) word_part += "*";
      word_part += gens_.letter_name(w[i]);
    }
    if (word_part.empty()) word_part = "1";
    if (abs == 1) {
      out += word_part;
    } else {
      out += rat_str(abs) + "*" + word_part;
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.gens() != b.gens()) throw std::invalid_argument("generator mismatch");
  AlgebraElement out(a.gens(), degree_sum(a.degree(), b.degree()));
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

AlgebraElement super_bracket(const AlgebraElement& a,
                             const AlgebraElement& b) {
  AlgebraElement out = multiply(a, b);
  AlgebraElement ba = multiply(b, a);
  if ((a.parity() & b.parity()) != 0) {
    out += ba;
  } else {
    out -= ba;
  }
  return out;
}

AlgebraElement right_nested_bracket(
    const std::vector<AlgebraElement>& items) {
  if (items.empty()) {
    throw std::invalid_argument("right_nested_bracket of empty list");
  }
  AlgebraElement out = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    out = super_bracket(*it, out);
  }
  return out;
}

AlgebraElement star(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = multiply(a, b);
  out += multiply(b, a);
  out *= rat(1, 2);
  return out;
}

AlgebraElement symmetrize(const GeneratorSet& gens, const Word& w) {
  const std::size_t len = w.size();
  AlgebraElement out(gens, word_degree(gens, w));
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  Rational factorial = 1;
  for (std::size_t i = 2; i <= len; ++i) factorial *= static_cast<long>(i);
  do {
    // Koszul sign: -1 per inverted pair of odd-letter positions.
    int inversions = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (!gens.is_odd(w[perm[i]])) continue;
      for (std::size_t j = i + 1; j < len; ++j) {
        if (gens.is_odd(w[perm[j]]) && perm[i] > perm[j]) ++inversions;
      }
    }
    Word permuted(len);
    for (std::size_t i = 0; i < len; ++i) permuted[i] = w[perm[i]];
    out.add_term(permuted, (inversions & 1) ? rat(-1) : rat(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= 1 / factorial;
  return out;
}

}  // namespace lcs
