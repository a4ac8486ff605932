#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcs/echelon.hpp"
#include "lcs/word_basis.hpp"

namespace lcs {

/// Homogeneous element of the free superalgebra: a rational combination of
/// words sharing one multidegree (hence one parity). Words carry no signs;
/// Koszul signs enter only through the bracket, star and symmetrization.
class AlgebraElement {
 public:
  AlgebraElement(GeneratorSet gens, MultiDegree degree)
      : gens_(gens), degree_(std::move(degree)) {}

  static AlgebraElement from_word(const GeneratorSet& gens, const Word& w,
                                  Rational coeff = 1);
  static AlgebraElement unit(const GeneratorSet& gens) {
    return from_word(gens, {});
  }
  static AlgebraElement generator(const GeneratorSet& gens, int letter) {
    return from_word(gens, {letter});
  }

  const GeneratorSet& gens() const { return gens_; }
  const MultiDegree& degree() const { return degree_; }
  int parity() const { return degree_parity(gens_, degree_); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Rational>& terms() const { return terms_; }

  void add_term(const Word& w, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) {
    return a *= c;
  }

  bool operator==(const AlgebraElement& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }

  /// Coordinates in the component basis of A[degree].
  SparseVector to_sparse(const ComponentBasis& basis) const;
  static AlgebraElement from_sparse(const GeneratorSet& gens,
                                    const MultiDegree& degree,
                                    const ComponentBasis& basis,
                                    const SparseVector& v);

  /// Terms sorted by word order, rationals as p/q: "x1*x2 - x2*x1".
  std::string to_string() const;

 private:
  GeneratorSet gens_;
  MultiDegree degree_;
  std::map<Word, Rational> terms_;
};

/// Concatenation product, bilinear; no signs in the free algebra.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// [a,b] = ab - (-1)^{|a||b|} ba on parity-homogeneous elements.
AlgebraElement super_bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Right-iterated bracket [a1,[a2,[...,[a_{r-1},a_r]...].
AlgebraElement right_nested_bracket(const std::vector<AlgebraElement>& items);

/// Symmetric product (ab + ba)/2.
AlgebraElement star(const AlgebraElement& a, const AlgebraElement& b);

/// Average of all letter permutations of w, each weighted by the Koszul sign
/// of the permutation on the odd letters, divided by (length)!. Vanishes
/// whenever an odd letter repeats.
AlgebraElement symmetrize(const GeneratorSet& gens, const Word& w);

}  // namespace lcs
