#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcs/algebra.hpp"
#include "lcs/echelon.hpp"
#include "lcs/lcs_engine.hpp"

namespace lcs {

/// Normal-ordered monomial of the super de Rham algebra: x-block, dy-block,
/// y-block, dx-block. x_i and dx_i both count toward u_i, y_j and dy_j both
/// toward v_j. Each symbol carries a super parity s and a form degree f
/// (x: 0,0; y: 1,0; dx: 0,1; dy: 1,1) and two symbols swap with the sign
/// (-1)^{s s' + f f'}: y_j and dx_i square to zero, dy_j commutes with
/// itself and may repeat, dx_i anticommutes with dy_j, y_j commutes with
/// dx_i.
struct FormMonomial {
  std::vector<int> x_exps;   // powers of x_1..x_m
  std::vector<int> dy_exps;  // powers of dy_1..dy_n
  std::uint32_t y_mask = 0;  // bit j-1 set iff the factor y_j is present
  std::uint32_t dx_mask = 0;

  static FormMonomial one(const GeneratorSet& gens) {
    return {std::vector<int>(static_cast<std::size_t>(gens.m), 0),
            std::vector<int>(static_cast<std::size_t>(gens.n), 0), 0, 0};
  }

  int form_degree() const;
  int super_parity() const;
  MultiDegree multidegree() const;

  auto operator<=>(const FormMonomial&) const = default;
};

/// Rational combination of form monomials sharing one multidegree. Form
/// degrees may mix: the Fedosov product of 0-forms already produces
/// inhomogeneous elements like x1*x2 + dx1^dx2.
class FormElement {
 public:
  explicit FormElement(GeneratorSet gens) : gens_(gens) {}

  static FormElement from_monomial(const GeneratorSet& gens,
                                   FormMonomial mono, Rational coeff = 1);
  static FormElement one(const GeneratorSet& gens) {
    return from_monomial(gens, FormMonomial::one(gens));
  }
  /// Degree-0 image of a generator letter.
  static FormElement generator(const GeneratorSet& gens, int letter);

  const GeneratorSet& gens() const { return gens_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<FormMonomial, Rational>& terms() const { return terms_; }

  void add_term(const FormMonomial& mono, const Rational& coeff);

  FormElement& operator+=(const FormElement& other);
  FormElement& operator-=(const FormElement& other);
  FormElement& operator*=(const Rational& c);

  bool operator==(const FormElement& other) const {
    return terms_ == other.terms_;
  }

  /// "x1^2*dy1*y2*dx1"; "1" for the empty monomial.
  std::string to_string() const;

 private:
  GeneratorSet gens_;
  std::map<FormMonomial, Rational> terms_;
};

/// All normal-ordered monomials of form degree p and multidegree d, sorted.
std::vector<FormMonomial> form_basis(const GeneratorSet& gens, int p,
                                     const MultiDegree& d);

/// Koszul-signed product; zero whenever an odd symbol repeats.
FormElement wedge(const FormElement& a, const FormElement& b);

/// The odd derivation with d(x_i) = dx_i, d(y_j) = dy_j, d(dx) = d(dy) = 0.
FormElement exterior_derivative(const FormElement& a);

/// Fedosov product a*b = a^b + (-1)^{deg a} da^db, the sign taken per
/// form-homogeneous term of a; associative.
FormElement fedosov(const FormElement& a, const FormElement& b);

/// Algebra map sending each word to the Fedosov product of the degree-0
/// images of its letters, extended linearly. Lands in even form degrees.
FormElement phi_map(const AlgebraElement& a);

/// Indexed monomial basis of one (p, d) component.
struct FormComponentIndex {
  std::vector<FormMonomial> monomials;
  std::map<FormMonomial, std::int64_t> index;

  std::int64_t dim() const { return static_cast<std::int64_t>(monomials.size()); }
};

FormComponentIndex form_component_index(const GeneratorSet& gens, int p,
                                        const MultiDegree& d);

/// All even-form-degree monomials of multidegree d, blocks of ascending p.
struct EvenFormIndex {
  FormComponentIndex all;
  std::map<int, std::int64_t> block_offset;  // p -> offset of its block
};

EvenFormIndex even_form_index(const GeneratorSet& gens, const MultiDegree& d);

SparseVector form_to_sparse(const FormElement& a,
                            const FormComponentIndex& index);

/// Image of d on Omega^{p-1}[d], as a subspace of Omega^p[d].
EchelonSubspace exact_subspace(const GeneratorSet& gens, int p,
                               const MultiDegree& d);

/// Kernel of d on Omega^p[d].
EchelonSubspace closed_subspace(const GeneratorSet& gens, int p,
                                const MultiDegree& d);

/// Per-degree verification that phi models A/M_3: phi kills M_3, matches
/// the even-form dimension count, and maps L_2 onto the exact even forms.
struct FsOutcome {
  MultiDegree degree;
  bool phi_kills_m3;
  bool dim_match;
  bool exact_match;
  long dim_a;
  long dim_m3;
  long dim_omega_ev;
  long dim_phi_a;
  long dim_phi_l2;
  long dim_exact_ev;

  bool pass() const { return phi_kills_m3 && dim_match && exact_match; }
};

std::vector<FsOutcome> verify_fs(const SubspaceFamily& lcs_family,
                                 const SubspaceFamily& ideal_family);

}  // namespace lcs
