#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lcs/multidegree.hpp"

namespace lcs {

/// A word in the free algebra: the sequence of its letters (0-based).
/// The empty word is the unit.
using Word = std::vector<int>;

inline MultiDegree word_degree(const GeneratorSet& gens, const Word& w) {
  MultiDegree d(static_cast<std::size_t>(gens.count()), 0);
  for (int letter : w) ++d[static_cast<std::size_t>(letter)];
  return d;
}

inline int word_parity(const GeneratorSet& gens, const Word& w) {
  int odd = 0;
  for (int letter : w) odd += gens.is_odd(letter) ? 1 : 0;
  return odd & 1;
}

/// All words of letter-count vector d in lexicographic order; the count is
/// the multinomial coefficient total(d) choose d.
std::vector<Word> word_basis(const GeneratorSet& gens, const MultiDegree& d);

/// Raised when a graded component exceeds the configured dimension budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(GeneratorSet g, MultiDegree deg, long cap, long needed);

  GeneratorSet gens;
  MultiDegree degree;
  long budget;
  long required;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int letter : w) {
      h ^= static_cast<std::size_t>(letter) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Monomial basis of one graded component A[d], with index lookup.
struct ComponentBasis {
  std::vector<Word> words;
  std::unordered_map<Word, std::int64_t, WordHash> index;

  std::int64_t dim() const { return static_cast<std::int64_t>(words.size()); }
  std::int64_t index_of(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) throw std::invalid_argument("word outside component");
    return it->second;
  }
};

/// Lazily enumerated word bases for all components of one algebra, shared by
/// the engine, the form checks and the workbench. Enumeration refuses to
/// build a component larger than the budget.
class GradedContext {
 public:
  GradedContext(GeneratorSet gens, long budget = kDefaultBudget)
      : gens_(gens), budget_(budget) {}

  static constexpr long kDefaultBudget = 5000;

  const GeneratorSet& gens() const { return gens_; }
  long budget() const { return budget_; }

  const ComponentBasis& basis(const MultiDegree& d) const;

  long multinomial(const MultiDegree& d) const;

 private:
  GeneratorSet gens_;
  long budget_;
  mutable std::map<MultiDegree, ComponentBasis> bases_;
};

}  // namespace lcs
