#include "lcs/word_basis.hpp"

#include <algorithm>

namespace lcs {

std::vector<MultiDegree> degrees_of_total(int vars, int total) {
  std::vector<MultiDegree> out;
  MultiDegree current(static_cast<std::size_t>(vars), 0);
  // Depth-first over positions keeps lexicographic order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == vars - 1) {
      current[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  if (vars == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, total);
  return out;
}

std::vector<MultiDegree> degrees_up_to(int vars, int D) {
  std::vector<MultiDegree> out;
  for (int total = 1; total <= D; ++total) {
    auto layer = degrees_of_total(vars, total);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiDegree> sub_degrees(const MultiDegree& d) {
  std::vector<MultiDegree> out;
  MultiDegree current(d.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == d.size()) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= d[pos]; ++e) {
      current[pos] = e;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Word> word_basis(const GeneratorSet& gens, const MultiDegree& d) {
  Word sorted;
  for (int letter = 0; letter < gens.count(); ++letter) {
    sorted.insert(sorted.end(), static_cast<std::size_t>(d[static_cast<std::size_t>(letter)]),
                  letter);
  }
  std::vector<Word> out;
  // next_permutation over the sorted multiset yields lexicographic order.
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

BudgetExceeded::BudgetExceeded(GeneratorSet g, MultiDegree deg, long cap,
                               long needed)
    : std::runtime_error("component dimension " + std::to_string(needed) +
                         " at degree " + degree_str(deg) +
                         " exceeds budget " + std::to_string(cap)),
      gens(g),
      degree(std::move(deg)),
      budget(cap),
      required(needed) {}

long GradedContext::multinomial(const MultiDegree& d) const {
  constexpr long kOverflowCap = 1L << 40;
  long result = 1;
  long placed = 0;
  for (int e : d) {
    for (long i = 1; i <= e; ++i) {
      ++placed;
      result = result * placed / i;  // binomial recurrence, always divisible
      if (result > kOverflowCap) return kOverflowCap;
    }
  }
  return result;
}

const ComponentBasis& GradedContext::basis(const MultiDegree& d) const {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  long count = multinomial(d);
  if (count > budget_) throw BudgetExceeded(gens_, d, budget_, count);
  ComponentBasis b;
  b.words = word_basis(gens_, d);
  b.index.reserve(b.words.size());
  for (std::size_t i = 0; i < b.words.size(); ++i) {
    b.index.emplace(b.words[i], static_cast<std::int64_t>(i));
  }
  return bases_.emplace(d, std::move(b)).first->second;
}

}  // namespace lcs
