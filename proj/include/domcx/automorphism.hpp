#pragma once

#include <cstddef>
#include <vector>

#include "domcx/exchange.hpp"
#include "domcx/flag_complex.hpp"

namespace domcx {

/// Explicit list of permutations of a vertex set, kept sorted. Desk-scale
/// groups only; no generator machinery.
class PermGroup {
 public:
  PermGroup() = default;
  static PermGroup from_elements(std::vector<VertexMap> elems);

  size_t order() const { return elems_.size(); }
  const std::vector<VertexMap>& elements() const { return elems_; }
  bool contains(const VertexMap& m) const;
  /// Identity present, closed under composition and inverse.
  bool is_group() const;
  /// Indices of a greedy generating set (deterministic).
  std::vector<int> generator_indices() const;

 private:
  std::vector<VertexMap> elems_;
};

/// Exact automorphism group by backtracking with invariant pruning.
/// Throws BudgetExceeded when more than `budget` elements are found.
PermGroup all_automorphisms(const FlagComplex& k, size_t budget = 1000000);

/// All unordered exchangeable pairs, sorted.
std::vector<ExchangePair> exchangeable_pairs(const FlagComplex& k);

/// gHg^-1 = H for every g in G. Errors unless H is contained in G.
bool is_normal(const PermGroup& h, const PermGroup& g);

}  // namespace domcx
