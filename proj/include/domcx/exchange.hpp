#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "domcx/flag_complex.hpp"

namespace domcx {

/// Unordered pair of distinct vertices, stored with x < y.
struct ExchangePair {
  int x, y;
  ExchangePair(int a, int b);
  bool operator==(const ExchangePair& o) const { return x == o.x && y == o.y; }
  bool operator<(const ExchangePair& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/// A set of vertex pairs, no two of which share a vertex. Pairs kept sorted.
class ExchangeSet {
 public:
  ExchangeSet() = default;
  explicit ExchangeSet(std::vector<ExchangePair> pairs);
  static ExchangeSet from_pairs(const std::vector<std::pair<int, int>>& pairs);

  const std::vector<ExchangePair>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const ExchangePair& p) const;
  bool touches(int v) const;

  ExchangeSet symmetric_difference(const ExchangeSet& o) const;
  ExchangeSet subset_by_mask(uint64_t mask) const;
  /// Involution swapping each pair and fixing everything else.
  VertexMap as_map(int n) const;

  bool operator==(const ExchangeSet& o) const { return pairs_ == o.pairs_; }

 private:
  std::vector<ExchangePair> pairs_;
};

/// Dispatches per the edge/non-edge refinements of the exchangeability
/// condition: equal stars when {x,y} is an edge, equal links when not.
bool is_exchangeable(const FlagComplex& k, int x, int y);

/// The undispatched form: St(x) and St(y) agree away from {x,y}. For flag
/// complexes this reduces to N(x)\{y} = N(y)\{x}.
bool exchange_condition_general(const FlagComplex& k, int x, int y);

struct ExchangeAutomorphism {
  ExchangeSet support;
  VertexMap map;
  bool is_identity() const { return support.empty(); }
};

ExchangeAutomorphism simple_exchange(const FlagComplex& k, int x, int y);
ExchangeAutomorphism generalized_exchange(const FlagComplex& k, const ExchangeSet& f);

/// Composition law: phi_F o phi_G = phi_{F xor G}. Errors if a pair of F and
/// a different pair of G share a vertex.
ExchangeAutomorphism compose_exchanges(const FlagComplex& k, const ExchangeAutomorphism& f,
                                       const ExchangeAutomorphism& g);

/// The group {phi_F : F subset of E}, isomorphic to the Boolean algebra of
/// subsets of E under symmetric difference. Elements indexed by bitmask.
class BooleanSubgroup {
 public:
  BooleanSubgroup(const FlagComplex& k, ExchangeSet e);
  size_t rank() const { return e_.size(); }
  unsigned long long order() const;
  const ExchangeSet& basis() const { return e_; }
  ExchangeAutomorphism element(uint64_t mask) const;
  static uint64_t multiply(uint64_t a, uint64_t b) { return a ^ b; }
  std::vector<VertexMap> all_element_maps() const;

 private:
  const FlagComplex* k_;
  ExchangeSet e_;
};

/// Image set G = phi(F); checks the conjugation law
/// phi o Phi_F o phi^{-1} = Phi_G on every vertex.
ExchangeSet conjugate_exchange(const FlagComplex& k, const VertexMap& phi, const ExchangeSet& f);

}  // namespace domcx
