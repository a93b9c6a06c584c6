#include "domcx/exchange.hpp"

#include <algorithm>
#include <set>

namespace domcx {

ExchangePair::ExchangePair(int a, int b) : x(std::min(a, b)), y(std::max(a, b)) {
  if (a == b) throw Error("ExchangePair: vertices must be distinct");
}

ExchangeSet::ExchangeSet(std::vector<ExchangePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  std::set<int> seen;
  for (const auto& p : pairs_) {
    if (!seen.insert(p.x).second || !seen.insert(p.y).second)
      throw Error("ExchangeSet: two pairs share a vertex");
  }
}

ExchangeSet ExchangeSet::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<ExchangePair> v;
  v.reserve(pairs.size());
  for (auto [a, b] : pairs) v.emplace_back(a, b);
  return ExchangeSet(std::move(v));
}

bool ExchangeSet::contains(const ExchangePair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool ExchangeSet::touches(int v) const {
  for (const auto& p : pairs_)
    if (p.x == v || p.y == v) return true;
  return false;
}

ExchangeSet ExchangeSet::symmetric_difference(const ExchangeSet& o) const {
  std::vector<ExchangePair> out;
  std::set_symmetric_difference(pairs_.begin(), pairs_.end(), o.pairs_.begin(), o.pairs_.end(),
                                std::back_inserter(out));
  return ExchangeSet(std::move(out));
}

ExchangeSet ExchangeSet::subset_by_mask(uint64_t mask) const {
  if (pairs_.size() > 63) throw Error("subset_by_mask: set too large for mask indexing");
  std::vector<ExchangePair> out;
  for (size_t i = 0; i < pairs_.size(); ++i)
    if ((mask >> i) & 1) out.push_back(pairs_[i]);
  return ExchangeSet(std::move(out));
}

VertexMap ExchangeSet::as_map(int n) const {
  VertexMap m = identity_map(n);
  for (const auto& p : pairs_) {
    if (p.y >= n) throw Error("ExchangeSet::as_map: pair outside complex");
    m[p.x] = p.y;
    m[p.y] = p.x;
  }
  return m;
}

bool is_exchangeable(const FlagComplex& k, int x, int y) {
  if (x == y) throw Error("is_exchangeable: x = y");
  if (k.adjacent(x, y)) return k.stars_equal(x, y);
  return k.links_equal(x, y);
}

bool exchange_condition_general(const FlagComplex& k, int x, int y) {
  if (x == y) throw Error("exchange_condition_general: x = y");
  std::vector<int> nx = k.link0(x), ny = k.link0(y);
  nx.erase(std::remove(nx.begin(), nx.end(), y), nx.end());
  ny.erase(std::remove(ny.begin(), ny.end(), x), ny.end());
  return nx == ny;
}

ExchangeAutomorphism simple_exchange(const FlagComplex& k, int x, int y) {
  if (!is_exchangeable(k, x, y))
    throw Error("simple_exchange: pair (" + std::to_string(x) + "," + std::to_string(y) +
                ") is not exchangeable");
  ExchangeSet f({ExchangePair(x, y)});
  return ExchangeAutomorphism{f, f.as_map(k.size())};
}

ExchangeAutomorphism generalized_exchange(const FlagComplex& k, const ExchangeSet& f) {
  for (const auto& p : f.pairs())
    if (!is_exchangeable(k, p.x, p.y))
      throw Error("generalized_exchange: pair (" + std::to_string(p.x) + "," +
                  std::to_string(p.y) + ") is not exchangeable");
  return ExchangeAutomorphism{f, f.as_map(k.size())};
}

ExchangeAutomorphism compose_exchanges(const FlagComplex& k, const ExchangeAutomorphism& f,
                                       const ExchangeAutomorphism& g) {
  for (const auto& p : f.support.pairs())
    for (const auto& q : g.support.pairs())
      if (!(p == q) && (p.x == q.x || p.x == q.y || p.y == q.x || p.y == q.y))
        throw Error("compose_exchanges: incompatible supports share a vertex");
  ExchangeSet d = f.support.symmetric_difference(g.support);
  ExchangeAutomorphism r{d, d.as_map(k.size())};
  if (r.map != compose(f.map, g.map)) throw Error("compose_exchanges: composition law violated");
  return r;
}

BooleanSubgroup::BooleanSubgroup(const FlagComplex& k, ExchangeSet e) : k_(&k), e_(std::move(e)) {
  for (const auto& p : e_.pairs())
    if (!is_exchangeable(k, p.x, p.y))
      throw Error("BooleanSubgroup: basis contains a non-exchangeable pair");
}

unsigned long long BooleanSubgroup::order() const {
  if (e_.size() > 62) throw Error("BooleanSubgroup::order: rank too large");
  return 1ull << e_.size();
}

ExchangeAutomorphism BooleanSubgroup::element(uint64_t mask) const {
  ExchangeSet f = e_.subset_by_mask(mask);
  return ExchangeAutomorphism{f, f.as_map(k_->size())};
}

std::vector<VertexMap> BooleanSubgroup::all_element_maps() const {
  unsigned long long n = order();
  std::vector<VertexMap> r;
  r.reserve(n);
  for (unsigned long long m = 0; m < n; ++m) r.push_back(element(m).map);
  return r;
}

ExchangeSet conjugate_exchange(const FlagComplex& k, const VertexMap& phi, const ExchangeSet& f) {
  if (!k.is_automorphism(phi)) throw Error("conjugate_exchange: phi is not an automorphism");
  std::vector<ExchangePair> image;
  image.reserve(f.size());
  for (const auto& p : f.pairs()) image.emplace_back(phi[p.x], phi[p.y]);
  ExchangeSet g(std::move(image));
  VertexMap lhs = compose(phi, compose(f.as_map(k.size()), inverse_of(phi)));
  if (lhs != g.as_map(k.size())) throw Error("conjugate_exchange: conjugation law violated");
  return g;
}

}  // namespace domcx
