#include "domcx/automorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace domcx {

PermGroup PermGroup::from_elements(std::vector<VertexMap> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PermGroup g;
  g.elems_ = std::move(elems);
  return g;
}

bool PermGroup::contains(const VertexMap& m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m);
}

std::vector<int> PermGroup::generator_indices() const {
  std::vector<int> gens;
  if (elems_.empty()) return gens;
  std::set<VertexMap> known{identity_map(static_cast<int>(elems_[0].size()))};
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (known.count(elems_[i])) continue;
    gens.push_back(static_cast<int>(i));
    std::vector<VertexMap> frontier(known.begin(), known.end());
    while (!frontier.empty()) {
      VertexMap cur = frontier.back();
      frontier.pop_back();
      for (int g : gens) {
        VertexMap next = compose(elems_[g], cur);
        if (known.insert(next).second) frontier.push_back(next);
      }
    }
  }
  return gens;
}

bool PermGroup::is_group() const {
  if (elems_.empty()) return false;
  size_t n = elems_[0].size();
  if (!contains(identity_map(static_cast<int>(n)))) return false;
  for (const auto& a : elems_) {
    if (!contains(inverse_of(a))) return false;
    for (const auto& b : elems_)
      if (!contains(compose(a, b))) return false;
  }
  return true;
}

namespace {

struct SearchState {
  const FlagComplex* k;
  size_t budget;
  std::vector<int> order;        // vertices in assignment order
  std::vector<int> image;        // partial map
  std::vector<char> used;        // image vertices taken
  std::vector<int> invariant;    // invariant class id per vertex
  std::vector<VertexMap> found;
};

void search(SearchState& st, size_t depth) {
  if (depth == st.order.size()) {
    st.found.push_back(st.image);
    if (st.found.size() > st.budget)
      throw BudgetExceeded("all_automorphisms: element budget exceeded");
    return;
  }
  int v = st.order[depth];
  for (int w = 0; w < st.k->size(); ++w) {
    if (st.used[w] || st.invariant[w] != st.invariant[v]) continue;
    bool ok = true;
    for (size_t j = 0; j < depth && ok; ++j) {
      int u = st.order[j];
      if (st.k->adjacent(v, u) != st.k->adjacent(w, st.image[u])) ok = false;
    }
    if (!ok) continue;
    st.image[v] = w;
    st.used[w] = 1;
    search(st, depth + 1);
    st.used[w] = 0;
    st.image[v] = -1;
  }
}

}  // namespace

PermGroup all_automorphisms(const FlagComplex& k, size_t budget) {
  int n = k.size();
  if (n == 0) return PermGroup::from_elements({VertexMap{}});

  // Invariant: (degree, sorted neighbor degrees, size of star-equal class).
  std::vector<int> star_class(n, -1);
  for (int v = 0; v < n; ++v) {
    if (star_class[v] >= 0) continue;
    star_class[v] = v;
    for (int w = v + 1; w < n; ++w)
      if (star_class[w] < 0 && k.stars_equal(v, w)) star_class[w] = v;
  }
  std::map<int, int> class_size;
  for (int v = 0; v < n; ++v) class_size[star_class[v]]++;

  std::map<std::tuple<int, std::vector<int>, int>, int> inv_ids;
  std::vector<int> invariant(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    for (int u : k.neighbors(v)) nd.push_back(k.degree(u));
    std::sort(nd.begin(), nd.end());
    auto key = std::make_tuple(k.degree(v), std::move(nd), class_size[star_class[v]]);
    auto [it, fresh] = inv_ids.emplace(std::move(key), static_cast<int>(inv_ids.size()));
    invariant[v] = it->second;
  }

  // Assign most-constrained invariant classes first, preferring vertices
  // adjacent to already-ordered ones so adjacency pruning bites early.
  std::map<int, int> inv_count;
  for (int v = 0; v < n; ++v) inv_count[invariant[v]]++;
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    bool best_adj = false;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool adj = false;
      for (int u : order)
        if (k.adjacent(v, u)) { adj = true; break; }
      if (best < 0 || (adj && !best_adj) ||
          (adj == best_adj && inv_count[invariant[v]] < inv_count[invariant[best]]))
        best = v, best_adj = adj;
    }
    placed[best] = 1;
    order.push_back(best);
  }

  SearchState st{&k, budget, order, VertexMap(n, -1), std::vector<char>(n, 0), invariant, {}};
  search(st, 0);
  return PermGroup::from_elements(std::move(st.found));
}

std::vector<ExchangePair> exchangeable_pairs(const FlagComplex& k) {
  std::vector<ExchangePair> r;
  for (int x = 0; x < k.size(); ++x)
    for (int y = x + 1; y < k.size(); ++y)
      if (is_exchangeable(k, x, y)) r.emplace_back(x, y);
  return r;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  for (const auto& m : h.elements())
    if (!g.contains(m)) throw Error("is_normal: H is not contained in G");
  for (const auto& a : g.elements()) {
    VertexMap ai = inverse_of(a);
    for (const auto& m : h.elements())
      if (!h.contains(compose(a, compose(m, ai)))) return false;
  }
  return true;
}

}  // namespace domcx
