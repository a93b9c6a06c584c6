#include "domcx/flag_complex.hpp"

#include <algorithm>
#include <map>

namespace domcx {

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap r(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) r[i] = outer.at(inner[i]);
  return r;
}

VertexMap inverse_of(const VertexMap& m) {
  VertexMap r(m.size(), -1);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= static_cast<int>(m.size()) || r[m[i]] != -1)
      throw Error("inverse_of: map is not a bijection");
    r[m[i]] = static_cast<int>(i);
  }
  return r;
}

VertexMap identity_map(int n) {
  VertexMap r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

bool is_bijection(const VertexMap& m) {
  std::vector<char> seen(m.size(), 0);
  for (int v : m) {
    if (v < 0 || v >= static_cast<int>(m.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

FlagComplex FlagComplex::from_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                    std::vector<std::string> labels) {
  if (n < 0) throw Error("from_graph: negative vertex count");
  FlagComplex k;
  k.n_ = n;
  k.words_ = (n + 63) / 64;
  k.adj_.assign(static_cast<size_t>(n) * k.words_, 0);
  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (static_cast<int>(labels.size()) != n) throw Error("from_graph: label count mismatch");
  k.labels_ = std::move(labels);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error("from_graph: edge references unknown vertex");
    if (a == b) throw Error("from_graph: self-loop");
    k.row(a)[b / 64] |= uint64_t(1) << (b % 64);
    k.row(b)[a / 64] |= uint64_t(1) << (a % 64);
  }
  return k;
}

FlagComplex FlagComplex::from_labeled_graph(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("from_labeled_graph: duplicate vertex label");
  std::map<std::string, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  e.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error("from_labeled_graph: edge references undeclared vertex");
    e.emplace_back(ia->second, ib->second);
  }
  return from_graph(static_cast<int>(sorted.size()), e, sorted);
}

void FlagComplex::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error("unknown vertex " + std::to_string(v));
}

const std::string& FlagComplex::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

int FlagComplex::index_of_label(const std::string& l) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == l) return i;
  throw Error("unknown vertex label " + l);
}

bool FlagComplex::adjacent(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  return (row(x)[y / 64] >> (y % 64)) & 1;
}

int FlagComplex::degree(int x) const {
  check_vertex(x);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row(x)[w]);
  return d;
}

std::vector<int> FlagComplex::neighbors(int x) const {
  check_vertex(x);
  std::vector<int> r;
  for (int y = 0; y < n_; ++y)
    if ((row(x)[y / 64] >> (y % 64)) & 1) r.push_back(y);
  return r;
}

std::vector<int> FlagComplex::star0(int x) const {
  std::vector<int> r = neighbors(x);
  r.insert(std::lower_bound(r.begin(), r.end(), x), x);
  return r;
}

std::vector<int> FlagComplex::link0(int x) const { return neighbors(x); }

bool FlagComplex::stars_equal(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  for (int w = 0; w < words_; ++w) {
    uint64_t rx = row(x)[w], ry = row(y)[w];
    if (w == x / 64) rx |= uint64_t(1) << (x % 64);
    if (w == y / 64) ry |= uint64_t(1) << (y % 64);
    if (rx != ry) return false;
  }
  return true;
}

bool FlagComplex::links_equal(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  for (int w = 0; w < words_; ++w)
    if (row(x)[w] != row(y)[w]) return false;
  return true;
}

bool FlagComplex::star_subset(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  for (int w = 0; w < words_; ++w) {
    uint64_t rx = row(x)[w], ry = row(y)[w];
    if (w == x / 64) rx |= uint64_t(1) << (x % 64);
    if (w == y / 64) ry |= uint64_t(1) << (y % 64);
    if (rx & ~ry) return false;
  }
  return true;
}

bool FlagComplex::is_simplex(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) check_vertex(v);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!adjacent(s[i], s[j])) return false;
  return true;
}

FlagComplex FlagComplex::induced(std::vector<int> w) const {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int v : w) check_vertex(v);
  std::vector<std::string> labels;
  labels.reserve(w.size());
  for (int v : w) labels.push_back(labels_[v]);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (adjacent(w[i], w[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return from_graph(static_cast<int>(w.size()), edges, std::move(labels));
}

bool FlagComplex::is_simplicial_map(const VertexMap& m) const {
  if (static_cast<int>(m.size()) != n_) throw Error("is_simplicial_map: map not total");
  for (int v : m)
    if (v < 0 || v >= n_) throw Error("is_simplicial_map: image out of range");
  // In a flag complex a map is simplicial iff every edge maps to an edge or
  // to a single vertex.
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (adjacent(x, y) && m[x] != m[y] && !adjacent(m[x], m[y])) return false;
  return true;
}

bool FlagComplex::is_automorphism(const VertexMap& m) const {
  if (static_cast<int>(m.size()) != n_) throw Error("is_automorphism: map not total");
  if (!is_bijection(m)) return false;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (adjacent(x, y) != adjacent(m[x], m[y])) return false;
  return true;
}

std::vector<std::pair<int, int>> FlagComplex::edge_list() const {
  std::vector<std::pair<int, int>> r;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (adjacent(x, y)) r.emplace_back(x, y);
  return r;
}

long long FlagComplex::edge_count() const {
  long long c = 0;
  for (int x = 0; x < n_; ++x) c += degree(x);
  return c / 2;
}

bool FlagComplex::same_structure(const FlagComplex& o) const {
  return n_ == o.n_ && adj_ == o.adj_ && labels_ == o.labels_;
}

}  // namespace domcx
