#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domcx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnsupportedSurface : Error {
  using Error::Error;
};

/// Total map on the vertex set of a complex, m[v] = image of v.
using VertexMap = std::vector<int>;

VertexMap compose(const VertexMap& outer, const VertexMap& inner);
VertexMap inverse_of(const VertexMap& m);
VertexMap identity_map(int n);
bool is_bijection(const VertexMap& m);

/// Finite flag complex stored as its 1-skeleton: the simplices are exactly
/// the cliques of the adjacency relation. Vertices are dense ints 0..n-1,
/// each with a display label. Immutable after construction.
class FlagComplex {
 public:
  FlagComplex() = default;

  static FlagComplex from_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels = {});

  /// Vertices given by label; ids assigned by sorting the labels.
  static FlagComplex from_labeled_graph(const std::vector<std::string>& vertices,
                                        const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return n_; }
  const std::string& label(int v) const;
  int index_of_label(const std::string& l) const;

  bool adjacent(int x, int y) const;
  int degree(int x) const;
  std::vector<int> neighbors(int x) const;

  /// Zero-skeleton star: {x} together with all neighbors of x. Sorted.
  std::vector<int> star0(int x) const;
  /// Zero-skeleton link: star0(x) minus x itself. Sorted.
  std::vector<int> link0(int x) const;

  bool stars_equal(int x, int y) const;
  bool links_equal(int x, int y) const;
  /// star0(x) subset of star0(y), both taken as closed stars.
  bool star_subset(int x, int y) const;

  /// A set is a simplex iff it is a clique. The empty set is a simplex.
  bool is_simplex(std::vector<int> s) const;

  /// Induced subcomplex on w; vertices renumbered in increasing old-id order.
  FlagComplex induced(std::vector<int> w) const;

  bool is_simplicial_map(const VertexMap& m) const;
  bool is_automorphism(const VertexMap& m) const;

  /// Edges as (a,b) with a < b, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;
  long long edge_count() const;

  bool same_structure(const FlagComplex& o) const;

 private:
  void check_vertex(int v) const;
  const uint64_t* row(int x) const { return adj_.data() + static_cast<size_t>(x) * words_; }
  uint64_t* row(int x) { return adj_.data() + static_cast<size_t>(x) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> adj_;
  std::vector<std::string> labels_;
};

}  // namespace domcx
