#pragma once

#include <memory>
#include <string>
#include <vector>

#include "domcx/automorphism.hpp"
#include "domcx/domains.hpp"
#include "domcx/exchange.hpp"

namespace domcx {

/// Vertex payload of a built bundle: a curve class (kind C) or a domain
/// class (kinds D and D2).
struct VertexLabel {
  bool is_curve = false;
  CurveClass curve;
  DomainClass domain;
  std::string text() const;
};

/// A finite weight-bound truncation of C(S), D(S) or D2(S): the flag
/// complex, the vertex labels, and for D the biperipheral pairs, the
/// projection and the induced D2 sub-bundle.
struct ComplexBundle {
  SurfaceSig sig;
  int weight = 0;
  char kind = 'C';  // 'C', 'D', '2'
  std::shared_ptr<const Surface> surface;
  FlagComplex complex;
  std::vector<VertexLabel> labels;

  // kind D only
  std::vector<std::pair<int, int>> biperipheral_pairs;
  bool biperipheral_vertex_disjoint = true;
  std::vector<int> projection;  // D vertex -> D2 vertex index
  std::vector<int> d2_ids;      // D vertex ids kept in D2, ascending
  std::shared_ptr<ComplexBundle> d2;

  bool connected = false;

  int vertex_by_curve(const Weights& coords) const;
  int vertex_by_domain(const DomainClass& d) const;
};

ComplexBundle build_C(SurfaceSig sig, int weight, int threads = 1);
ComplexBundle build_D(SurfaceSig sig, int weight, int threads = 1);
ComplexBundle build_D2(SurfaceSig sig, int weight, int threads = 1);

/// Derives biperipheral pairs, the projection, and the D2 sub-bundle of a D
/// bundle from its labels and complex; asserts fiber-closure.
void rebuild_d_structure(ComplexBundle& bundle);

/// The biperipheral edges as an ExchangeSet; throws when the pairs share
/// vertices (the four-holed sphere) or on a non-D bundle.
ExchangeSet biperipheral_edge_set(const ComplexBundle& d);

/// The projection D -> D2 as a vertex map into d2 indexing.
const std::vector<int>& project_map(const ComplexBundle& d);

/// Unique automorphism of the D2 sub-bundle with phi_* o pi = pi o phi.
/// Requires phi to preserve the biperipheral pair set.
VertexMap push_forward(const ComplexBundle& d, const VertexMap& phi);

/// Vertex maps induced by the symmetries of the standard triangulation;
/// every returned map is a verified automorphism of the bundle complex.
std::vector<VertexMap> geometric_automorphisms(const ComplexBundle& bundle);

}  // namespace domcx
