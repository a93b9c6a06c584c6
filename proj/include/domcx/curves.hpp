#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "domcx/surface.hpp"

namespace domcx {

/// Normal coordinates: one non-negative weight per triangulation edge.
using Weights = std::vector<int>;

Weights add_weights(const Weights& a, const Weights& b);

/// Matching conditions: around every triangle the weights have even sum and
/// satisfy the triangle inequalities, so corner-arc counts are non-negative
/// integers.
bool admissible(const Triangulation& tr, const Weights& w);

/// Corner-arc count at corner c of triangle t.
int corner_count(const Triangulation& tr, const Weights& w, int t, int c);

struct ArcStep {
  int tri, corner, depth;
  bool forward;  // traversed from slot corner+1 to slot corner+2
};

/// A directed position of a traversal: at the point on slot `slot` of
/// triangle `tri`, local position `pos`, about to cross the triangle.
struct TraceState {
  int tri, slot, pos;
};

struct TraceComponent {
  Weights coords;
  int multiplicity = 1;
  int linking_vertex = -1;  // marked point this component encircles, or -1
  bool vertex_linking() const { return linking_vertex >= 0; }
};

/// Decomposition of an admissible weight vector into connected components.
/// Copies are the individual traversed circles (parallel copies listed
/// separately); components group copies with identical coordinates.
struct TraceResult {
  std::vector<TraceComponent> components;   // sorted by coords
  int copies = 0;
  std::vector<int> copy_component;          // copy -> component index
  std::vector<Weights> copy_coords;
  std::vector<int> copy_linking_vertex;
  std::vector<std::vector<int>> point_copy; // [edge][intrinsic index] -> copy
  std::vector<std::vector<ArcStep>> copy_arcs;  // canonical traversal order
  std::vector<std::vector<TraceState>> copy_states;  // state before each arc
  /// Edge crossings in traversal order with the sign of the crossing
  /// relative to the edge's intrinsic direction.
  std::vector<std::vector<std::pair<int, int>>> copy_crossings;
};

TraceResult trace(const Triangulation& tr, const Weights& w);

/// Isotopy class of a connected normal curve; identity is coordinate
/// equality on the fixed triangulation.
struct CurveClass {
  Weights coords;
  int linking_vertex = -1;
  bool essential() const { return linking_vertex < 0; }
  bool operator==(const CurveClass& o) const { return coords == o.coords; }
  bool operator<(const CurveClass& o) const { return coords < o.coords; }
};

bool is_essential(const CurveClass& c);

/// Visits every admissible weight vector with all entries <= bound.
void for_each_admissible(const Triangulation& tr, int bound,
                         const std::function<void(const Weights&)>& fn);

/// All essential connected classes with max edge weight <= bound, sorted.
std::vector<CurveClass> enumerate_curves(const Surface& s, int bound);

/// Whether two essential classes admit disjoint representatives: the merged
/// coordinates must trace back to exactly the two inputs.
bool curves_disjoint(const Surface& s, const Weights& a, const Weights& b);

/// Search for a curve meeting alpha and missing the rest of the family.
std::optional<CurveClass> find_distinguishing_curve(const Surface& s,
                                                    const std::vector<Weights>& family,
                                                    int alpha_index, int bound);

}  // namespace domcx
