#pragma once

#include <array>
#include <string>
#include <vector>

#include "domcx/flag_complex.hpp"

namespace domcx {

struct SurfaceSig {
  int genus = 0;
  int holes = 0;
  bool operator==(const SurfaceSig& o) const { return genus == o.genus && holes == o.holes; }
  bool operator!=(const SurfaceSig& o) const { return !(*this == o); }
  int euler() const { return 2 - 2 * genus - holes; }
  std::string str() const { return "S_{" + std::to_string(genus) + "," + std::to_string(holes) + "}"; }
  /// True when the surface carries an essential curve (not a sphere with
  /// at most three holes).
  bool has_essential_curves() const { return !(genus == 0 && holes <= 3); }
};

/// Triangulation of the closed model surface with one marked point per hole
/// (one interior marked point when b = 0). Triangles are coherently
/// oriented: each edge has one side traversing it forward and one backward.
///
/// Conventions: corner c of a triangle is opposite edge slot c; slot s joins
/// corners s+1 and s+2 (mod 3) and is traversed from corner s+1 to corner
/// s+2; `fwd` records whether that traversal agrees with the edge's
/// intrinsic direction.
class Triangulation {
 public:
  struct Side {
    int tri = -1, slot = -1;
    bool operator==(const Side& o) const { return tri == o.tri && slot == o.slot; }
    bool operator<(const Side& o) const { return tri < o.tri || (tri == o.tri && slot < o.slot); }
  };

  static Triangulation standard(SurfaceSig sig);

  /// Assemble a triangulation from explicit cell data; validates coherence
  /// against the claimed signature.
  static Triangulation from_data(SurfaceSig sig, int num_edges,
                                 const std::vector<std::array<int, 3>>& edges,
                                 const std::vector<std::array<bool, 3>>& fwd);

  int triangles() const { return static_cast<int>(tris_.size()); }
  int edges() const { return num_edges_; }
  int marked_points() const { return num_vertices_; }
  SurfaceSig sig() const { return sig_; }

  int edge_at(int t, int s) const { return tris_[t].edge[s]; }
  bool forward_at(int t, int s) const { return tris_[t].fwd[s]; }
  Side side(int e, int which) const { return sides_[e][which]; }
  Side opposite_side(int t, int s) const;
  int corner_vertex(int t, int c) const { return corner_vertex_[t][c]; }

  /// Combinatorial self-maps of the triangulation: triangle/slot bijections
  /// preserving the gluing. These realize the geometric automorphisms the
  /// verifier samples.
  struct Symmetry {
    std::vector<int> tri_image;
    std::vector<int> rot;
    bool reflected = false;
    std::vector<int> edge_perm;
    std::vector<int> vertex_perm;
    int image_slot(int t, int s) const {
      return reflected ? ((rot[t] - s) % 3 + 3) % 3 : (rot[t] + s) % 3;
    }
  };
  std::vector<Symmetry> symmetries() const;

 private:
  struct Tri {
    std::array<int, 3> edge{};
    std::array<bool, 3> fwd{};
  };

  void finalize();  // derives sides_, corner_vertex_, validates

  SurfaceSig sig_;
  int num_vertices_ = 0;
  int num_edges_ = 0;
  std::vector<Tri> tris_;
  std::vector<std::array<Side, 2>> sides_;
  std::vector<std::array<int, 3>> corner_vertex_;

  static Triangulation punctured_sphere(int b);
  static Triangulation genus_polygon(int g);
  void subdivide_last();
};

/// A signature plus its fixed standard triangulation; every curve and domain
/// on the surface is coordinatized against this.
class Surface {
 public:
  explicit Surface(SurfaceSig sig);
  const SurfaceSig& sig() const { return sig_; }
  const Triangulation& tri() const { return tri_; }

 private:
  SurfaceSig sig_;
  Triangulation tri_;
};

}  // namespace domcx
