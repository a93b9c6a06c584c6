#pragma once

// Independent disjointness oracle for the slope surfaces. Intersection
// numbers of slope curves come from homology: the signed crossing vector of
// a traced curve against the triangulation arcs is the intersection pairing
// with a basis of H1, so two classes are disjoint exactly when the relevant
// 2x2 determinant vanishes. None of this consults curves_disjoint.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

#include "domcx/curves.hpp"
#include "domcx/surface.hpp"

namespace oracle {

/// Signed crossing totals of the single copy of an essential curve,
/// one entry per edge, sign-normalized (first nonzero entry positive).
inline std::vector<int> signed_vector(const domcx::Triangulation& tr, const domcx::Weights& w) {
  domcx::TraceResult t = domcx::trace(tr, w);
  if (t.copies != 1) throw domcx::Error("signed_vector: not a connected curve");
  std::vector<int> v(tr.edges(), 0);
  for (auto [e, s] : t.copy_crossings[0]) v[e] += s;
  for (int x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (int& y : v) y = -y;
      break;
    }
  }
  return v;
}

/// Geometric intersection number of two slope classes on the once-holed
/// torus: |p s - q r| in the arc basis given by edges 0 and 1.
inline long long torus_intersection(const domcx::Surface& s11, const domcx::Weights& a,
                                    const domcx::Weights& b) {
  auto va = signed_vector(s11.tri(), a), vb = signed_vector(s11.tri(), b);
  return std::llabs(static_cast<long long>(va[0]) * vb[1] -
                    static_cast<long long>(va[1]) * vb[0]);
}

/// Branched double cover of the four-holed sphere (the pillowcase cover by
/// the torus). Slope classes upstairs distinguish slope classes downstairs.
class PillowOracle {
 public:
  explicit PillowOracle(const domcx::Surface& s04) : base_(&s04.tri()) {
    const domcx::Triangulation& tr = *base_;
    int ne = tr.edges(), nv = tr.marked_points();

    // ends of each edge, by marked point
    std::vector<std::vector<int>> ends(nv, std::vector<int>(ne, 0));
    for (int e = 0; e < ne; ++e) {
      auto sd = tr.side(e, 0);
      ends[tr.corner_vertex(sd.tri, (sd.slot + 1) % 3)][e] += 1;
      ends[tr.corner_vertex(sd.tri, (sd.slot + 2) % 3)][e] += 1;
    }
    // GF(2) system: around every marked point the sheets must swap
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < nv; ++v) {
      std::vector<int> r(ne + 1, 0);
      for (int e = 0; e < ne; ++e) r[e] = ends[v][e] % 2;
      r[ne] = 1;
      rows.push_back(r);
    }
    z_.assign(ne, 0);
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < ne && rank < static_cast<int>(rows.size()); ++col) {
      int p = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][col]) { p = r; break; }
      if (p < 0) continue;
      std::swap(rows[rank], rows[p]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (r != rank && rows[r][col])
          for (int c2 = 0; c2 <= ne; ++c2) rows[r][c2] ^= rows[rank][c2];
      pivot_col.push_back(col);
      ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][ne]) throw domcx::Error("PillowOracle: no branched double cover");
    for (int r = 0; r < rank; ++r) z_[pivot_col[r]] = rows[r][ne];

    // assemble the cover: triangle (t, sheet), edge (e, sheet-at-primary-side)
    int nt = tr.triangles();
    std::vector<std::array<int, 3>> edges(2 * nt);
    std::vector<std::array<bool, 3>> fwd(2 * nt);
    for (int t = 0; t < nt; ++t)
      for (int sheet = 0; sheet < 2; ++sheet)
        for (int s = 0; s < 3; ++s) {
          int e = tr.edge_at(t, s);
          bool primary = (tr.side(e, 0) == domcx::Triangulation::Side{t, s});
          int esheet = primary ? sheet : sheet ^ z_[e];
          edges[2 * t + sheet][s] = 2 * e + esheet;
          fwd[2 * t + sheet][s] = tr.forward_at(t, s);
        }
    cover_ = domcx::Triangulation::from_data({1, 4}, 2 * ne, edges, fwd);
  }

  /// Deck-invariant slope label: the smaller normalized signed-crossing
  /// vector over the two lifted copies.
  std::vector<int> slope_invariant(const domcx::Weights& w) const {
    domcx::Weights lifted(cover_.edges(), 0);
    for (size_t e = 0; e < w.size(); ++e) lifted[2 * e] = lifted[2 * e + 1] = w[e];
    domcx::TraceResult t = domcx::trace(cover_, lifted);
    if (t.copies != 2) throw domcx::Error("PillowOracle: lift is not two copies");
    std::vector<std::vector<int>> vs;
    for (int c = 0; c < 2; ++c) {
      std::vector<int> v(cover_.edges(), 0);
      for (auto [e, s] : t.copy_crossings[c]) v[e] += s;
      for (int x : v) {
        if (x > 0) break;
        if (x < 0) {
          for (int& y : v) y = -y;
          break;
        }
      }
      vs.push_back(std::move(v));
    }
    return std::min(vs[0], vs[1]);
  }

  bool same_slope(const domcx::Weights& a, const domcx::Weights& b) const {
    return slope_invariant(a) == slope_invariant(b);
  }

  const domcx::Triangulation& cover() const { return cover_; }

 private:
  const domcx::Triangulation* base_;
  std::vector<int> z_;
  domcx::Triangulation cover_;
};

}  // namespace oracle
