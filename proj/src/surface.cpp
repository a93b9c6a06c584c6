#include "domcx/surface.hpp"

#include <algorithm>
#include <numeric>

namespace domcx {

namespace {

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

Triangulation::Side Triangulation::opposite_side(int t, int s) const {
  int e = tris_[t].edge[s];
  Side me{t, s};
  return sides_[e][0] == me ? sides_[e][1] : sides_[e][0];
}

void Triangulation::finalize() {
  int nt = triangles();
  std::vector<std::vector<Side>> incident(num_edges_);
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < 3; ++s) {
      int e = tris_[t].edge[s];
      if (e < 0 || e >= num_edges_) throw Error("triangulation: edge id out of range");
      incident[e].push_back({t, s});
    }
  sides_.assign(num_edges_, {});
  for (int e = 0; e < num_edges_; ++e) {
    if (incident[e].size() != 2) throw Error("triangulation: edge without exactly two sides");
    std::sort(incident[e].begin(), incident[e].end());
    sides_[e] = {incident[e][0], incident[e][1]};
    bool fa = tris_[sides_[e][0].tri].fwd[sides_[e][0].slot];
    bool fb = tris_[sides_[e][1].tri].fwd[sides_[e][1].slot];
    if (fa == fb) throw Error("triangulation: incoherent edge orientation");
  }

  // Corner classes: the intrinsic start of an edge is the corner s+1 of its
  // forward side and the corner s'+2 of its backward side.
  std::vector<int> uf(3 * nt);
  std::iota(uf.begin(), uf.end(), 0);
  auto corner_id = [](int t, int c) { return 3 * t + c; };
  for (int e = 0; e < num_edges_; ++e) {
    Side a = sides_[e][0], b = sides_[e][1];
    Side f = tris_[a.tri].fwd[a.slot] ? a : b;
    Side r = tris_[a.tri].fwd[a.slot] ? b : a;
    int start_f = corner_id(f.tri, (f.slot + 1) % 3), end_f = corner_id(f.tri, (f.slot + 2) % 3);
    int start_r = corner_id(r.tri, (r.slot + 2) % 3), end_r = corner_id(r.tri, (r.slot + 1) % 3);
    uf[find_root(uf, start_f)] = find_root(uf, start_r);
    uf[find_root(uf, end_f)] = find_root(uf, end_r);
  }
  corner_vertex_.assign(nt, {});
  std::vector<int> id_of_root(3 * nt, -1);
  int next = 0;
  for (int t = 0; t < nt; ++t)
    for (int c = 0; c < 3; ++c) {
      int r = find_root(uf, corner_id(t, c));
      if (id_of_root[r] < 0) id_of_root[r] = next++;
      corner_vertex_[t][c] = id_of_root[r];
    }
  num_vertices_ = next;

  int expected_vertices = sig_.holes == 0 ? 1 : sig_.holes;
  if (num_vertices_ != expected_vertices)
    throw Error("triangulation: marked point count mismatch for " + sig_.str());
  int chi_cells = num_vertices_ - num_edges_ + nt;
  if (chi_cells != 2 - 2 * sig_.genus)
    throw Error("triangulation: Euler characteristic mismatch for " + sig_.str());
}

Triangulation Triangulation::punctured_sphere(int b) {
  // Double of a triangulated b-gon along its boundary.
  Triangulation tr;
  tr.sig_ = {0, b};
  auto side_edge = [&](int i) { return i; };
  auto diag_top = [&](int j) { return b + (j - 2); };
  auto diag_bot = [&](int j) { return b + (b - 3) + (j - 2); };
  tr.num_edges_ = 3 * b - 6;
  for (int j = 1; j <= b - 2; ++j) {  // top copy
    Tri t;
    t.edge[0] = side_edge(j);
    t.fwd[0] = true;
    if (j + 1 <= b - 2) {
      t.edge[1] = diag_top(j + 1);
      t.fwd[1] = false;
    } else {
      t.edge[1] = side_edge(b - 1);
      t.fwd[1] = true;
    }
    if (j >= 2) {
      t.edge[2] = diag_top(j);
      t.fwd[2] = true;
    } else {
      t.edge[2] = side_edge(0);
      t.fwd[2] = true;
    }
    tr.tris_.push_back(t);
  }
  for (int j = 1; j <= b - 2; ++j) {  // bottom copy, mirrored
    Tri t;
    t.edge[0] = side_edge(j);
    t.fwd[0] = false;
    if (j >= 2) {
      t.edge[1] = diag_bot(j);
      t.fwd[1] = false;
    } else {
      t.edge[1] = side_edge(0);
      t.fwd[1] = false;
    }
    if (j + 1 <= b - 2) {
      t.edge[2] = diag_bot(j + 1);
      t.fwd[2] = true;
    } else {
      t.edge[2] = side_edge(b - 1);
      t.fwd[2] = false;
    }
    tr.tris_.push_back(t);
  }
  return tr;
}

Triangulation Triangulation::genus_polygon(int g) {
  // Fan triangulation of the 4g-gon with the standard identification word;
  // all polygon corners become the single marked point.
  Triangulation tr;
  tr.sig_ = {g, 1};
  int n = 4 * g;
  auto pair_edge = [&](int k) {
    int i = k / 4, r = k % 4;
    return (r == 0 || r == 2) ? 2 * i : 2 * i + 1;
  };
  auto pair_first = [&](int k) { return k % 4 <= 1; };  // smaller side of its pair
  auto diag = [&](int m) { return 2 * g + (m - 2); };
  tr.num_edges_ = 2 * g + (n - 3);
  for (int m = 1; m <= n - 2; ++m) {
    Tri t;
    t.edge[0] = pair_edge(m);
    t.fwd[0] = pair_first(m);
    if (m + 1 <= n - 2) {
      t.edge[1] = diag(m + 1);
      t.fwd[1] = false;
    } else {
      t.edge[1] = pair_edge(n - 1);
      t.fwd[1] = pair_first(n - 1);
    }
    if (m >= 2) {
      t.edge[2] = diag(m);
      t.fwd[2] = true;
    } else {
      t.edge[2] = pair_edge(0);
      t.fwd[2] = pair_first(0);
    }
    tr.tris_.push_back(t);
  }
  return tr;
}

void Triangulation::subdivide_last() {
  // 1-3 move: replace the last triangle by three around a fresh marked point.
  Tri old = tris_.back();
  tris_.pop_back();
  int base = num_edges_;
  num_edges_ += 3;  // spoke j runs from the new point to old corner j
  for (int i = 0; i < 3; ++i) {
    Tri t;
    t.edge[0] = old.edge[i];
    t.fwd[0] = old.fwd[i];
    t.edge[1] = base + (i + 2) % 3;
    t.fwd[1] = false;  // corner i+2 -> new point, against the spoke
    t.edge[2] = base + (i + 1) % 3;
    t.fwd[2] = true;  // new point -> corner i+1, along the spoke
    tris_.push_back(t);
  }
}

Triangulation Triangulation::from_data(SurfaceSig sig, int num_edges,
                                       const std::vector<std::array<int, 3>>& edges,
                                       const std::vector<std::array<bool, 3>>& fwd) {
  if (edges.size() != fwd.size()) throw Error("from_data: shape mismatch");
  Triangulation tr;
  tr.sig_ = sig;
  tr.num_edges_ = num_edges;
  for (size_t t = 0; t < edges.size(); ++t) {
    Tri x;
    x.edge = edges[t];
    for (int s = 0; s < 3; ++s) x.fwd[s] = fwd[t][s];
    tr.tris_.push_back(x);
  }
  tr.finalize();
  return tr;
}

Triangulation Triangulation::standard(SurfaceSig sig) {
  if (sig.genus < 0 || sig.holes < 0) throw UnsupportedSurface("negative signature");
  if (!sig.has_essential_curves())
    throw UnsupportedSurface("no essential curves on " + sig.str());
  // With a single interior marked point, curves on a closed surface of genus
  // at least two that differ by pushing across the point get distinct
  // coordinates, so coordinate identity would be finer than isotopy on S.
  // The closed torus is unaffected: slopes classify with or without the
  // point. Reject rather than build a complex that is not D(S).
  if (sig.holes == 0 && sig.genus >= 2)
    throw UnsupportedSurface("classes on closed " + sig.str() +
                             " are not canonical in marked-point coordinates");
  Triangulation tr;
  if (sig.genus == 0) {
    tr = punctured_sphere(sig.holes);
  } else {
    tr = genus_polygon(sig.genus);
    tr.sig_ = sig;
    for (int extra = (sig.holes == 0 ? 1 : sig.holes); extra > 1; --extra) tr.subdivide_last();
  }
  tr.finalize();
  return tr;
}

std::vector<Triangulation::Symmetry> Triangulation::symmetries() const {
  std::vector<Symmetry> out;
  int nt = triangles();
  for (int seed_tri = 0; seed_tri < nt; ++seed_tri) {
    for (int seed_rot = 0; seed_rot < 3; ++seed_rot) {
      for (int refl = 0; refl < 2; ++refl) {
        Symmetry sym;
        sym.tri_image.assign(nt, -1);
        sym.rot.assign(nt, 0);
        sym.reflected = refl;
        sym.tri_image[0] = seed_tri;
        sym.rot[0] = seed_rot;
        std::vector<int> queue{0};
        bool ok = true;
        while (!queue.empty() && ok) {
          int t = queue.back();
          queue.pop_back();
          for (int s = 0; s < 3 && ok; ++s) {
            Side nb = opposite_side(t, s);
            Side img_side{sym.tri_image[t], sym.image_slot(t, s)};
            Side img_nb = opposite_side(img_side.tri, img_side.slot);
            int want_rot = refl ? (img_nb.slot + nb.slot) % 3
                                : ((img_nb.slot - nb.slot) % 3 + 3) % 3;
            if (sym.tri_image[nb.tri] < 0) {
              sym.tri_image[nb.tri] = img_nb.tri;
              sym.rot[nb.tri] = want_rot;
              queue.push_back(nb.tri);
            } else if (sym.tri_image[nb.tri] != img_nb.tri || sym.rot[nb.tri] != want_rot) {
              ok = false;
            }
          }
        }
        if (!ok) continue;
        // must be a bijection on triangles
        std::vector<char> hit(nt, 0);
        for (int t = 0; t < nt && ok; ++t) {
          if (sym.tri_image[t] < 0 || hit[sym.tri_image[t]]) ok = false;
          else hit[sym.tri_image[t]] = 1;
        }
        if (!ok) continue;
        sym.edge_perm.assign(edges(), -1);
        for (int t = 0; t < nt && ok; ++t)
          for (int s = 0; s < 3 && ok; ++s) {
            int e = edge_at(t, s);
            int ie = edge_at(sym.tri_image[t], sym.image_slot(t, s));
            if (sym.edge_perm[e] < 0) sym.edge_perm[e] = ie;
            else if (sym.edge_perm[e] != ie) ok = false;
          }
        if (!ok) continue;
        sym.vertex_perm.assign(marked_points(), -1);
        for (int t = 0; t < nt && ok; ++t)
          for (int c = 0; c < 3 && ok; ++c) {
            int v = corner_vertex(t, c);
            int iv = corner_vertex(sym.tri_image[t], sym.image_slot(t, c));
            if (sym.vertex_perm[v] < 0) sym.vertex_perm[v] = iv;
            else if (sym.vertex_perm[v] != iv) ok = false;
          }
        if (ok) out.push_back(std::move(sym));
      }
    }
  }
  return out;
}

Surface::Surface(SurfaceSig sig) : sig_(sig), tri_(Triangulation::standard(sig)) {}

}  // namespace domcx
