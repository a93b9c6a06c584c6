#include "domcx/curves.hpp"

#include <algorithm>
#include <map>

namespace domcx {

Weights add_weights(const Weights& a, const Weights& b) {
  if (a.size() != b.size()) throw Error("add_weights: size mismatch");
  Weights r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool admissible(const Triangulation& tr, const Weights& w) {
  if (static_cast<int>(w.size()) != tr.edges()) throw Error("admissible: wrong length");
  for (int v : w)
    if (v < 0) return false;
  for (int t = 0; t < tr.triangles(); ++t) {
    int a = w[tr.edge_at(t, 0)], b = w[tr.edge_at(t, 1)], c = w[tr.edge_at(t, 2)];
    if ((a + b + c) % 2 != 0) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
  }
  return true;
}

int corner_count(const Triangulation& tr, const Weights& w, int t, int c) {
  int a = w[tr.edge_at(t, c)];
  int b = w[tr.edge_at(t, (c + 1) % 3)];
  int d = w[tr.edge_at(t, (c + 2) % 3)];
  return (b + d - a) / 2;
}

namespace {

struct State {
  int tri, slot, pos;
  bool operator==(const State& o) const { return tri == o.tri && slot == o.slot && pos == o.pos; }
};

}  // namespace

TraceResult trace(const Triangulation& tr, const Weights& w) {
  if (!admissible(tr, w)) throw Error("trace: inadmissible weights");
  TraceResult res;
  res.point_copy.resize(tr.edges());
  for (int e = 0; e < tr.edges(); ++e) res.point_copy[e].assign(w[e], -1);

  auto local_pos = [&](int t, int s, int intrinsic) {
    int we = w[tr.edge_at(t, s)];
    return tr.forward_at(t, s) ? intrinsic : we - 1 - intrinsic;
  };
  auto intrinsic_pos = [&](int t, int s, int local) {
    int we = w[tr.edge_at(t, s)];
    return tr.forward_at(t, s) ? local : we - 1 - local;
  };

  for (int e0 = 0; e0 < tr.edges(); ++e0) {
    for (int i0 = 0; i0 < w[e0]; ++i0) {
      if (res.point_copy[e0][i0] >= 0) continue;
      int copy = res.copies++;
      Triangulation::Side start_side = tr.side(e0, 0);
      State start{start_side.tri, start_side.slot, local_pos(start_side.tri, start_side.slot, i0)};
      res.point_copy[e0][i0] = copy;
      Weights coords(tr.edges(), 0);
      coords[e0]++;
      std::vector<ArcStep> arcs;
      std::vector<TraceState> states;
      std::vector<std::pair<int, int>> crossings;
      State cur = start;
      while (true) {
        states.push_back({cur.tri, cur.slot, cur.pos});
        // corner arc inside cur.tri
        int t = cur.tri, s = cur.slot, p = cur.pos;
        int c_next = corner_count(tr, w, t, (s + 1) % 3);
        int corner, depth, s2;
        bool fwd_dir;
        if (p < c_next) {
          corner = (s + 1) % 3;
          depth = p;
          s2 = (corner + 1) % 3;  // exit via slot corner+1, backward
          fwd_dir = false;
        } else {
          corner = (s + 2) % 3;
          depth = w[tr.edge_at(t, s)] - 1 - p;
          s2 = (corner + 2) % 3;  // exit via slot corner+2, forward
          fwd_dir = true;
        }
        arcs.push_back({t, corner, depth, fwd_dir});
        int p2 = (corner == (s2 + 1) % 3) ? depth : w[tr.edge_at(t, s2)] - 1 - depth;
        // cross the edge at slot s2
        int e2 = tr.edge_at(t, s2);
        int i2 = intrinsic_pos(t, s2, p2);
        crossings.emplace_back(e2, tr.forward_at(t, s2) ? 1 : -1);
        Triangulation::Side other = tr.opposite_side(t, s2);
        State next{other.tri, other.slot, local_pos(other.tri, other.slot, i2)};
        if (next == start) break;
        if (res.point_copy[e2][i2] >= 0) throw Error("trace: internal traversal clash");
        res.point_copy[e2][i2] = copy;
        coords[e2]++;
        cur = next;
      }
      res.copy_coords.push_back(std::move(coords));
      res.copy_arcs.push_back(std::move(arcs));
      res.copy_states.push_back(std::move(states));
      res.copy_crossings.push_back(std::move(crossings));
    }
  }

  // A component encircles a marked point exactly when its coordinates are
  // the link of that point: one crossing per incident edge end.
  std::vector<Weights> link_coords(tr.marked_points(), Weights(tr.edges(), 0));
  for (int e = 0; e < tr.edges(); ++e) {
    auto sd = tr.side(e, 0);
    link_coords[tr.corner_vertex(sd.tri, (sd.slot + 1) % 3)][e] += 1;
    link_coords[tr.corner_vertex(sd.tri, (sd.slot + 2) % 3)][e] += 1;
  }
  for (int c = 0; c < res.copies; ++c) {
    int linking = -1;
    for (int v = 0; v < tr.marked_points(); ++v)
      if (res.copy_coords[c] == link_coords[v]) linking = v;
    res.copy_linking_vertex.push_back(linking);
  }

  // group parallel copies
  std::map<Weights, std::vector<int>> groups;
  for (int c = 0; c < res.copies; ++c) groups[res.copy_coords[c]].push_back(c);
  res.copy_component.assign(res.copies, -1);
  Weights total(tr.edges(), 0);
  for (const auto& [coords, members] : groups) {
    TraceComponent comp;
    comp.coords = coords;
    comp.multiplicity = static_cast<int>(members.size());
    comp.linking_vertex = res.copy_linking_vertex[members[0]];
    for (int m : members) {
      res.copy_component[m] = static_cast<int>(res.components.size());
      if (res.copy_linking_vertex[m] != comp.linking_vertex)
        throw Error("trace: parallel copies disagree on linking");
      total = add_weights(total, res.copy_coords[m]);
    }
    res.components.push_back(std::move(comp));
  }
  if (total != w) throw Error("trace: component coordinates do not sum to the input");
  return res;
}

bool is_essential(const CurveClass& c) { return c.essential(); }

void for_each_admissible(const Triangulation& tr, int bound,
                         const std::function<void(const Weights&)>& fn) {
  int ne = tr.edges();
  // triangles checkable once all three of their edges are assigned
  std::vector<std::vector<int>> ready(ne);
  for (int t = 0; t < tr.triangles(); ++t) {
    int last = std::max({tr.edge_at(t, 0), tr.edge_at(t, 1), tr.edge_at(t, 2)});
    ready[last].push_back(t);
  }
  Weights w(ne, 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == ne) {
      fn(w);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      w[e] = v;
      bool ok = true;
      for (int t : ready[e]) {
        int a = w[tr.edge_at(t, 0)], b = w[tr.edge_at(t, 1)], c = w[tr.edge_at(t, 2)];
        if ((a + b + c) % 2 != 0 || a > b + c || b > a + c || c > a + b) {
          ok = false;
          break;
        }
      }
      if (ok) rec(e + 1);
    }
    w[e] = 0;
  };
  rec(0);
}

std::vector<CurveClass> enumerate_curves(const Surface& s, int bound) {
  std::vector<CurveClass> out;
  for_each_admissible(s.tri(), bound, [&](const Weights& w) {
    bool any = false;
    for (int v : w)
      if (v) any = true;
    if (!any) return;
    TraceResult t = trace(s.tri(), w);
    if (t.copies != 1) return;  // not connected (or a parallel multiple)
    if (t.components[0].vertex_linking()) return;
    out.push_back({w, -1});
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool curves_disjoint(const Surface& s, const Weights& a, const Weights& b) {
  if (a == b) return true;  // parallel copies of one class
  TraceResult t = trace(s.tri(), add_weights(a, b));
  if (t.components.size() != 2) return false;
  const Weights& lo = std::min(a, b);
  const Weights& hi = std::max(a, b);
  return t.components[0].coords == lo && t.components[0].multiplicity == 1 &&
         t.components[1].coords == hi && t.components[1].multiplicity == 1;
}

std::optional<CurveClass> find_distinguishing_curve(const Surface& s,
                                                    const std::vector<Weights>& family,
                                                    int alpha_index, int bound) {
  if (alpha_index < 0 || alpha_index >= static_cast<int>(family.size()))
    throw Error("find_distinguishing_curve: alpha not in the family");
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!curves_disjoint(s, family[i], family[j]))
        throw Error("find_distinguishing_curve: family is not pairwise disjoint");
  for (const CurveClass& g : enumerate_curves(s, bound)) {
    if (curves_disjoint(s, g.coords, family[alpha_index])) continue;
    bool misses_rest = true;
    for (size_t i = 0; i < family.size() && misses_rest; ++i)
      if (static_cast<int>(i) != alpha_index && !curves_disjoint(s, g.coords, family[i]))
        misses_rest = false;
    if (misses_rest) return g;
  }
  return std::nullopt;
}

}  // namespace domcx
