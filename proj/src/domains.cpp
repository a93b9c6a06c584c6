#include "domcx/domains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace domcx {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Region layout inside one triangle: local 0 is the central region, then the
// corner stacks. A region at depth d from corner c (d < corner count) is
// separated from that corner by d arcs; depth = count falls into the center.
struct RegionIndex {
  const Triangulation& tr;
  const Weights& w;
  std::vector<int> base;
  std::vector<std::array<int, 3>> ccount;
  int total = 0;

  RegionIndex(const Triangulation& t, const Weights& ww) : tr(t), w(ww) {
    base.resize(tr.triangles());
    ccount.resize(tr.triangles());
    for (int t2 = 0; t2 < tr.triangles(); ++t2) {
      base[t2] = total;
      for (int c = 0; c < 3; ++c) ccount[t2][c] = corner_count(tr, w, t2, c);
      total += 1 + ccount[t2][0] + ccount[t2][1] + ccount[t2][2];
    }
  }

  int central(int t) const { return base[t]; }
  int corner(int t, int c, int depth) const {
    if (depth >= ccount[t][c]) return central(t);
    int off = 1;
    for (int c2 = 0; c2 < c; ++c2) off += ccount[t][c2];
    return base[t] + off + depth;
  }
  // region touching intrinsic interval q of the edge at (t,s), seen locally
  int of_interval(int t, int s, int q_local) const {
    int c1 = ccount[t][(s + 1) % 3], c2 = ccount[t][(s + 2) % 3];
    int we = w[tr.edge_at(t, s)];
    if (q_local < c1) return corner(t, (s + 1) % 3, q_local);
    if (we - q_local < c2) return corner(t, (s + 2) % 3, we - q_local);
    return central(t);
  }
};

}  // namespace

CutResult cut_system(const Surface& s, const TraceResult& traced) {
  const Triangulation& tr = s.tri();
  if (traced.copies == 0) throw Error("cut_system: empty system");
  for (const auto& comp : traced.components) {
    if (comp.multiplicity != 1) throw Error("cut_system: repeated component");
    if (comp.vertex_linking()) throw Error("cut_system: component is not essential");
  }

  Weights w(tr.edges(), 0);
  for (const auto& cc : traced.copy_coords) w = add_weights(w, cc);

  RegionIndex idx(tr, w);
  UnionFind uf(idx.total);

  auto local_of_intrinsic = [&](int t, int s, int q) {
    return tr.forward_at(t, s) ? q : w[tr.edge_at(t, s)] - q;
  };

  for (int e = 0; e < tr.edges(); ++e) {
    auto a = tr.side(e, 0), b = tr.side(e, 1);
    for (int q = 0; q <= w[e]; ++q)
      uf.unite(idx.of_interval(a.tri, a.slot, local_of_intrinsic(a.tri, a.slot, q)),
               idx.of_interval(b.tri, b.slot, local_of_intrinsic(b.tri, b.slot, q)));
  }

  std::map<int, int> piece_of_root;
  auto piece_of = [&](int region) {
    int r = uf.find(region);
    auto it = piece_of_root.find(r);
    if (it == piece_of_root.end()) it = piece_of_root.emplace(r, piece_of_root.size()).first;
    return it->second;
  };

  CutResult cut;
  cut.comps = traced.copy_coords;

  // sides of each copy, tracked through its canonical traversal
  cut.comp_side_piece.assign(traced.copies, {-1, -1});
  for (int c = 0; c < traced.copies; ++c) {
    int left = -1, right = -1;
    for (const ArcStep& a : traced.copy_arcs[c]) {
      int inner = idx.corner(a.tri, a.corner, a.depth);
      int outer = idx.corner(a.tri, a.corner, a.depth + 1);
      int lf = uf.find(a.forward ? outer : inner);
      int rt = uf.find(a.forward ? inner : outer);
      if (left < 0) left = lf, right = rt;
      if (uf.find(left) != lf || uf.find(right) != rt)
        throw Error("cut_system: inconsistent sides along a component");
    }
    cut.comp_side_piece[c] = {piece_of(left), piece_of(right)};
  }

  // interval -> piece, checking both sides agree
  cut.interval_piece.resize(tr.edges());
  for (int e = 0; e < tr.edges(); ++e) {
    auto a = tr.side(e, 0), b = tr.side(e, 1);
    cut.interval_piece[e].resize(w[e] + 1);
    for (int q = 0; q <= w[e]; ++q) {
      int pa = piece_of(idx.of_interval(a.tri, a.slot, local_of_intrinsic(a.tri, a.slot, q)));
      int pb = piece_of(idx.of_interval(b.tri, b.slot, local_of_intrinsic(b.tri, b.slot, q)));
      if (pa != pb) throw Error("cut_system: interval pieces disagree across an edge");
      cut.interval_piece[e][q] = pa;
    }
  }

  int npieces = static_cast<int>(piece_of_root.size());
  // tally cells per piece for Euler characteristics
  std::vector<int> vtx(npieces, 0), ptcopies(npieces, 0), intervals(npieces, 0),
      arccopies(npieces, 0), regions(npieces, 0);
  std::vector<std::set<int>> hole_sets(npieces);
  std::vector<std::vector<std::pair<int, int>>> tags(npieces);

  for (int r = 0; r < idx.total; ++r) regions[piece_of(r)]++;

  // On closed surfaces the single marked point is a cell-structure artifact,
  // not a hole.
  bool marked_are_holes = s.sig().holes > 0;
  for (int v = 0; v < tr.marked_points(); ++v) {
    int piece = -1;
    for (int t = 0; t < tr.triangles(); ++t)
      for (int c = 0; c < 3; ++c) {
        if (tr.corner_vertex(t, c) != v) continue;
        int p = piece_of(idx.corner(t, c, 0));
        if (piece < 0) piece = p;
        if (p != piece) throw Error("cut_system: marked point split across pieces");
      }
    vtx[piece]++;
    if (marked_are_holes) hole_sets[piece].insert(v);
  }

  for (int e = 0; e < tr.edges(); ++e) {
    for (int q = 0; q <= w[e]; ++q) intervals[cut.interval_piece[e][q]]++;
    for (int i = 0; i < w[e]; ++i) {
      ptcopies[cut.interval_piece[e][i]]++;
      ptcopies[cut.interval_piece[e][i + 1]]++;
    }
  }

  for (int t = 0; t < tr.triangles(); ++t)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < idx.ccount[t][c]; ++k) {
        arccopies[piece_of(idx.corner(t, c, k))]++;
        arccopies[piece_of(idx.corner(t, c, k + 1))]++;
      }

  for (int c = 0; c < traced.copies; ++c) {
    tags[cut.comp_side_piece[c][0]].emplace_back(c, 0);
    tags[cut.comp_side_piece[c][1]].emplace_back(c, 1);
  }

  for (int p = 0; p < npieces; ++p) {
    CutPiece piece;
    piece.holes.assign(hole_sets[p].begin(), hole_sets[p].end());
    piece.tags = tags[p];
    std::sort(piece.tags.begin(), piece.tags.end());
    int chi_cells = (vtx[p] + ptcopies[p]) - (intervals[p] + arccopies[p]) + regions[p];
    int r = static_cast<int>(piece.tags.size());
    int holes = static_cast<int>(piece.holes.size());
    piece.chi_compact = chi_cells - holes;
    int twice_genus = 2 - r - chi_cells;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw Error("cut_system: piece genus computation failed");
    piece.genus = twice_genus / 2;
    if (r == 0) throw Error("cut_system: piece without essential boundary");
    cut.pieces.push_back(std::move(piece));
  }

  // chi conservation: cutting along circles preserves Euler characteristic
  int chi_total = 0;
  for (const auto& p : cut.pieces) chi_total += p.chi_compact;
  if (chi_total != s.sig().euler()) throw Error("cut_system: Euler characteristic leak");

  return cut;
}

CutResult cut_system(const Surface& s, const std::vector<Weights>& comps) {
  if (comps.empty()) throw Error("cut_system: empty system");
  Weights total(s.tri().edges(), 0);
  for (const auto& c : comps) total = add_weights(total, c);
  TraceResult traced = trace(s.tri(), total);
  if (traced.copies != static_cast<int>(comps.size()))
    throw Error("cut_system: comps are not simultaneously realizable");
  std::vector<Weights> sorted_in = comps, sorted_out = traced.copy_coords;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(sorted_out.begin(), sorted_out.end());
  if (sorted_in != sorted_out) throw Error("cut_system: trace does not reproduce the system");
  return cut_system(s, traced);
}

DomainKind DomainClass::kind() const {
  if (annulus) return DomainKind::annulus;
  if (genus == 0 && tags.size() + holes.size() == 3) return DomainKind::pants;
  return DomainKind::nonelementary;
}

const std::vector<Weights>& DomainClass::boundary_classes() const { return boundary; }

bool DomainClass::is_biperipheral_pants() const {
  return kind() == DomainKind::pants && holes.size() == 2;
}

bool DomainClass::is_monoperipheral_pants() const {
  return kind() == DomainKind::pants && holes.size() == 1;
}

int DomainClass::class_multiplicity(const Weights& c) const {
  if (annulus) return core == c ? 2 : 0;
  for (size_t i = 0; i < boundary.size(); ++i)
    if (boundary[i] == c) {
      int m = 0;
      for (auto [bi, side] : tags)
        if (bi == static_cast<int>(i)) ++m;
      return m;
    }
  return 0;
}

std::string DomainClass::describe() const {
  auto coords_str = [](const Weights& w) {
    std::string r = "[";
    for (size_t i = 0; i < w.size(); ++i) r += (i ? "," : "") + std::to_string(w[i]);
    return r + "]";
  };
  if (annulus) return "annulus" + coords_str(core);
  std::string r = "piece g" + std::to_string(genus) + " holes{";
  for (size_t i = 0; i < holes.size(); ++i) r += (i ? "," : "") + std::to_string(holes[i]);
  r += "} bd";
  for (auto [bi, side] : tags) r += std::to_string(bi) + (side ? "R" : "L");
  for (const auto& b : boundary) r += " " + coords_str(b);
  return r;
}

bool DomainClass::operator==(const DomainClass& o) const {
  return annulus == o.annulus && core == o.core && boundary == o.boundary && tags == o.tags &&
         genus == o.genus && holes == o.holes;
}

bool DomainClass::operator<(const DomainClass& o) const {
  auto key = [](const DomainClass& d) {
    return std::tie(d.annulus, d.core, d.boundary, d.tags, d.genus, d.holes);
  };
  return key(*this) < key(o);
}

DomainClass annulus_domain(const Surface& s, const CurveClass& core) {
  if (!core.essential()) throw Error("annulus_domain: core is not essential");
  DomainClass d;
  d.sig = s.sig();
  d.annulus = true;
  d.core = core.coords;
  d.boundary = {core.coords};
  return d;
}

DomainClass domain_from_piece(const Surface& s, const CutResult& cut, int piece_index) {
  const CutPiece& p = cut.pieces.at(piece_index);

  // A complementary annulus (both circles one class) is the same class as
  // the regular neighborhood of its core; collapse to the annulus form.
  if (p.genus == 0 && p.holes.empty() && p.tags.size() == 2 &&
      p.tags[0].first == p.tags[1].first)
    return annulus_domain(s, CurveClass{cut.comps[p.tags[0].first], -1});

  DomainClass d;
  d.sig = s.sig();
  d.genus = p.genus;
  d.holes = p.holes;
  std::set<Weights> classes;
  for (auto [comp, side] : p.tags) classes.insert(cut.comps[comp]);
  d.boundary.assign(classes.begin(), classes.end());
  for (auto [comp, side] : p.tags) {
    int bi = static_cast<int>(std::lower_bound(d.boundary.begin(), d.boundary.end(),
                                               cut.comps[comp]) -
                              d.boundary.begin());
    d.tags.emplace_back(bi, side);
  }
  std::sort(d.tags.begin(), d.tags.end());

  if (d.tags.empty()) throw Error("domain_from_piece: no essential boundary");
  if (d.genus == 0 && d.tags.size() == 1 && d.holes.size() <= 1)
    throw Error("domain_from_piece: piece bounded by an inessential curve");
  return d;
}

namespace {

struct Located {
  bool is_annulus = false;
  int comp = -1;                 // annulus core component index in the cut
  std::vector<char> piece_in;    // pieces belonging to the domain
};

int comp_index_of(const CutResult& cut, const Weights& c) {
  for (size_t i = 0; i < cut.comps.size(); ++i)
    if (cut.comps[i] == c) return static_cast<int>(i);
  throw Error("locate: class missing from the refinement system");
}

// Merge the pieces of the refinement across every curve that is not a
// boundary class of X; the merged groups are the complementary pieces of
// X's own boundary system, and X is the group with X's canonical data.
Located locate_domain(const CutResult& cut, const DomainClass& x) {
  Located loc;
  if (x.annulus) {
    loc.is_annulus = true;
    loc.comp = comp_index_of(cut, x.core);
    return loc;
  }
  int np = static_cast<int>(cut.pieces.size());
  std::set<int> bx;
  for (const auto& b : x.boundary) bx.insert(comp_index_of(cut, b));

  UnionFind uf(np);
  for (size_t c = 0; c < cut.comps.size(); ++c)
    if (!bx.count(static_cast<int>(c)))
      uf.unite(cut.comp_side_piece[c][0], cut.comp_side_piece[c][1]);

  struct Group {
    std::vector<int> members;
    std::set<int> holes;
    std::vector<std::pair<Weights, int>> side_tags;
    int chi = 0;
  };
  std::map<int, Group> groups;
  for (int p = 0; p < np; ++p) {
    Group& g = groups[uf.find(p)];
    g.members.push_back(p);
    g.chi += cut.pieces[p].chi_compact;
    g.holes.insert(cut.pieces[p].holes.begin(), cut.pieces[p].holes.end());
    for (auto [comp, side] : cut.pieces[p].tags)
      if (bx.count(comp)) g.side_tags.emplace_back(cut.comps[comp], side);
  }

  // X's canonical data in the same shape
  std::vector<std::pair<Weights, int>> want_tags;
  for (auto [bi, side] : x.tags) want_tags.emplace_back(x.boundary[bi], side);
  std::sort(want_tags.begin(), want_tags.end());
  std::vector<int> want_holes = x.holes;

  loc.piece_in.assign(np, 0);
  bool found = false;
  for (auto& [root, g] : groups) {
    std::sort(g.side_tags.begin(), g.side_tags.end());
    int r = static_cast<int>(g.side_tags.size());
    int holes = static_cast<int>(g.holes.size());
    int twice_genus = 2 - g.chi - r - holes;
    if (twice_genus < 0 || twice_genus % 2) throw Error("locate: merged genus computation failed");
    std::vector<int> gh(g.holes.begin(), g.holes.end());
    if (g.side_tags == want_tags && gh == want_holes && twice_genus / 2 == x.genus) {
      if (found) throw Error("locate: ambiguous match");
      found = true;
      for (int p : g.members) loc.piece_in[p] = 1;
    }
  }
  if (!found) throw Error("locate: domain not found in refinement");
  return loc;
}

// All boundary classes of both domains, deduplicated and sorted; nullopt-like
// empty return means some cross pair intersects.
bool merged_system(const Surface& s, const DomainClass& x, const DomainClass& y,
                   std::vector<Weights>& out) {
  for (const auto& a : x.boundary_classes())
    for (const auto& b : y.boundary_classes())
      if (!curves_disjoint(s, a, b)) return false;
  std::set<Weights> classes(x.boundary_classes().begin(), x.boundary_classes().end());
  classes.insert(y.boundary_classes().begin(), y.boundary_classes().end());
  out.assign(classes.begin(), classes.end());
  return true;
}

}  // namespace

bool domains_disjoint(const Surface& s, const DomainClass& x, const DomainClass& y) {
  if (x.sig != y.sig || x.sig != s.sig()) throw Error("domains_disjoint: surface mismatch");
  if (x == y) return true;  // parallel copies; the complex never self-joins

  std::vector<Weights> classes;
  if (!merged_system(s, x, y, classes)) return false;
  if (x.annulus && y.annulus) return true;

  CutResult cut = cut_system(s, classes);
  if (x.annulus || y.annulus) {
    const DomainClass& ann = x.annulus ? x : y;
    const DomainClass& dom = x.annulus ? y : x;
    for (const auto& b : dom.boundary)
      if (b == ann.core) return true;  // annulus over a boundary curve slides off
    Located ld = locate_domain(cut, dom);
    int c = comp_index_of(cut, ann.core);
    return !ld.piece_in[cut.comp_side_piece[c][0]];
  }
  Located lx = locate_domain(cut, x);
  Located ly = locate_domain(cut, y);
  for (size_t p = 0; p < lx.piece_in.size(); ++p)
    if (lx.piece_in[p] && ly.piece_in[p]) return false;
  return true;
}

bool subdomain_of(const Surface& s, const DomainClass& inner, const DomainClass& outer) {
  if (inner.sig != outer.sig || inner.sig != s.sig()) throw Error("subdomain_of: surface mismatch");
  if (inner == outer) return false;   // not a proper domain on itself
  if (outer.annulus) return false;    // annuli carry no domains

  std::vector<Weights> classes;
  if (!merged_system(s, inner, outer, classes)) return false;
  CutResult cut = cut_system(s, classes);
  Located lo = locate_domain(cut, outer);

  if (inner.annulus) {
    // must be a curve interior to outer, not parallel to its boundary
    for (const auto& b : outer.boundary)
      if (b == inner.core) return false;
    int c = comp_index_of(cut, inner.core);
    return lo.piece_in[cut.comp_side_piece[c][0]] && lo.piece_in[cut.comp_side_piece[c][1]];
  }
  Located li = locate_domain(cut, inner);
  for (size_t p = 0; p < li.piece_in.size(); ++p)
    if (li.piece_in[p] && !lo.piece_in[p]) return false;
  // A subsurface is its pieces plus the channels of curves interior to it.
  // A channel spanned by `inner` must not be a boundary channel of `outer`,
  // which excludes it.
  std::set<Weights> inner_bd(inner.boundary.begin(), inner.boundary.end());
  std::set<Weights> outer_bd(outer.boundary.begin(), outer.boundary.end());
  for (size_t c = 0; c < cut.comps.size(); ++c) {
    if (inner_bd.count(cut.comps[c])) continue;
    if (li.piece_in[cut.comp_side_piece[c][0]] && li.piece_in[cut.comp_side_piece[c][1]] &&
        outer_bd.count(cut.comps[c]))
      return false;
  }
  return true;
}

std::vector<DomainClass> enumerate_domains(const Surface& s, int bound) {
  std::set<DomainClass> out;
  for (const CurveClass& c : enumerate_curves(s, bound)) out.insert(annulus_domain(s, c));
  for_each_admissible(s.tri(), bound, [&](const Weights& w) {
    bool any = false;
    for (int v : w)
      if (v) any = true;
    if (!any) return;
    TraceResult t = trace(s.tri(), w);
    for (const auto& comp : t.components)
      if (comp.multiplicity != 1 || comp.vertex_linking()) return;
    CutResult cut = cut_system(s, t);
    for (size_t p = 0; p < cut.pieces.size(); ++p)
      out.insert(domain_from_piece(s, cut, static_cast<int>(p)));
  });
  return std::vector<DomainClass>(out.begin(), out.end());
}

}  // namespace domcx
