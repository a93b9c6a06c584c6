#include "domcx/builders.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <mutex>
#include <thread>

namespace domcx {

std::string VertexLabel::text() const {
  if (is_curve) {
    std::string r = "curve[";
    for (size_t i = 0; i < curve.coords.size(); ++i)
      r += (i ? "," : "") + std::to_string(curve.coords[i]);
    return r + "]";
  }
  return domain.describe();
}

int ComplexBundle::vertex_by_curve(const Weights& coords) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].is_curve && labels[i].curve.coords == coords) return static_cast<int>(i);
  return -1;
}

int ComplexBundle::vertex_by_domain(const DomainClass& d) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (!labels[i].is_curve && labels[i].domain == d) return static_cast<int>(i);
  return -1;
}

namespace {

// pairwise predicate over all vertex pairs, split in blocks when threaded
template <typename Pred>
std::vector<std::pair<int, int>> pairwise_edges(int n, int threads, Pred pred) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run_rows = [&](int lo, int hi) {
    try {
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < n; ++j) adj[i][j] = pred(i, j);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  threads = std::max(1, std::min(threads, n));
  if (threads == 1 || n < 16) {
    run_rows(0, n);
  } else {
    std::vector<std::thread> pool;
    int step = (n + threads - 1) / threads;
    for (int b = 0; b < n; b += step)
      pool.emplace_back(run_rows, b, std::min(n, b + step));
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[i][j]) edges.emplace_back(i, j);
  return edges;
}

bool bundle_connected(const FlagComplex& k) {
  int n = k.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : k.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}


}  // namespace

void rebuild_d_structure(ComplexBundle& bundle) {
  // biperipheral pants vertices leave; everything else stays
  std::vector<int> keep;
  for (int v = 0; v < bundle.complex.size(); ++v)
    if (!bundle.labels[v].domain.is_biperipheral_pants()) keep.push_back(v);
  bundle.d2_ids = keep;

  std::map<int, int> new_id;
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);

  auto d2 = std::make_shared<ComplexBundle>();
  d2->sig = bundle.sig;
  d2->weight = bundle.weight;
  d2->kind = '2';
  d2->surface = bundle.surface;
  d2->complex = bundle.complex.induced(keep);
  for (int v : keep) d2->labels.push_back(bundle.labels[v]);
  d2->connected = bundle_connected(d2->complex);

  // biperipheral pairs and the projection
  bundle.biperipheral_pairs.clear();
  std::set<int> used;
  bundle.biperipheral_vertex_disjoint = true;
  for (int v = 0; v < bundle.complex.size(); ++v) {
    const DomainClass& d = bundle.labels[v].domain;
    if (!d.is_biperipheral_pants()) continue;
    DomainClass partner;
    partner.sig = bundle.sig;
    partner.annulus = true;
    partner.core = d.boundary[0];
    partner.boundary = {d.boundary[0]};
    int a = bundle.vertex_by_domain(partner);
    if (a < 0) throw Error("build_D: truncation is not fiber-closed");
    bundle.biperipheral_pairs.emplace_back(std::min(v, a), std::max(v, a));
    if (!used.insert(v).second || !used.insert(a).second)
      bundle.biperipheral_vertex_disjoint = false;
  }
  std::sort(bundle.biperipheral_pairs.begin(), bundle.biperipheral_pairs.end());

  bundle.projection.assign(bundle.complex.size(), -1);
  for (int v = 0; v < bundle.complex.size(); ++v) {
    const DomainClass& d = bundle.labels[v].domain;
    if (d.is_biperipheral_pants()) {
      DomainClass partner;
      partner.sig = bundle.sig;
      partner.annulus = true;
      partner.core = d.boundary[0];
      partner.boundary = {d.boundary[0]};
      bundle.projection[v] = new_id.at(bundle.vertex_by_domain(partner));
    } else {
      bundle.projection[v] = new_id.at(v);
    }
  }
  bundle.d2 = std::move(d2);
}


ComplexBundle build_C(SurfaceSig sig, int weight, int threads) {
  ComplexBundle bundle;
  bundle.sig = sig;
  bundle.weight = weight;
  bundle.kind = 'C';
  bundle.surface = std::make_shared<Surface>(sig);
  auto curves = enumerate_curves(*bundle.surface, weight);
  for (const auto& c : curves) {
    VertexLabel l;
    l.is_curve = true;
    l.curve = c;
    bundle.labels.push_back(std::move(l));
  }
  const Surface& s = *bundle.surface;
  auto edges = pairwise_edges(static_cast<int>(curves.size()), threads, [&](int i, int j) {
    return curves_disjoint(s, curves[i].coords, curves[j].coords);
  });
  std::vector<std::string> names;
  for (const auto& l : bundle.labels) names.push_back(l.text());
  bundle.complex =
      FlagComplex::from_graph(static_cast<int>(curves.size()), edges, std::move(names));
  bundle.connected = bundle_connected(bundle.complex);
  return bundle;
}

ComplexBundle build_D(SurfaceSig sig, int weight, int threads) {
  ComplexBundle bundle;
  bundle.sig = sig;
  bundle.weight = weight;
  bundle.kind = 'D';
  bundle.surface = std::make_shared<Surface>(sig);
  auto domains = enumerate_domains(*bundle.surface, weight);
  for (const auto& d : domains) {
    VertexLabel l;
    l.domain = d;
    bundle.labels.push_back(std::move(l));
  }
  const Surface& s = *bundle.surface;
  auto edges = pairwise_edges(static_cast<int>(domains.size()), threads, [&](int i, int j) {
    return domains_disjoint(s, domains[i], domains[j]);
  });
  std::vector<std::string> names;
  for (const auto& l : bundle.labels) names.push_back(l.text());
  bundle.complex =
      FlagComplex::from_graph(static_cast<int>(domains.size()), edges, std::move(names));
  bundle.connected = bundle_connected(bundle.complex);
  rebuild_d_structure(bundle);
  return bundle;
}

ComplexBundle build_D2(SurfaceSig sig, int weight, int threads) {
  ComplexBundle d = build_D(sig, weight, threads);
  ComplexBundle out = *d.d2;
  return out;
}

ExchangeSet biperipheral_edge_set(const ComplexBundle& d) {
  if (d.kind != 'D') throw Error("biperipheral_edge_set: bundle is not a D truncation");
  if (!d.biperipheral_vertex_disjoint)
    throw Error("biperipheral_edge_set: pairs share vertices (four-holed sphere excluded)");
  return ExchangeSet::from_pairs(d.biperipheral_pairs);
}

const std::vector<int>& project_map(const ComplexBundle& d) {
  if (d.kind != 'D') throw Error("project_map: bundle is not a D truncation");
  return d.projection;
}

VertexMap push_forward(const ComplexBundle& d, const VertexMap& phi) {
  if (d.kind != 'D' || !d.d2) throw Error("push_forward: bundle is not a D truncation");
  if (!d.complex.is_automorphism(phi)) throw Error("push_forward: phi is not an automorphism");
  // phi must permute the biperipheral edge set, else no pushforward exists
  std::set<std::pair<int, int>> pairs(d.biperipheral_pairs.begin(), d.biperipheral_pairs.end());
  for (auto [x, y] : d.biperipheral_pairs) {
    int a = phi[x], b = phi[y];
    if (!pairs.count({std::min(a, b), std::max(a, b)}))
      throw Error("push_forward: phi does not preserve the biperipheral edges");
  }
  VertexMap star(d.d2_ids.size());
  for (size_t i = 0; i < d.d2_ids.size(); ++i) star[i] = d.projection[phi[d.d2_ids[i]]];
  if (!d.d2->complex.is_automorphism(star))
    throw Error("push_forward: induced map is not an automorphism of the truncated complex");
  for (int v = 0; v < d.complex.size(); ++v)
    if (star[d.projection[v]] != d.projection[phi[v]])
      throw Error("push_forward: projection does not intertwine");
  return star;
}

namespace {

// Whether the symmetry preserves the intrinsic direction of an edge. A
// reflection reverses every slot traversal (corner s+1 maps to corner S+2),
// so the forward flags compare through the chirality.
bool direction_preserved(const Triangulation& tr, const Triangulation::Symmetry& sym, int e) {
  Triangulation::Side a = tr.side(e, 0);
  int it = sym.tri_image[a.tri], is = sym.image_slot(a.tri, a.slot);
  return tr.forward_at(it, is) == (tr.forward_at(a.tri, a.slot) != sym.reflected);
}

// Whether the canonical left/right labels of a curve class swap under the
// symmetry: the image of the canonical start state is compared against the
// canonical traversal of the image curve through the same point, and a
// direction reversal composes with the chirality of the symmetry.
bool side_flip_under(const Surface& s, const Triangulation::Symmetry& sym, const Weights& c,
                     const Weights& image) {
  const Triangulation& tr = s.tri();
  int e0 = -1;
  for (int e = 0; e < tr.edges(); ++e)
    if (c[e] > 0) { e0 = e; break; }
  if (e0 < 0) throw Error("side_flip_under: empty curve");
  Triangulation::Side start = tr.side(e0, 0);
  int img_tri = sym.tri_image[start.tri];
  int img_slot = sym.image_slot(start.tri, start.slot);
  int img_edge = sym.edge_perm[e0];
  int img_idx = direction_preserved(tr, sym, e0) ? 0 : c[e0] - 1;

  TraceResult t = trace(tr, image);
  if (t.copies != 1) throw Error("side_flip_under: image is not a connected curve");
  bool reversed = false, located = false;
  for (const TraceState& st : t.copy_states[0]) {
    int e = tr.edge_at(st.tri, st.slot);
    int idx = tr.forward_at(st.tri, st.slot) ? st.pos : image[e] - 1 - st.pos;
    if (e == img_edge && idx == img_idx) {
      reversed = !(st.tri == img_tri && st.slot == img_slot);
      located = true;
      break;
    }
  }
  if (!located) throw Error("side_flip_under: image start not crossed");
  return sym.reflected != reversed;
}

DomainClass transport_domain(const Surface& s, const Triangulation::Symmetry& sym,
                             const DomainClass& d) {
  auto permute = [&](const Weights& w) {
    Weights out(w.size());
    for (size_t e = 0; e < w.size(); ++e) out[sym.edge_perm[e]] = w[e];
    return out;
  };
  if (d.annulus) return annulus_domain(s, CurveClass{permute(d.core), -1});

  std::vector<Weights> image_sys;
  for (const auto& b : d.boundary) image_sys.push_back(permute(b));
  std::sort(image_sys.begin(), image_sys.end());
  CutResult cut = cut_system(s, image_sys);

  // transported boundary circles with their sides; a piece of the image cut
  // is determined by this multiset alone
  std::vector<std::pair<Weights, int>> want_tags;
  for (auto [bi, side] : d.tags) {
    Weights img = permute(d.boundary[bi]);
    int flip = side_flip_under(s, sym, d.boundary[bi], img) ? 1 : 0;
    want_tags.emplace_back(img, side ^ flip);
  }
  std::sort(want_tags.begin(), want_tags.end());

  std::vector<int> want_holes;
  for (int h : d.holes) want_holes.push_back(sym.vertex_perm[h]);
  std::sort(want_holes.begin(), want_holes.end());

  int found = -1;
  for (size_t p = 0; p < cut.pieces.size(); ++p) {
    std::vector<std::pair<Weights, int>> tags;
    for (auto [comp, side] : cut.pieces[p].tags) tags.emplace_back(cut.comps[comp], side);
    std::sort(tags.begin(), tags.end());
    if (tags != want_tags) continue;
    if (found >= 0) throw Error("transport_domain: ambiguous image piece");
    found = static_cast<int>(p);
  }
  if (found < 0) throw Error("transport_domain: image piece not found");
  DomainClass out = domain_from_piece(s, cut, found);
  if (out.genus != d.genus || static_cast<int>(out.holes.size()) != static_cast<int>(want_holes.size()))
    throw Error("transport_domain: image piece shape mismatch");
  if (!out.annulus && out.holes != want_holes)
    throw Error("transport_domain: image piece holes mismatch");
  return out;
}

}  // namespace

std::vector<VertexMap> geometric_automorphisms(const ComplexBundle& bundle) {
  const Surface& s = *bundle.surface;
  std::vector<VertexMap> out;
  for (const auto& sym : s.tri().symmetries()) {
    VertexMap m(bundle.complex.size());
    bool ok = true;
    for (int v = 0; v < bundle.complex.size() && ok; ++v) {
      int image = -1;
      if (bundle.labels[v].is_curve) {
        Weights w(bundle.labels[v].curve.coords.size());
        for (size_t e = 0; e < w.size(); ++e)
          w[sym.edge_perm[e]] = bundle.labels[v].curve.coords[e];
        image = bundle.vertex_by_curve(w);
      } else {
        image = bundle.vertex_by_domain(transport_domain(s, sym, bundle.labels[v].domain));
      }
      if (image < 0) ok = false;
      m[v] = image;
    }
    if (!ok) throw Error("geometric_automorphisms: symmetry leaves the truncation");
    if (!bundle.complex.is_automorphism(m))
      throw Error("geometric_automorphisms: symmetry image is not an automorphism");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace domcx
