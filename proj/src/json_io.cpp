#include "domcx/json_io.hpp"

#include <set>

namespace domcx {

using nlohmann::json;

namespace {

json label_to_json(const VertexLabel& l) {
  json j;
  if (l.is_curve) {
    j["type"] = "curve";
    j["coords"] = l.curve.coords;
    return j;
  }
  const DomainClass& d = l.domain;
  if (d.annulus) {
    j["type"] = "annulus";
    j["coords"] = d.core;
    return j;
  }
  j["type"] = "piece";
  j["boundary"] = d.boundary;
  json tags = json::array();
  for (auto [bi, side] : d.tags) tags.push_back(json::array({bi, side}));
  j["tags"] = tags;
  j["genus"] = d.genus;
  j["holes"] = d.holes;
  return j;
}

VertexLabel label_from_json(SurfaceSig sig, const json& j) {
  VertexLabel l;
  std::string type = j.at("type").get<std::string>();
  if (type == "curve") {
    l.is_curve = true;
    l.curve.coords = j.at("coords").get<Weights>();
    return l;
  }
  l.domain.sig = sig;
  if (type == "annulus") {
    l.domain.annulus = true;
    l.domain.core = j.at("coords").get<Weights>();
    l.domain.boundary = {l.domain.core};
    return l;
  }
  if (type != "piece") throw Error("bundle_from_json: unknown vertex type " + type);
  l.domain.boundary = j.at("boundary").get<std::vector<Weights>>();
  for (const auto& t : j.at("tags"))
    l.domain.tags.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
  l.domain.genus = j.at("genus").get<int>();
  l.domain.holes = j.at("holes").get<std::vector<int>>();
  return l;
}

}  // namespace

json triangulation_to_json(const Triangulation& tr) {
  json tris = json::array();
  for (int t = 0; t < tr.triangles(); ++t) {
    json edges = json::array(), fwd = json::array(), corners = json::array();
    for (int s = 0; s < 3; ++s) {
      edges.push_back(tr.edge_at(t, s));
      fwd.push_back(tr.forward_at(t, s));
      corners.push_back(tr.corner_vertex(t, s));
    }
    tris.push_back(json{{"edges", edges}, {"fwd", fwd}, {"corners", corners}});
  }
  return json{{"marked_points", tr.marked_points()},
              {"edge_count", tr.edges()},
              {"triangles", tris}};
}

json exchange_set_to_json(const ExchangeSet& e) {
  json pairs = json::array();
  for (const auto& p : e.pairs()) pairs.push_back(json::array({p.x, p.y}));
  return json{{"pairs", pairs}};
}

json perm_group_to_json(const PermGroup& g) {
  json elems = json::array();
  for (const auto& m : g.elements()) elems.push_back(m);
  return json{{"order", g.order()}, {"generator_indices", g.generator_indices()},
              {"elements", elems}};
}

json bundle_to_json(const ComplexBundle& bundle) {
  json vertices = json::array();
  for (int v = 0; v < bundle.complex.size(); ++v) {
    json item{{"id", v}, {"label", bundle.complex.label(v)}};
    item["data"] = label_to_json(bundle.labels[v]);
    vertices.push_back(std::move(item));
  }
  json edges = json::array();
  for (auto [a, b] : bundle.complex.edge_list()) edges.push_back(json::array({a, b}));

  json j{{"schema", "domcx.bundle/1"},
         {"kind", std::string(1, bundle.kind)},
         {"surface", json::array({bundle.sig.genus, bundle.sig.holes})},
         {"W", bundle.weight},
         {"connected", bundle.connected},
         {"triangulation", triangulation_to_json(bundle.surface->tri())},
         {"vertices", vertices},
         {"edges", edges}};
  if (bundle.kind == 'D') {
    json bip = json::array();
    for (auto [a, b] : bundle.biperipheral_pairs) bip.push_back(json::array({a, b}));
    j["biperipheral_edges"] = bip;
    j["biperipheral_vertex_disjoint"] = bundle.biperipheral_vertex_disjoint;
    j["projection"] = bundle.projection;
    j["d2_vertices"] = bundle.d2_ids;
  }
  return j;
}

ComplexBundle bundle_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "domcx.bundle/1")
    throw Error("bundle_from_json: not a domcx.bundle/1 file");
  ComplexBundle bundle;
  std::string kind = j.at("kind").get<std::string>();
  if (kind != "C" && kind != "D" && kind != "2")
    throw Error("bundle_from_json: unknown kind " + kind);
  bundle.kind = kind[0];
  auto surf = j.at("surface");
  bundle.sig = {surf.at(0).get<int>(), surf.at(1).get<int>()};
  bundle.weight = j.at("W").get<int>();
  bundle.connected = j.value("connected", false);
  bundle.surface = std::make_shared<Surface>(bundle.sig);

  const json& vertices = j.at("vertices");
  std::vector<std::string> names;
  for (size_t v = 0; v < vertices.size(); ++v) {
    const json& item = vertices.at(v);
    if (item.at("id").get<int>() != static_cast<int>(v))
      throw Error("bundle_from_json: vertex ids must be dense and ordered");
    names.push_back(item.at("label").get<std::string>());
    bundle.labels.push_back(label_from_json(bundle.sig, item.at("data")));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  bundle.complex =
      FlagComplex::from_graph(static_cast<int>(vertices.size()), edges, std::move(names));

  if (bundle.kind == 'D') {
    rebuild_d_structure(bundle);
    // strict parse: stored structure must agree with the derived one
    std::vector<std::pair<int, int>> bip;
    for (const auto& p : j.at("biperipheral_edges"))
      bip.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    if (bip != bundle.biperipheral_pairs)
      throw Error("bundle_from_json: biperipheral edges disagree with labels");
    if (j.at("projection").get<std::vector<int>>() != bundle.projection)
      throw Error("bundle_from_json: projection disagrees with labels");
    if (j.at("d2_vertices").get<std::vector<int>>() != bundle.d2_ids)
      throw Error("bundle_from_json: d2 vertex list disagrees with labels");
  }
  return bundle;
}

std::string bundle_to_dot(const ComplexBundle& bundle) {
  std::string out = "graph domcx {\n";
  for (int v = 0; v < bundle.complex.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + bundle.complex.label(v) + "\"];\n";
  for (auto [a, b] : bundle.complex.edge_list())
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace domcx
