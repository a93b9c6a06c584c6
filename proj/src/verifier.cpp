#include "domcx/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <set>

namespace domcx {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_annular(const ComplexBundle& b, int v) {
  return !b.labels[v].is_curve && b.labels[v].domain.annulus;
}

json pair_payload(const ComplexBundle& b, int x, int y) {
  return json{{"x", x},
              {"y", y},
              {"x_label", b.labels[x].text()},
              {"y_label", b.labels[y].text()}};
}

// number of annular codomains joining X and Y: matched boundary circles
// counted class by class
int join_count(const DomainClass& x, const DomainClass& y) {
  std::set<Weights> classes(x.boundary_classes().begin(), x.boundary_classes().end());
  int joins = 0;
  for (const Weights& c : classes)
    joins += std::min(x.class_multiplicity(c), y.class_multiplicity(c));
  return joins;
}

// X and Y fill the surface: cutting along their common boundary system gives
// exactly the two of them
bool fills_with(const Surface& s, const DomainClass& x, const DomainClass& y) {
  if (x.annulus || y.annulus || x.boundary != y.boundary) return false;
  CutResult cut = cut_system(s, x.boundary);
  if (cut.pieces.size() != 2) return false;
  std::set<DomainClass> got;
  for (size_t p = 0; p < cut.pieces.size(); ++p) got.insert(domain_from_piece(s, cut, p));
  return got == std::set<DomainClass>{x, y};
}

bool nonperipheral_pants(const DomainClass& d) {
  return d.kind() == DomainKind::pants && d.holes.empty();
}

// Searches annuli over curves up to a higher weight bound for a witness that
// X and Y are not geometrically star-related: disjoint from X, crossing Y.
// A found witness certifies a containment inside the truncation as an
// artifact of the bound.
class ArtifactBreaker {
 public:
  ArtifactBreaker(const Surface& s, int bound) : s_(s), bound_(bound) {}

  std::optional<Weights> try_break(const DomainClass& x, const DomainClass& y,
                                   bool exclude_equal_x) {
    if (curves_.empty()) curves_ = enumerate_curves(s_, bound_);
    for (const CurveClass& g : curves_) {
      DomainClass z = annulus_domain(s_, g);
      if (exclude_equal_x && z == x) continue;
      if (domains_disjoint(s_, z, x) && !domains_disjoint(s_, z, y)) return g.coords;
    }
    return std::nullopt;
  }

 private:
  const Surface& s_;
  int bound_;
  std::vector<CurveClass> curves_;
};

json breaker_summary(ArtifactBreaker& breaker, const ComplexBundle& d,
                     const std::vector<std::pair<int, int>>& suspects, bool exclude_equal_x,
                     json& unresolved) {
  json resolved = json::array();
  for (auto [x, y] : suspects) {
    auto witness = breaker.try_break(d.labels[x].domain, d.labels[y].domain, exclude_equal_x);
    json item = pair_payload(d, x, y);
    if (witness) {
      item["witness_core"] = *witness;
      resolved.push_back(std::move(item));
    } else {
      item["note"] = "no distinguishing witness found within the search bound";
      unresolved.push_back(std::move(item));
    }
  }
  return resolved;
}

// The seven ordered configurations of disjoint domains with equal stars.
std::string equal_star_case(const Surface& s, const DomainClass& x, const DomainClass& y) {
  SurfaceSig sig = s.sig();
  if (x.is_biperipheral_pants() && y.annulus && y.core == x.boundary[0]) return "a";
  if (x.annulus && y.is_biperipheral_pants() && x.core == y.boundary[0]) return "b";
  if (sig == SurfaceSig{0, 4} && x.is_biperipheral_pants() && y.is_biperipheral_pants() &&
      x.boundary == y.boundary)
    return "c";
  if (sig == SurfaceSig{1, 2} && x.is_monoperipheral_pants() && y.is_monoperipheral_pants() &&
      x.boundary.size() == 2 && fills_with(s, x, y))
    return "d";
  if (sig == SurfaceSig{2, 0} && nonperipheral_pants(x) && nonperipheral_pants(y) &&
      x.boundary.size() == 3 && fills_with(s, x, y))
    return "e";
  if (sig == SurfaceSig{1, 1} && x.is_monoperipheral_pants() && y.annulus &&
      x.boundary.size() == 1 && x.boundary[0] == y.core)
    return "f";
  if (sig == SurfaceSig{1, 1} && y.is_monoperipheral_pants() && x.annulus &&
      y.boundary.size() == 1 && y.boundary[0] == x.core)
    return "g";
  return "";
}

// Ordered configurations of disjoint domains with St(x) contained in St(y).
std::string nested_star_case(const DomainClass& x, const DomainClass& y) {
  int joins = join_count(x, y);
  if (!x.annulus && y.annulus && joins == 1) return "a";
  if (!x.annulus && y.annulus && joins == 2) return "b";
  if (y.is_biperipheral_pants() && joins == 1) return "c";
  if (y.is_monoperipheral_pants() && joins == 2) return "d";
  if (nonperipheral_pants(y) && joins == 3) return "e";
  return "";
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::no_counterexample: return "no-counterexample-within-bound";
    case CheckStatus::counterexample: return "counterexample";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::vector<CheckReport> check_annular_characterization(const ComplexBundle& bundle) {
  const ComplexBundle* d2 = nullptr;
  if (bundle.kind == '2') d2 = &bundle;
  else if (bundle.kind == 'D' && bundle.d2) d2 = bundle.d2.get();
  else throw Error("check_annular_characterization: needs a D or D2 bundle");

  std::vector<CheckReport> out;
  if (bundle.sig == SurfaceSig{1, 1}) {
    out.push_back({"annular.nonannular_dominated", CheckStatus::skipped,
                   json{{"reason", "torus with one hole excluded"}}, 0.0});
    out.push_back({"annular.annular_undominated", CheckStatus::skipped,
                   json{{"reason", "torus with one hole excluded"}}, 0.0});
    return out;
  }

  const FlagComplex& k = d2->complex;
  int n = k.size();

  {
    // every non-annular vertex is star-dominated by an annulus over one of
    // its boundary classes; the witness is inside the truncation
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "annular.nonannular_dominated";
    r.status = CheckStatus::verified;
    int checked = 0;
    json failures = json::array();
    for (int x = 0; x < n; ++x) {
      if (is_annular(*d2, x)) continue;
      ++checked;
      bool dominated = false;
      for (const Weights& b : d2->labels[x].domain.boundary_classes()) {
        DomainClass ann;
        ann.sig = d2->sig;
        ann.annulus = true;
        ann.core = b;
        ann.boundary = {b};
        int y = d2->vertex_by_domain(ann);
        if (y >= 0 && y != x && k.star_subset(x, y)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        r.status = CheckStatus::counterexample;
        failures.push_back(json{{"x", x}, {"x_label", d2->labels[x].text()}});
      }
    }
    r.details = json{{"nonannular_vertices", checked}, {"failures", failures}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    // annular vertices are star-dominated by nothing; report coverage of
    // the distinguishing-vertex search
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "annular.annular_undominated";
    int total = 0, in_bound = 0;
    std::vector<std::pair<int, int>> suspects;
    for (int x = 0; x < n; ++x) {
      if (!is_annular(*d2, x)) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        ++total;
        if (!k.star_subset(x, y)) ++in_bound;
        else suspects.emplace_back(x, y);
      }
    }
    ArtifactBreaker breaker(*bundle.surface, d2->weight + 2);
    json unresolved = json::array();
    json resolved = breaker_summary(breaker, *d2, suspects, false, unresolved);
    r.status = (in_bound == total) ? CheckStatus::verified : CheckStatus::no_counterexample;
    r.details = json{{"pairs", total}, {"with_distinguishing_vertex_in_bound", in_bound},
                     {"suspects_resolved_as_artifacts", resolved},
                     {"suspects_unresolved", unresolved}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> check_ann_link_suite(const ComplexBundle& d) {
  if (d.kind != 'D') throw Error("check_ann_link_suite: needs a D bundle");
  const FlagComplex& k = d.complex;
  const Surface& s = *d.surface;
  int n = k.size();

  std::vector<std::vector<int>> ann(n);
  for (int x = 0; x < n; ++x)
    for (int z : k.link0(x))
      if (is_annular(d, z)) ann[x].push_back(z);
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  bool small_excluded = d.sig == SurfaceSig{0, 4} ||
                        (d.sig.genus == 1 && d.sig.holes <= 1);

  ArtifactBreaker breaker(s, d.weight + 2);
  // equal links need a witness in one of the two directions
  auto break_equal = [&](int x, int y) -> std::optional<Weights> {
    auto w = breaker.try_break(d.labels[x].domain, d.labels[y].domain, true);
    if (!w) w = breaker.try_break(d.labels[y].domain, d.labels[x].domain, true);
    return w;
  };

  std::vector<CheckReport> out;

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "annlink.ann2_equality_only_trivial";
    if (small_excluded) {
      r.status = CheckStatus::skipped;
      r.details = json{{"reason", "sphere with four holes / torus with at most one hole"}};
    } else {
      json resolved = json::array(), unresolved = json::array();
      for (int x = 0; x < n; ++x) {
        if (!is_annular(d, x)) continue;
        for (int y = 0; y < n; ++y) {
          if (y == x || ann[x] != ann[y]) continue;
          json item = pair_payload(d, x, y);
          if (auto w = break_equal(x, y)) {
            item["witness_core"] = *w;
            resolved.push_back(std::move(item));
          } else {
            unresolved.push_back(std::move(item));
          }
        }
      }
      r.status = CheckStatus::no_counterexample;
      r.details = json{{"equal_pairs_resolved_as_artifacts", resolved},
                       {"equal_pairs_unresolved", unresolved}};
    }
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    // annular x: Ann(x) inside Ann(y) only for y equal or across a
    // biperipheral configuration
    auto t0 = Clock::now();
    CheckReport ifdir, onlyif;
    ifdir.id = "annlink.nestedann3_if";
    onlyif.id = "annlink.nestedann3_onlyif";
    if (small_excluded) {
      ifdir.status = onlyif.status = CheckStatus::skipped;
      ifdir.details = onlyif.details =
          json{{"reason", "sphere with four holes / torus with at most one hole"}};
    } else {
      ifdir.status = CheckStatus::verified;
      json bad = json::array();
      int configured = 0;
      for (auto [p, a] : d.biperipheral_pairs) {
        int pants = d.labels[p].domain.is_biperipheral_pants() ? p : a;
        int annv = pants == p ? a : p;
        ++configured;
        if (!subset(ann[annv], ann[pants])) {
          ifdir.status = CheckStatus::counterexample;
          bad.push_back(pair_payload(d, annv, pants));
        }
      }
      ifdir.details = json{{"configured_pairs", configured}, {"failures", bad}};

      std::vector<std::pair<int, int>> suspects;
      for (int x = 0; x < n; ++x) {
        if (!is_annular(d, x)) continue;
        for (int y = 0; y < n; ++y) {
          if (x == y || !subset(ann[x], ann[y])) continue;
          const DomainClass& yd = d.labels[y].domain;
          bool config = yd.is_biperipheral_pants() && d.labels[x].domain.core == yd.boundary[0];
          if (!config) suspects.emplace_back(x, y);
        }
      }
      json unresolved = json::array();
      json resolved = breaker_summary(breaker, d, suspects, true, unresolved);
      onlyif.status = CheckStatus::no_counterexample;
      onlyif.details = json{{"suspects_resolved_as_artifacts", resolved},
                            {"suspects_unresolved", unresolved}};
    }
    ifdir.ms = onlyif.ms = ms_since(t0);
    out.push_back(std::move(ifdir));
    out.push_back(std::move(onlyif));
  }

  {
    // adjacent x,y: Ann containment iff y is a pants joined to x along all
    // of its essential boundary
    auto t0 = Clock::now();
    CheckReport ifdir, onlyif;
    ifdir.id = "annlink.nestedann4_if";
    onlyif.id = "annlink.nestedann4_onlyif";
    ifdir.status = CheckStatus::verified;
    onlyif.status = CheckStatus::no_counterexample;
    json bad = json::array();
    std::vector<std::pair<int, int>> suspects;
    int configured = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || !k.adjacent(x, y)) continue;
        const DomainClass& xd = d.labels[x].domain;
        const DomainClass& yd = d.labels[y].domain;
        bool config = false;
        if (yd.kind() == DomainKind::pants) {
          config = true;
          for (const Weights& c : yd.boundary)
            if (xd.class_multiplicity(c) == 0) config = false;
        }
        bool contained = subset(ann[x], ann[y]);
        if (config) {
          ++configured;
          if (!contained) {
            ifdir.status = CheckStatus::counterexample;
            bad.push_back(pair_payload(d, x, y));
          }
        } else if (contained) {
          suspects.emplace_back(x, y);
        }
      }
    ifdir.details = json{{"configured_pairs", configured}, {"failures", bad}};
    json unresolved = json::array();
    json resolved = breaker_summary(breaker, d, suspects, true, unresolved);
    onlyif.details = json{{"suspects_resolved_as_artifacts", resolved},
                          {"suspects_unresolved", unresolved}};
    ifdir.ms = onlyif.ms = ms_since(t0);
    out.push_back(std::move(ifdir));
    out.push_back(std::move(onlyif));
  }

  {
    // non-adjacent x,y: Ann containment iff y nests inside x
    auto t0 = Clock::now();
    CheckReport ifdir, onlyif;
    ifdir.id = "annlink.nestedann5_if";
    onlyif.id = "annlink.nestedann5_onlyif";
    if (small_excluded) {
      ifdir.status = onlyif.status = CheckStatus::skipped;
      ifdir.details = onlyif.details =
          json{{"reason", "sphere with four holes / torus with at most one hole"}};
    } else {
      ifdir.status = CheckStatus::verified;
      onlyif.status = CheckStatus::no_counterexample;
      json bad = json::array();
      std::vector<std::pair<int, int>> suspects;
      int configured = 0;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (x == y || k.adjacent(x, y)) continue;
          bool nests = subdomain_of(s, d.labels[y].domain, d.labels[x].domain);
          bool contained = subset(ann[x], ann[y]);
          if (nests) {
            ++configured;
            if (!contained) {
              ifdir.status = CheckStatus::counterexample;
              bad.push_back(pair_payload(d, x, y));
            }
          } else if (contained) {
            suspects.emplace_back(x, y);
          }
        }
      ifdir.details = json{{"configured_pairs", configured}, {"failures", bad}};
      json unresolved = json::array();
      json resolved = breaker_summary(breaker, d, suspects, true, unresolved);
      onlyif.details = json{{"suspects_resolved_as_artifacts", resolved},
                            {"suspects_unresolved", unresolved}};
    }
    ifdir.ms = onlyif.ms = ms_since(t0);
    out.push_back(std::move(ifdir));
    out.push_back(std::move(onlyif));
  }

  {
    // Ann(x) = Ann(y) for distinct vertices only in the two filling-pants
    // configurations
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "annlink.ann3_equal_classified";
    if (small_excluded) {
      r.status = CheckStatus::skipped;
      r.details = json{{"reason", "sphere with four holes / torus with at most one hole"}};
    } else {
      r.status = CheckStatus::no_counterexample;
      json cases = json::array(), bad = json::array();
      json resolved = json::array(), unresolved = json::array();
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const DomainClass& xd = d.labels[x].domain;
          const DomainClass& yd = d.labels[y].domain;
          bool config_a = d.sig == SurfaceSig{1, 2} && xd.is_monoperipheral_pants() &&
                          yd.is_monoperipheral_pants() && xd.boundary.size() == 2 &&
                          fills_with(s, xd, yd);
          bool config_b = d.sig == SurfaceSig{2, 0} && nonperipheral_pants(xd) &&
                          nonperipheral_pants(yd) && xd.boundary.size() == 3 &&
                          fills_with(s, xd, yd);
          bool equal = ann[x] == ann[y];
          if (config_a || config_b) {
            json item = pair_payload(d, x, y);
            item["case"] = config_a ? "a" : "b";
            cases.push_back(item);
            if (!equal) {
              r.status = CheckStatus::counterexample;
              bad.push_back(pair_payload(d, x, y));
            }
          } else if (equal) {
            json item = pair_payload(d, x, y);
            if (auto w = break_equal(x, y)) {
              item["witness_core"] = *w;
              resolved.push_back(std::move(item));
            } else {
              unresolved.push_back(std::move(item));
            }
          }
        }
      r.details = json{{"configured_pairs", cases}, {"failures", bad},
                       {"equalities_resolved_as_artifacts", resolved},
                       {"equalities_unresolved", unresolved}};
    }
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckReport> check_star_suite(const ComplexBundle& d) {
  if (d.kind != 'D') throw Error("check_star_suite: needs a D bundle");
  const FlagComplex& k = d.complex;
  const Surface& s = *d.surface;
  int n = k.size();
  std::vector<CheckReport> out;
  ArtifactBreaker breaker(s, d.weight + 2);

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "star.equal_classified";
    r.status = CheckStatus::verified;
    json found = json::array(), bad = json::array();
    json resolved = json::array(), unresolved = json::array();
    std::map<std::string, int> case_counts;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const DomainClass& xd = d.labels[x].domain;
        const DomainClass& yd = d.labels[y].domain;
        std::string c = equal_star_case(s, xd, yd);
        bool equal = k.stars_equal(x, y);
        if (!c.empty()) {
          case_counts[c]++;
          if (!equal) {
            r.status = CheckStatus::counterexample;
            json item = pair_payload(d, x, y);
            item["case"] = c;
            bad.push_back(item);
          }
        } else if (equal && x < y) {
          // within-bound equality matching no listed configuration: try to
          // break the containment beyond the bound
          json item = pair_payload(d, x, y);
          auto w = breaker.try_break(xd, yd, false);
          if (!w) w = breaker.try_break(yd, xd, false);
          if (w) {
            item["witness_core"] = *w;
            resolved.push_back(std::move(item));
          } else {
            unresolved.push_back(std::move(item));
          }
        }
        if (equal && !c.empty() && x < y) {
          json item = pair_payload(d, x, y);
          item["case"] = c;
          found.push_back(item);
        }
      }
    r.details = json{{"case_counts", case_counts}, {"classified_equal_pairs", found},
                     {"failures", bad}, {"suspects_resolved_as_artifacts", resolved},
                     {"suspects_unresolved", unresolved}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "star.nested_classified";
    r.status = CheckStatus::verified;
    json bad = json::array();
    std::vector<std::pair<int, int>> suspects;
    std::map<std::string, int> case_counts;
    int containments = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const DomainClass& xd = d.labels[x].domain;
        const DomainClass& yd = d.labels[y].domain;
        std::string c = nested_star_case(xd, yd);
        bool contained = k.star_subset(x, y);
        if (contained) ++containments;
        if (!c.empty()) {
          case_counts[c]++;
          if (!contained) {
            r.status = CheckStatus::counterexample;
            json item = pair_payload(d, x, y);
            item["case"] = c;
            bad.push_back(item);
          }
        } else if (contained) {
          suspects.emplace_back(x, y);
        }
      }
    json unresolved = json::array();
    json resolved = breaker_summary(breaker, d, suspects, false, unresolved);
    r.details = json{{"ordered_containments", containments}, {"case_counts", case_counts},
                     {"failures", bad}, {"suspects_resolved_as_artifacts", resolved},
                     {"suspects_unresolved", unresolved}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckReport> check_boolean_and_kernel(const ComplexBundle& d, int samples,
                                                  uint64_t seed) {
  if (d.kind != 'D') throw Error("check_boolean_and_kernel: needs a D bundle");
  std::vector<CheckReport> out;
  if (!d.biperipheral_vertex_disjoint) {
    for (const char* id : {"boolean.automorphism", "boolean.composition", "boolean.kernel",
                           "boolean.conjugation", "boolean.factorization"})
      out.push_back({id, CheckStatus::skipped,
                     json{{"reason", "biperipheral pairs share vertices (sphere with four holes)"}},
                     0.0});
    return out;
  }

  const FlagComplex& k = d.complex;
  ExchangeSet e = biperipheral_edge_set(d);
  std::mt19937_64 rng(seed);
  auto random_subset = [&]() {
    std::vector<ExchangePair> sel;
    for (const auto& p : e.pairs())
      if (rng() & 1) sel.push_back(p);
    return ExchangeSet(std::move(sel));
  };
  auto is_boolean_map = [&](const VertexMap& m) {
    std::set<ExchangePair> pairs(e.pairs().begin(), e.pairs().end());
    for (int v = 0; v < k.size(); ++v) {
      if (m[v] == v) continue;
      if (m[m[v]] != v) return false;
      if (!pairs.count(ExchangePair(v, m[v]))) return false;
    }
    return true;
  };

  std::vector<VertexMap> geos = geometric_automorphisms(d);

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "boolean.automorphism";
    r.status = CheckStatus::no_counterexample;
    json bad = json::array();
    std::vector<ExchangeSet> cases{ExchangeSet{}, e};
    for (int i = 0; i < samples; ++i) cases.push_back(random_subset());
    for (const auto& f : cases) {
      try {
        ExchangeAutomorphism phi = generalized_exchange(k, f);
        bool auto_ok = k.is_automorphism(phi.map);
        bool invol = compose(phi.map, phi.map) == identity_map(k.size());
        bool identity_iff_empty = f.empty() == (phi.map == identity_map(k.size()));
        if (!auto_ok || !invol || !identity_iff_empty) {
          r.status = CheckStatus::counterexample;
          bad.push_back(json{{"support_pairs", f.size()}});
        }
      } catch (const Error& err) {
        r.status = CheckStatus::counterexample;
        bad.push_back(json{{"support_pairs", f.size()}, {"error", err.what()}});
      }
    }
    r.details = json{{"sampled_subsets", cases.size()}, {"edge_count", e.size()},
                     {"failures", bad}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "boolean.composition";
    r.status = CheckStatus::no_counterexample;
    json bad = json::array();
    int trials = 0;
    for (int i = 0; i < samples; ++i) {
      ExchangeSet f = random_subset(), g = random_subset();
      auto pf = generalized_exchange(k, f), pg = generalized_exchange(k, g);
      auto pc = compose_exchanges(k, pf, pg);
      bool law = compose(pf.map, pg.map) == pc.map &&
                 pc.support == f.symmetric_difference(g);
      ++trials;
      if (!law) {
        r.status = CheckStatus::counterexample;
        bad.push_back(json{{"f_pairs", f.size()}, {"g_pairs", g.size()}});
      }
    }
    r.details = json{{"sampled_pairs", trials}, {"failures", bad}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "boolean.kernel";
    r.status = CheckStatus::no_counterexample;
    json bad = json::array();
    VertexMap d2_identity = identity_map(static_cast<int>(d.d2_ids.size()));
    std::vector<ExchangeSet> cases{ExchangeSet{}, e};
    for (int i = 0; i < samples; ++i) cases.push_back(random_subset());
    int kernel_members = 0, compositions = 0;
    for (const auto& f : cases) {
      auto phi = generalized_exchange(k, f);
      if (push_forward(d, phi.map) != d2_identity) {
        r.status = CheckStatus::counterexample;
        bad.push_back(json{{"support_pairs", f.size()}, {"kind", "boolean not in kernel"}});
      } else {
        ++kernel_members;
      }
      // sampled compositions with geometric automorphisms: in the kernel
      // exactly when the composition is a boolean exchange
      for (const auto& h : geos) {
        VertexMap psi = compose(phi.map, h);
        ++compositions;
        bool in_kernel = push_forward(d, psi) == d2_identity;
        if (in_kernel != is_boolean_map(psi)) {
          r.status = CheckStatus::counterexample;
          bad.push_back(json{{"support_pairs", f.size()}, {"kind", "kernel/boolean mismatch"}});
        }
      }
    }
    r.details = json{{"boolean_samples", cases.size()}, {"kernel_members", kernel_members},
                     {"sampled_compositions", compositions}, {"failures", bad}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "boolean.conjugation";
    r.status = CheckStatus::no_counterexample;
    json bad = json::array();
    std::set<ExchangePair> epairs(e.pairs().begin(), e.pairs().end());
    int trials = 0;
    for (int i = 0; i < std::max(1, samples / 4); ++i) {
      ExchangeSet f = random_subset();
      for (const auto& h : geos) {
        ++trials;
        try {
          ExchangeSet g = conjugate_exchange(k, h, f);  // asserts the law
          for (const auto& p : g.pairs())
            if (!epairs.count(p)) {
              r.status = CheckStatus::counterexample;
              bad.push_back(json{{"kind", "image pair not biperipheral"}});
            }
        } catch (const Error& err) {
          r.status = CheckStatus::counterexample;
          bad.push_back(json{{"error", err.what()}});
        }
      }
    }
    r.details = json{{"sampled_conjugations", trials}, {"geometric_maps", geos.size()},
                     {"failures", bad}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  {
    auto t0 = Clock::now();
    CheckReport r;
    r.id = "boolean.factorization";
    r.status = CheckStatus::no_counterexample;
    json bad = json::array();
    // distinct (F, h) give distinct compositions phi_F o h
    std::vector<std::pair<ExchangeSet, int>> sampled;
    sampled.emplace_back(ExchangeSet{}, 0);
    for (int i = 0; i < std::min(samples, 12); ++i)
      sampled.emplace_back(random_subset(), static_cast<int>(rng() % geos.size()));
    int comparisons = 0;
    for (size_t i = 0; i < sampled.size(); ++i)
      for (size_t j = i + 1; j < sampled.size(); ++j) {
        VertexMap a = compose(generalized_exchange(k, sampled[i].first).map, geos[sampled[i].second]);
        VertexMap b = compose(generalized_exchange(k, sampled[j].first).map, geos[sampled[j].second]);
        ++comparisons;
        bool same_factors = sampled[i].first == sampled[j].first &&
                            geos[sampled[i].second] == geos[sampled[j].second];
        if ((a == b) != same_factors) {
          r.status = CheckStatus::counterexample;
          bad.push_back(json{{"i", i}, {"j", j}});
        }
      }
    r.details = json{{"comparisons", comparisons}, {"failures", bad}};
    r.ms = ms_since(t0);
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<CheckReport> run_suite(const ComplexBundle& bundle, const std::string& suite,
                                   int samples, uint64_t seed) {
  if (bundle.kind == 'C') throw Error("run_suite: verification needs a D or D2 bundle");
  if (suite != "all" && suite != "annular" && suite != "annlink" && suite != "star" &&
      suite != "boolean")
    throw Error("run_suite: unknown suite '" + suite + "'");
  std::vector<CheckReport> out;
  auto extend = [&](std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  bool all = suite == "all";
  if (all || suite == "annular") extend(check_annular_characterization(bundle));
  if (bundle.kind == 'D') {
    if (all || suite == "annlink") extend(check_ann_link_suite(bundle));
    if (all || suite == "star") extend(check_star_suite(bundle));
    if (all || suite == "boolean") extend(check_boolean_and_kernel(bundle, samples, seed));
  } else if (!all && suite != "annular") {
    throw Error("run_suite: suite '" + suite + "' needs a D bundle");
  }
  return out;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool with_timings) {
  json checks = json::array();
  for (const auto& r : reports) {
    json item{{"id", r.id}, {"status", to_string(r.status)}, {"details", r.details}};
    if (with_timings) item["ms"] = r.ms;
    checks.push_back(std::move(item));
  }
  return json{{"schema", "domcx.report/1"}, {"checks", checks}};
}

bool has_counterexample(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckStatus::counterexample) return true;
  return false;
}

}  // namespace domcx
