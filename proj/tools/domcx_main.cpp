// Command-line front end: build weight-bound truncations of the curve and
// domain complexes of a small surface, query them, run the verification
// suites, and export artifacts.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "domcx/json_io.hpp"
#include "domcx/verifier.hpp"

using namespace domcx;
using nlohmann::json;

namespace {

constexpr int kExitUnsupported = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnknownVertex = 4;

int default_threads() {
  if (const char* env = std::getenv("DOMCX_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

bool parse_surface(const std::string& text, SurfaceSig& sig) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    sig.genus = std::stoi(text.substr(0, comma));
    sig.holes = std::stoi(text.substr(comma + 1));
  } catch (...) {
    return false;
  }
  return sig.genus >= 0 && sig.holes >= 0;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << text;
  if (!out) throw std::ios_base::failure("cannot write " + path);
}

ComplexBundle load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(std::string("bundle parse error: ") + e.what());
  }
  return bundle_from_json(j);
}

int cmd_build(const std::string& surface, int weight, const std::string& kind,
              const std::string& out, int threads) {
  SurfaceSig sig;
  if (!parse_surface(surface, sig)) {
    std::cerr << "error: --surface expects g,b\n";
    return kExitUnsupported;
  }
  ComplexBundle bundle;
  try {
    if (kind == "C") bundle = build_C(sig, weight, threads);
    else if (kind == "D") bundle = build_D(sig, weight, threads);
    else bundle = build_D2(sig, weight, threads);
  } catch (const UnsupportedSurface& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  try {
    write_text(out, bundle_to_json(bundle).dump(2) + "\n");
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cerr << kind << "(" << sig.str() << ") W=" << weight << ": " << bundle.complex.size()
            << " vertices, " << bundle.complex.edge_count() << " edges\n";
  return 0;
}

int cmd_query(const std::string& path, const std::string& op, int a, int b) {
  ComplexBundle bundle;
  try {
    bundle = load_bundle(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  json out;
  try {
    if (op == "star") out = json{{"vertex", a}, {"star0", bundle.complex.star0(a)}};
    else if (op == "link") out = json{{"vertex", a}, {"link0", bundle.complex.link0(a)}};
    else if (op == "exchangeable")
      out = json{{"x", a}, {"y", b}, {"exchangeable", is_exchangeable(bundle.complex, a, b)}};
    else if (op == "fibers") {
      if (bundle.kind != 'D') {
        std::cerr << "error: fibers need a D bundle\n";
        return kExitIo;
      }
      json fibers = json::array();
      for (size_t i = 0; i < bundle.d2_ids.size(); ++i) {
        json members = json::array();
        for (int v = 0; v < bundle.complex.size(); ++v)
          if (bundle.projection[v] == static_cast<int>(i)) members.push_back(v);
        fibers.push_back(json{{"d2_vertex", bundle.d2_ids[i]}, {"fiber", members}});
      }
      out = json{{"fibers", fibers}};
    } else {
      std::cerr << "error: unknown query op " << op << "\n";
      return kExitIo;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownVertex;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& suite, int samples, uint64_t seed,
               const std::string& out, bool timings) {
  ComplexBundle bundle;
  try {
    bundle = load_bundle(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(bundle, suite, samples, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  for (const auto& r : reports)
    std::cerr << r.id << ": " << to_string(r.status) << "\n";
  try {
    write_text(out, reports_to_json(reports, timings).dump(2) + "\n");
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return has_counterexample(reports) ? 1 : 0;
}

int cmd_export_dot(const std::string& path, const std::string& out) {
  try {
    ComplexBundle bundle = load_bundle(path);
    write_text(out, bundle_to_dot(bundle));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated curve and domain complexes of small surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for pairwise edge computation");

  auto* build = app.add_subcommand("build", "build a bundle and write it as JSON");
  std::string surface, kind = "D", build_out = "-";
  int weight = 2;
  build->add_option("--surface", surface, "surface signature g,b")->required();
  build->add_option("--weight", weight, "max edge weight of the truncation")->required();
  build->add_option("--kind", kind, "C, D or D2")->check(CLI::IsMember({"C", "D", "D2"}));
  build->add_option("--out", build_out, "output path (default stdout)");

  auto* query = app.add_subcommand("query", "query a bundle");
  std::string qpath, qop;
  int qa = 0, qb = 0;
  query->add_option("bundle", qpath)->required();
  query->add_option("op", qop, "star | link | exchangeable | fibers")->required();
  query->add_option("a", qa, "vertex id");
  query->add_option("b", qb, "second vertex id");

  auto* verify = app.add_subcommand("verify", "run verification suites on a bundle");
  std::string vpath, suite = "all", vout = "-";
  int samples = 100;
  uint64_t seed = 0;
  bool timings = false;
  verify->add_option("bundle", vpath)->required();
  verify->add_option("--suite", suite, "all | annular | annlink | star | boolean")
      ->check(CLI::IsMember({"all", "annular", "annlink", "star", "boolean"}));
  verify->add_option("--samples", samples, "random subsets per sampled check");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--out", vout, "report path (default stdout)");
  verify->add_flag("--timings", timings, "include per-check timings in the report");

  auto* exportdot = app.add_subcommand("export-dot", "write the 1-skeleton as graphviz");
  std::string dpath, dout = "-";
  exportdot->add_option("bundle", dpath)->required();
  exportdot->add_option("--out", dout, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(surface, weight, kind == "D2" ? "2" : kind, build_out, threads);
    if (query->parsed()) return cmd_query(qpath, qop, qa, qb);
    if (verify->parsed()) return cmd_verify(vpath, suite, samples, seed, vout, timings);
    if (exportdot->parsed()) return cmd_export_dot(dpath, dout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
