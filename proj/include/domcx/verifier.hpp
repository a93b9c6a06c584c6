#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "domcx/builders.hpp"

namespace domcx {

enum class CheckStatus { verified, no_counterexample, counterexample, skipped };

std::string to_string(CheckStatus s);

/// Outcome of one proposition check. `verified` is reserved for directions
/// whose witnesses provably lie inside the truncation; bounded scans of
/// universal statements report `no_counterexample`. Counterexample payloads
/// carry vertex ids and labels so they replay.
struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json details;
  double ms = 0.0;
};

/// Star-containment characterization of annular vertices in the truncated
/// complex of domains. Skipped on the one-holed torus.
std::vector<CheckReport> check_annular_characterization(const ComplexBundle& bundle);

/// Annular-link suite: equality and containment of Ann(x) against the
/// topological configurations that realize them.
std::vector<CheckReport> check_ann_link_suite(const ComplexBundle& d);

/// Nested-star and equal-star classification against the listed
/// configuration cases.
std::vector<CheckReport> check_star_suite(const ComplexBundle& d);

/// Boolean subgroup laws, the projection kernel, and conjugation by
/// geometric automorphisms, on seeded random subsets of the biperipheral
/// edge set. Skipped when the biperipheral pairs share vertices.
std::vector<CheckReport> check_boolean_and_kernel(const ComplexBundle& d, int samples,
                                                  uint64_t seed);

std::vector<CheckReport> run_suite(const ComplexBundle& bundle, const std::string& suite,
                                   int samples, uint64_t seed);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports, bool with_timings);
bool has_counterexample(const std::vector<CheckReport>& reports);

}  // namespace domcx
