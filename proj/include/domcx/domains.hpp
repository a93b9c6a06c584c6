#pragma once

#include <array>
#include <string>
#include <vector>

#include "domcx/curves.hpp"
#include "domcx/surface.hpp"

namespace domcx {

/// One complementary piece of a system of curves: its genus, the marked
/// points (holes of S) it contains, and one (component, side) tag per
/// boundary circle coming from the cut.
struct CutPiece {
  int genus = 0;
  int chi_compact = 0;
  std::vector<int> holes;
  std::vector<std::pair<int, int>> tags;  // (component index, side 0=L/1=R)
};

/// Result of cutting the surface along a system of essential curves.
struct CutResult {
  std::vector<Weights> comps;                      // canonical copy order
  std::vector<CutPiece> pieces;
  std::vector<std::array<int, 2>> comp_side_piece; // piece left/right of each comp
  std::vector<std::vector<int>> interval_piece;    // [edge][intrinsic interval]
};

/// Cuts along an already-traced system (every component essential,
/// multiplicity one).
CutResult cut_system(const Surface& s, const TraceResult& traced);
/// Convenience: merge, trace, verify the trace reproduces `comps`, cut.
CutResult cut_system(const Surface& s, const std::vector<Weights>& comps);

enum class DomainKind { annulus, pants, nonelementary };

/// Isotopy class of a domain: either a regular-neighborhood annulus of an
/// essential curve, or a complementary piece of the system formed by its own
/// essential boundary classes. Identity is field-wise equality of the
/// canonical form.
struct DomainClass {
  SurfaceSig sig;
  bool annulus = false;
  Weights core;                            // annulus case only
  std::vector<Weights> boundary;           // sorted distinct boundary classes
  std::vector<std::pair<int, int>> tags;   // (boundary index, side), sorted
  int genus = 0;
  std::vector<int> holes;                  // sorted marked points inside

  DomainKind kind() const;
  int peripheral_count() const { return annulus ? 0 : static_cast<int>(holes.size()); }
  int essential_circle_count() const { return annulus ? 2 : static_cast<int>(tags.size()); }
  const std::vector<Weights>& boundary_classes() const;
  bool is_biperipheral_pants() const;
  bool is_monoperipheral_pants() const;
  /// Circles of a given boundary class (1 or 2; annuli have 2 core circles).
  int class_multiplicity(const Weights& c) const;

  std::string describe() const;
  bool operator==(const DomainClass& o) const;
  bool operator<(const DomainClass& o) const;
};

DomainClass annulus_domain(const Surface& s, const CurveClass& core);
DomainClass domain_from_piece(const Surface& s, const CutResult& cut, int piece_index);

/// Disjoint realizability of two domain classes. Same-class input returns
/// true by convention; the complex builders exclude self-edges themselves.
bool domains_disjoint(const Surface& s, const DomainClass& x, const DomainClass& y);

/// Whether `inner` is isotopic to a domain on `outer` (proper: equal classes
/// give false).
bool subdomain_of(const Surface& s, const DomainClass& inner, const DomainClass& outer);

/// Annuli over all enumerated curves plus the complementary pieces of every
/// enumerated system with max edge weight <= bound; deduplicated, sorted.
std::vector<DomainClass> enumerate_domains(const Surface& s, int bound);

}  // namespace domcx
