#pragma once

#include <string>
#include <utility>
#include <vector>

#include "domcx/flag_complex.hpp"

namespace fixtures {

/// Complete graph on n vertices; its flag complex is the full simplex K(n).
inline domcx::FlagComplex complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return domcx::FlagComplex::from_graph(n, e);
}

/// Finite truncation of the line-of-edges complex to columns 0..m-1.
/// Vertex ids: column c contributes 3c (t=-1), 3c+1 (t=0), 3c+2 (t=+1).
inline domcx::FlagComplex line_of_edges(int m) {
  std::vector<std::pair<int, int>> e;
  for (int c = 0; c < m; ++c) {
    e.emplace_back(3 * c + 1, 3 * c);      // (c,0)-(c,-1)
    e.emplace_back(3 * c + 1, 3 * c + 2);  // (c,0)-(c,+1)
    if (c + 1 < m) e.emplace_back(3 * c + 1, 3 * (c + 1) + 1);
  }
  std::vector<std::string> labels;
  for (int c = 0; c < m; ++c)
    for (int t : {-1, 0, 1}) labels.push_back("(" + std::to_string(c) + "," + std::to_string(t) + ")");
  return domcx::FlagComplex::from_graph(3 * m, e, labels);
}

inline int loe_spine(int c) { return 3 * c + 1; }
inline int loe_lower(int c) { return 3 * c; }
inline int loe_upper(int c) { return 3 * c + 2; }

/// Path a-b-c as vertices 0-1-2.
inline domcx::FlagComplex path3() {
  return domcx::FlagComplex::from_graph(3, {{0, 1}, {1, 2}});
}

}  // namespace fixtures
