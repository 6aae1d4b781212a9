#pragma once

#include <vector>

#include "trigrove/grove.hpp"

namespace support {

using Rows = std::vector<std::vector<int>>;

inline trigrove::Edge edge(int i1, int j1, int i2, int j2) { return trigrove::Edge::make({i1, j1}, {i2, j2}); }

inline std::vector<trigrove::Edge> sorted(std::vector<trigrove::Edge> edges) {
  return trigrove::canonical_edges(std::move(edges));
}

inline std::vector<trigrove::Edge> edges_of(const trigrove::Grove& g) { return {g.edges().begin(), g.edges().end()}; }

// The size-4 grove drawn in Figure 2.
inline std::vector<trigrove::Edge> figure2_edges() {
  return sorted({edge(-2, 0, -3, -1), edge(0, 0, 1, -1), edge(1, -1, -1, -1), edge(-1, -1, -2, -2),
                 edge(-1, -1, 0, -2), edge(0, -2, 2, -2), edge(2, 0, 3, -1), edge(-1, -3, 1, -3)});
}

inline trigrove::Grove figure2() { return trigrove::Grove(4, figure2_edges()); }

// Non-target size-2 grove {(0,0)-(-1,-1), (-1,-1)-(1,-1)}.
inline trigrove::Grove small_grove() { return trigrove::Grove(2, sorted({edge(0, 0, -1, -1), edge(-1, -1, 1, -1)})); }

}  // namespace support
