#pragma once

#include <span>
#include <string>

#include "trigrove/reduction.hpp"

namespace trigrove {

/// SVG 1.1 drawing of the board's vertices with the given edges in black.
/// Vertex (i,j) sits at x = (i+n)/2 * 40, y = -j * 40 plus a margin.
std::string render_svg(int n, std::span<const Edge> edges);

/// Red, black and blue edges of a difference grove.
std::string render_diff_svg(const DiffGrove& d);

}  // namespace trigrove
