#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trigrove/ast.hpp"
#include "trigrove/grove.hpp"

namespace trigrove {

/// Size ceilings for exhaustive work. Exceeding one is an error, never a
/// silent truncation.
struct EnumerationLimits {
  int max_grove_size = 5;
  int max_move_graph_size = 4;
};

/// Every grove of size n, each once, in ascending order. Results are cached.
const std::vector<Grove>& enumerate_groves(int n, const EnumerationLimits& limits = {});

/// Distinct ASTs of size n, ascending.
std::vector<Ast> enumerate_asts(int n, const EnumerationLimits& limits = {});

/// All groves mapping to `a`; empty iff `a` is not an AST.
std::vector<Grove> ast_preimages(const Ast& a, const EnumerationLimits& limits = {});

struct MoveGraphReport {
  int n = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  bool connected = false;
  std::optional<int> diameter;
};

/// Graph on the ASTs of size n, adjacent when one signed move apart.
MoveGraphReport verify_move_connectivity(int n, const EnumerationLimits& limits = {});

struct SpinGraphReport {
  int n = 0;
  std::size_t grove_count = 0;
  std::size_t reached = 0;
  bool connected = false;
  int max_distance = 0;
  /// Spin distance from the target, aligned with enumerate_groves(n).
  std::vector<int> distance;
};

/// Breadth-first search over legal spins from the target grove.
SpinGraphReport verify_spin_connectivity(int n, const EnumerationLimits& limits = {});

}  // namespace trigrove
