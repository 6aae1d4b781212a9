#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigrove/ast.hpp"
#include "trigrove/enumeration.hpp"
#include "trigrove/error.hpp"
#include "trigrove/spin.hpp"

namespace trigrove {

/// Edges of a grove classified against the target grove of the same size.
struct DiffGrove {
  int n = 0;
  std::vector<Edge> red;    // grove only
  std::vector<Edge> black;  // target only
  std::vector<Edge> blue;   // both
};

DiffGrove diff_grove(const Grove& g);

struct SpinSeq {
  int n = 0;
  std::vector<Spin> spins;

  friend bool operator==(const SpinSeq&, const SpinSeq&) = default;
};

/// Processing order of target components: east pairs, west pairs and south
/// pairs (each outer to inner), then the middle triplet. Corner singletons
/// carry no edges and are left out. Values index Board::partition().
std::vector<std::size_t> group_order(int n);

/// Short label such as "east-3" or "middle" for a partition set.
std::string group_label(const Board& board, std::size_t set_index);

/// The innermost west, east and south pair components (groups W, E, S).
struct CentralGroups {
  std::optional<std::size_t> west;
  std::optional<std::size_t> east;
  std::optional<std::size_t> south;
};
CentralGroups central_groups(int n);

struct SlideResult {
  Grove grove;
  std::vector<Spin> spins;
};

/// One relocation step bringing a black edge and a red edge closer without
/// changing the black count. Either the gap advances one edge along its
/// target path towards `toward` (the black edge is filled and the next path
/// edge is rotated out around the joint vertex), or a red edge at an
/// endpoint of the black edge swings one position towards it.
/// Throws Error(IllegalSpin) when neither is possible.
SlideResult slide_black_step(const Grove& g, const Edge& black, Vertex toward, bool clockwise_only = false);

struct ReduceOptions {
  bool clockwise_only = false;
  /// States explored by one improving-path search before giving up.
  std::size_t search_node_budget = 500000;
  /// Largest size for which an exhaustive search to the target may be used.
  int exhaustive_max_size = 6;
  /// Called when the greedy phases stall and a search takes over.
  std::function<void(const Grove&, std::string_view)> on_strategy_gap;
};

struct ReductionStats {
  std::size_t closing_spins = 0;
  std::size_t slide_steps = 0;
  std::size_t slide_spins = 0;
  std::size_t search_phases = 0;
  std::size_t search_spins = 0;
  std::size_t exhaustive_fallbacks = 0;
};

struct Reduction {
  SpinSeq sequence;
  ReductionStats stats;
};

/// A spin sequence from g to target_grove(g.size()). In clockwise-only mode
/// every spin is clockwise.
Reduction reduce_to_target(const Grove& g, const ReduceOptions& options = {});

class ReplayError : public Error {
 public:
  ReplayError(std::size_t index, SpinFailure cause);

  std::size_t index() const noexcept { return index_; }
  SpinFailure cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  SpinFailure cause_;
};

/// Applies the spins in order; throws ReplayError at the first illegal one.
Grove replay_spins(const Grove& g, std::span<const Spin> spins);

/// AST moves induced by replaying `spins` from g (AST-neutral spins skipped).
std::vector<Move> spin_moves(const Grove& g, std::span<const Spin> spins);

struct MovePathOptions {
  bool clockwise_only = false;
  EnumerationLimits limits;
};

/// Moves carrying `from` to `to` through ASTs only: the reduction of a
/// preimage of `from`, then the inverted reduction of a preimage of `to`.
/// The target grove is the preferred preimage whenever it qualifies.
std::vector<Move> move_path(const Ast& from, const Ast& to, const MovePathOptions& options = {});

}  // namespace trigrove
