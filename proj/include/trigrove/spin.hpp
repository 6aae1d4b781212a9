#pragma once

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "trigrove/ast.hpp"
#include "trigrove/grove.hpp"

namespace trigrove {

/// Replace the edge leaving `pivot` towards `from` by the edge towards `to`.
/// The two directions must be cyclically adjacent.
struct Spin {
  Vertex pivot;
  Direction from = Direction::NW;
  Direction to = Direction::NE;

  bool clockwise() const { return rotate_direction(from, true) == to; }
  Spin reversed() const { return {pivot, to, from}; }

  friend auto operator<=>(const Spin&, const Spin&) = default;
};

struct SpinType {
  int type;  // 1..6
  bool clockwise;
};

/// Type by direction pair: {NW,NE}=1, {NE,E}=2, {E,SE}=3, {SE,SW}=4, {SW,W}=5, {W,NW}=6.
SpinType spin_type(const Spin& s);

enum class SpinFailure {
  NotAdjacent,     // from/to are not cyclically adjacent
  NoSourceEdge,    // (a)
  TargetOffBoard,  // (b)
  EdgePresent,     // (c)
  CreatesCycle,    // (d)
  BreaksPartition, // (e)
};

const char* spin_failure_name(SpinFailure f);

std::variant<Grove, SpinFailure> try_apply_spin(const Grove& g, const Spin& s);

/// Throws Error(IllegalSpin) naming the cause.
Grove apply_spin(const Grove& g, const Spin& s);

/// Every spin that applies to g, sorted.
std::vector<Spin> legal_spins(const Grove& g);

/// The AST move induced by a legal spin; nullopt for types 1, 3 and 5.
std::optional<Move> spin_ast_delta(const Grove& g, const Spin& s);

}  // namespace trigrove
