#pragma once

#include <array>
#include <compare>
#include <vector>

#include "trigrove/grove.hpp"

namespace trigrove {

/// Triangular integer array of side n: row r (1-based, top to bottom) has
/// n+1-r entries. Entry (r,c) sits on the downward triangle with apex
/// (-(n-r) + 2(c-1), -r).
class Ast {
 public:
  /// Throws Error(InvalidArgument) unless the rows have lengths n, n-1, ..., 1.
  explicit Ast(std::vector<std::vector<int>> rows);

  static Ast zeros(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  int at(int r, int c) const { return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; }
  int& at(int r, int c) { return rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// All entries in {-1, 0, 1}.
  bool entries_in_range() const;

  friend auto operator<=>(const Ast&, const Ast&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

enum class MoveKind { M1, M2, M3 };
enum class MoveSign { Add, Subtract };

/// Entry deltas of a move on the triple ((r,c), (r,c+1), (r+1,c)).
std::array<int, 3> move_deltas(MoveKind kind);
const char* move_kind_name(MoveKind kind);

/// A signed sub-triangle move anchored at the top-left entry (row, col).
struct Move {
  int row = 1;
  int col = 1;
  MoveKind kind = MoveKind::M1;
  MoveSign sign = MoveSign::Add;

  friend auto operator<=>(const Move&, const Move&) = default;
};

struct MoveResult {
  Ast array;
  bool entries_in_range;
};

/// Adds or subtracts the move's sub-triangle. Only the shape is checked;
/// whether the result is an AST is a question for ast_preimages.
MoveResult apply_move(const Ast& a, const Move& move);

Ast grove_to_ast(const Grove& g);
Ast identity_ast(int n);
int ast_sum(const Ast& a);

/// Apex of AST entry (r,c) on a board of size n, and back.
Vertex apex_of_entry(int n, int r, int c);
std::pair<int, int> entry_of_apex(int n, Vertex apex);

}  // namespace trigrove
