#include "trigrove/ast.hpp"

#include <string>

#include "trigrove/error.hpp"

namespace trigrove {

Ast::Ast(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::InvalidArgument, "triangle must have at least one row");
  const std::size_t n = rows_.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (rows_[r].size() != n - r) {
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(r + 1) + " has length " +
                                                  std::to_string(rows_[r].size()) + ", expected " +
                                                  std::to_string(n - r));
    }
  }
}

Ast Ast::zeros(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "triangle size must be >= 1");
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= n; ++r) rows.emplace_back(static_cast<std::size_t>(n + 1 - r), 0);
  return Ast(std::move(rows));
}

bool Ast::entries_in_range() const {
  for (const auto& row : rows_) {
    for (int x : row) {
      if (x < -1 || x > 1) return false;
    }
  }
  return true;
}

std::array<int, 3> move_deltas(MoveKind kind) {
  switch (kind) {
    case MoveKind::M1: return {-1, 1, 0};
    case MoveKind::M2: return {1, 0, -1};
    case MoveKind::M3: return {0, -1, 1};
  }
  return {0, 0, 0};
}

const char* move_kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::M1: return "M1";
    case MoveKind::M2: return "M2";
    case MoveKind::M3: return "M3";
  }
  return "?";
}

MoveResult apply_move(const Ast& a, const Move& move) {
  const int n = a.size();
  if (move.row < 1 || move.row > n - 1 || move.col < 1 || move.col > n - move.row) {
    throw Error(ErrorCode::InvalidArgument, "move position (" + std::to_string(move.row) + "," +
                                                std::to_string(move.col) + ") has no sub-triangle in size " +
                                                std::to_string(n));
  }
  const auto d = move_deltas(move.kind);
  const int s = move.sign == MoveSign::Add ? 1 : -1;
  Ast out = a;
  out.at(move.row, move.col) += s * d[0];
  out.at(move.row, move.col + 1) += s * d[1];
  out.at(move.row + 1, move.col) += s * d[2];
  const bool ok = out.entries_in_range();
  return {std::move(out), ok};
}

Vertex apex_of_entry(int n, int r, int c) { return {-(n - r) + 2 * (c - 1), -r}; }

std::pair<int, int> entry_of_apex(int n, Vertex apex) {
  const int r = -apex.j;
  return {r, (apex.i + n - r) / 2 + 1};
}

Ast grove_to_ast(const Grove& g) {
  const Board& board = g.board();
  const int n = board.size();
  Ast out = Ast::zeros(n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n + 1 - r; ++c) {
      int e = 0;
      for (const Edge& edge : board.triangle_edges(apex_of_entry(n, r, c))) e += g.contains(edge) ? 1 : 0;
      out.at(r, c) = 1 - e;
    }
  }
  return out;
}

Ast identity_ast(int n) {
  Ast out = Ast::zeros(n);
  for (int r = 1; r <= (n + 1) / 2; ++r) out.at(r, r) = 1;
  return out;
}

int ast_sum(const Ast& a) {
  int total = 0;
  for (const auto& row : a.rows()) {
    for (int x : row) total += x;
  }
  return total;
}

}  // namespace trigrove
