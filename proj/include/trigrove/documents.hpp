#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trigrove/ast.hpp"
#include "trigrove/recurrence.hpp"
#include "trigrove/reduction.hpp"

namespace trigrove {

/// A grove document before validation: n plus canonical (sorted) edges.
struct GroveDoc {
  int n = 0;
  std::vector<Edge> edges;
};

// Emitters produce compact single-line JSON. Parsers throw Error(Parse) on
// malformed text or shape.
std::string emit_grove(const Grove& g);
GroveDoc parse_grove(std::string_view text);

std::string emit_ast(const Ast& a);
Ast parse_ast(std::string_view text);

std::string emit_spins(const SpinSeq& seq);
SpinSeq parse_spins(std::string_view text);

std::string emit_diff(const DiffGrove& d);
DiffGrove parse_diff(std::string_view text);

std::string emit_moves(int n, const std::vector<Move>& moves);

/// With `terms`, the monomials are listed leading term first.
std::string emit_level_summary(const LevelSummary& s, bool terms);

}  // namespace trigrove
