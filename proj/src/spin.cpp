#include "trigrove/spin.hpp"

#include <algorithm>
#include <string>

#include "trigrove/error.hpp"

namespace trigrove {

namespace {

bool adjacent(Direction a, Direction b) {
  return rotate_direction(a, true) == b || rotate_direction(a, false) == b;
}

std::string show(const Spin& s) {
  return "(" + std::to_string(s.pivot.i) + "," + std::to_string(s.pivot.j) + ") " +
         std::string(direction_name(s.from)) + "->" + std::string(direction_name(s.to));
}

// Pure forest check on the replaced edge set: cycles first, then partition.
SpinFailure classify(const Board& board, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(board.vertices().size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    const std::size_t a = find(board.vertex_index(e.a));
    const std::size_t b = find(board.vertex_index(e.b));
    if (a == b) return SpinFailure::CreatesCycle;
    parent[a] = b;
  }
  return SpinFailure::BreaksPartition;
}

}  // namespace

SpinType spin_type(const Spin& s) {
  if (!adjacent(s.from, s.to)) {
    throw Error(ErrorCode::InvalidArgument, "spin directions " + std::string(direction_name(s.from)) + " and " +
                                                std::string(direction_name(s.to)) + " are not adjacent");
  }
  // The clockwise member of each pair names its type: NW->NE is 1, NE->E is 2, ...
  const Direction first = s.clockwise() ? s.from : s.to;
  return {static_cast<int>(first) + 1, s.clockwise()};
}

const char* spin_failure_name(SpinFailure f) {
  switch (f) {
    case SpinFailure::NotAdjacent: return "directions-not-adjacent";
    case SpinFailure::NoSourceEdge: return "no-edge-at-from-direction";
    case SpinFailure::TargetOffBoard: return "to-vertex-off-board";
    case SpinFailure::EdgePresent: return "replacement-edge-present";
    case SpinFailure::CreatesCycle: return "result-cyclic";
    case SpinFailure::BreaksPartition: return "result-breaks-partition";
  }
  return "unknown";
}

std::variant<Grove, SpinFailure> try_apply_spin(const Grove& g, const Spin& s) {
  if (!adjacent(s.from, s.to)) return SpinFailure::NotAdjacent;
  const Board& board = g.board();
  if (!board.contains(s.pivot)) return SpinFailure::NoSourceEdge;
  const auto from_vertex = board.adjacent_vertex(s.pivot, s.from);
  if (!from_vertex) return SpinFailure::NoSourceEdge;
  const Edge removed = Edge::make(s.pivot, *from_vertex);
  if (!g.contains(removed)) return SpinFailure::NoSourceEdge;
  const auto to_vertex = board.adjacent_vertex(s.pivot, s.to);
  if (!to_vertex) return SpinFailure::TargetOffBoard;
  const Edge added = Edge::make(s.pivot, *to_vertex);
  if (g.contains(added)) return SpinFailure::EdgePresent;

  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (e != removed) edges.push_back(e);
  }
  edges.insert(std::upper_bound(edges.begin(), edges.end(), added), added);
  if (!is_valid_grove(board, edges)) return classify(board, edges);
  return Grove::assume_valid(g.board_ptr(), std::move(edges));
}

Grove apply_spin(const Grove& g, const Spin& s) {
  auto result = try_apply_spin(g, s);
  if (auto* failure = std::get_if<SpinFailure>(&result)) {
    throw Error(ErrorCode::IllegalSpin, "spin " + show(s) + ": " + spin_failure_name(*failure));
  }
  return std::get<Grove>(std::move(result));
}

std::vector<Spin> legal_spins(const Grove& g) {
  const Board& board = g.board();
  std::vector<Spin> out;
  for (const Edge& e : g.edges()) {
    for (const auto& [pivot, far] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      const Direction from = *direction_between(pivot, far);
      for (bool cw : {true, false}) {
        const Spin s{pivot, from, rotate_direction(from, cw)};
        const auto to_vertex = board.adjacent_vertex(pivot, s.to);
        if (!to_vertex || g.contains(Edge::make(pivot, *to_vertex))) continue;
        if (std::holds_alternative<Grove>(try_apply_spin(g, s))) out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Move> spin_ast_delta(const Grove& g, const Spin& s) {
  if (!std::holds_alternative<Grove>(try_apply_spin(g, s))) {
    throw Error(ErrorCode::IllegalSpin, "spin " + show(s) + " is not legal in this grove");
  }
  const SpinType t = spin_type(s);
  const auto [r, c] = entry_of_apex(g.size(), s.pivot);
  const MoveSign sign = t.clockwise ? MoveSign::Add : MoveSign::Subtract;
  switch (t.type) {
    case 2: return Move{r, c, MoveKind::M2, sign};
    case 4: return Move{r + 1, c - 1, MoveKind::M1, sign};
    case 6: return Move{r, c - 1, MoveKind::M3, sign};
    default: return std::nullopt;
  }
}

}  // namespace trigrove
