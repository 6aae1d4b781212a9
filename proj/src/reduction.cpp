#include "trigrove/reduction.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

namespace trigrove {

namespace {

std::string show(Vertex v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string show(const Edge& e) { return show(e.a) + "-" + show(e.b); }

int edge_distance(const Edge& x, const Edge& y) {
  return std::min({hex_distance(x.a, y.a), hex_distance(x.a, y.b), hex_distance(x.b, y.a), hex_distance(x.b, y.b)});
}

int vertex_edge_distance(Vertex v, const Edge& e) { return std::min(hex_distance(v, e.a), hex_distance(v, e.b)); }

// Steps needed to turn `from` into `to` going one way round.
int turns(Direction from, Direction to, bool clockwise) {
  const int k = (static_cast<int>(to) - static_cast<int>(from) + 6) % 6;
  return clockwise ? k : (6 - k) % 6;
}

// Target grove of one size plus its grouping.
struct Layout {
  bool clockwise_only;
  std::shared_ptr<const Board> board;
  Grove target;
  std::vector<int> group;  // by vertex index: partition set of its target component
  std::vector<std::size_t> order;

  Layout(int n, bool cw) : clockwise_only(cw), board(Board::get(n)), target(target_grove(n)), order(group_order(n)) {
    group.assign(board->vertices().size(), -1);
    for (const auto& comp : components(target)) {
      int k = -1;
      for (const Vertex& v : comp) k = std::max(k, board->partition_set_of(v));
      for (const Vertex& v : comp) group[board->vertex_index(v)] = k;
    }
  }

  int cost(const Edge& black, const Edge& red) const {
    const int d = edge_distance(black, red);
    if (d > 0) return 6 * d;
    int best = 6;
    for (Vertex p : {black.a, black.b}) {
      if (!red.touches(p)) continue;
      const Direction from = *direction_between(p, red.other(p));
      const Direction aim = *direction_between(p, black.other(p));
      best = std::min(best, clockwise_only ? turns(from, aim, true)
                                           : std::min(turns(from, aim, true), turns(from, aim, false)));
    }
    return best;
  }

  int group_of(const Edge& e) const { return group[board->vertex_index(e.a)]; }
  bool in_target(const Edge& e) const { return target.contains(e); }

  std::size_t black_count(const Grove& g) const {
    std::size_t count = 0;
    for (const Edge& e : target.edges()) count += g.contains(e) ? 0 : 1;
    return count;
  }

  std::vector<Edge> blacks_of_group(const Grove& g, std::size_t k) const {
    std::vector<Edge> out;
    for (const Edge& e : target.edges()) {
      if (group_of(e) == static_cast<int>(k) && !g.contains(e)) out.push_back(e);
    }
    return out;
  }

  std::vector<Edge> reds(const Grove& g) const {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
      if (!in_target(e)) out.push_back(e);
    }
    return out;
  }

  // Per group in processing order: the smallest black/red cost and the sum
  // over all black/red pairs (both 0 when the group is complete). Edges
  // sharing a vertex count the turns still needed at that vertex.
  std::vector<int> potential(const Grove& g) const {
    const std::vector<Edge> red = reds(g);
    std::vector<int> out;
    out.reserve(2 * order.size());
    for (std::size_t k : order) {
      int best = 0;
      int total = 0;
      const auto blacks = blacks_of_group(g, k);
      if (!blacks.empty()) {
        best = std::numeric_limits<int>::max();
        for (const Edge& b : blacks) {
          for (const Edge& r : red) {
            const int c = cost(b, r);
            best = std::min(best, c);
            total += c;
          }
        }
      }
      out.push_back(best);
      out.push_back(total);
    }
    return out;
  }
};

std::vector<Spin> mode_spins(const Grove& g, bool clockwise_only) {
  std::vector<Spin> out = legal_spins(g);
  if (clockwise_only) std::erase_if(out, [](const Spin& s) { return !s.clockwise(); });
  return out;
}

// Rotates the edge at `pivot` pointing `from` round to `to`, one spin at a time.
std::optional<SlideResult> rotate_about(const Grove& g, Vertex pivot, Direction from, Direction to,
                                        bool clockwise_only) {
  std::vector<bool> ways{true};
  if (!clockwise_only) {
    ways.push_back(false);
    if (turns(from, to, false) < turns(from, to, true)) std::swap(ways[0], ways[1]);
  }
  for (bool cw : ways) {
    Grove cur = g;
    std::vector<Spin> spins;
    bool ok = true;
    for (Direction d = from; d != to; d = rotate_direction(d, cw)) {
      const Spin s{pivot, d, rotate_direction(d, cw)};
      auto next = try_apply_spin(cur, s);
      if (!std::holds_alternative<Grove>(next)) {
        ok = false;
        break;
      }
      cur = std::get<Grove>(std::move(next));
      spins.push_back(s);
    }
    if (ok && !spins.empty()) return SlideResult{std::move(cur), std::move(spins)};
  }
  return std::nullopt;
}

std::optional<SlideResult> try_slide(const Layout& layout, const Grove& g, const Edge& black, Vertex toward,
                                     bool clockwise_only) {
  const Board& board = *layout.board;
  std::array<Vertex, 2> ends{black.a, black.b};
  if (std::make_pair(hex_distance(toward, ends[1]), ends[1]) < std::make_pair(hex_distance(toward, ends[0]), ends[0])) {
    std::swap(ends[0], ends[1]);
  }

  // Gap advance: fill `black`, open the next path edge beyond the joint.
  for (Vertex joint : ends) {
    const Vertex far = black.other(joint);
    if (hex_distance(toward, joint) > hex_distance(toward, far)) continue;
    for (Direction d : kDirections) {
      const auto x = board.adjacent_vertex(joint, d);
      if (!x || *x == far) continue;
      const Edge next = Edge::make(joint, *x);
      if (!layout.in_target(next) || !g.contains(next)) continue;
      if (auto r = rotate_about(g, joint, d, *direction_between(joint, far), clockwise_only)) return r;
    }
  }

  // Red swing: turn a red edge at an endpoint one notch towards the gap.
  for (Vertex pivot : ends) {
    const Direction aim = *direction_between(pivot, black.other(pivot));
    for (Direction d : kDirections) {
      const auto y = board.adjacent_vertex(pivot, d);
      if (!y) continue;
      const Edge red = Edge::make(pivot, *y);
      if (!g.contains(red) || layout.in_target(red)) continue;
      for (bool cw : {true, false}) {
        if (clockwise_only && !cw) continue;
        const Direction nd = rotate_direction(d, cw);
        if (nd == aim) continue;
        const auto closer = [&](Direction a) {
          return clockwise_only ? turns(a, aim, true) : std::min(turns(a, aim, true), turns(a, aim, false));
        };
        if (closer(nd) >= closer(d)) continue;
        const auto z = board.adjacent_vertex(pivot, nd);
        if (!z || layout.in_target(Edge::make(pivot, *z))) continue;
        const Spin s{pivot, d, nd};
        auto next = try_apply_spin(g, s);
        if (std::holds_alternative<Grove>(next)) return SlideResult{std::get<Grove>(std::move(next)), {s}};
      }
    }
  }
  return std::nullopt;
}

// A spin that turns a red edge into a missing target edge.
std::optional<SlideResult> closing_spin(const Layout& layout, const Grove& g, bool clockwise_only) {
  const Board& board = *layout.board;
  for (std::size_t k : layout.order) {
    for (const Edge& b : layout.blacks_of_group(g, k)) {
      for (Vertex pivot : {b.a, b.b}) {
        const Direction to = *direction_between(pivot, b.other(pivot));
        for (bool cw : {true, false}) {
          if (clockwise_only && !cw) continue;
          // A clockwise spin into `to` starts from its counterclockwise neighbour.
          const Direction from = rotate_direction(to, !cw);
          const auto q = board.adjacent_vertex(pivot, from);
          if (!q) continue;
          const Edge red = Edge::make(pivot, *q);
          if (!g.contains(red) || layout.in_target(red)) continue;
          const Spin s{pivot, from, to};
          auto next = try_apply_spin(g, s);
          if (std::holds_alternative<Grove>(next)) return SlideResult{std::get<Grove>(std::move(next)), {s}};
        }
      }
    }
  }
  return std::nullopt;
}

// Observation-3 style relocation that strictly lowers the potential.
std::optional<SlideResult> greedy_slide(const Layout& layout, const Grove& g, bool clockwise_only) {
  const std::vector<int> phi = layout.potential(g);
  const std::vector<Edge> red = layout.reds(g);
  for (std::size_t k : layout.order) {
    for (const Edge& b : layout.blacks_of_group(g, k)) {
      std::vector<Edge> near = red;
      std::stable_sort(near.begin(), near.end(),
                       [&](const Edge& x, const Edge& y) { return layout.cost(b, x) < layout.cost(b, y); });
      for (const Edge& r : near) {
        const Vertex toward = vertex_edge_distance(r.a, b) <= vertex_edge_distance(r.b, b) ? r.a : r.b;
        if (auto step = try_slide(layout, g, b, toward, clockwise_only)) {
          if (layout.potential(step->grove) < phi) return step;
        }
      }
    }
  }

  std::optional<SlideResult> best;
  std::vector<int> best_phi;
  const std::size_t blacks = layout.black_count(g);
  for (const Spin& s : mode_spins(g, clockwise_only)) {
    Grove next = apply_spin(g, s);
    if (layout.black_count(next) != blacks) continue;
    std::vector<int> p = layout.potential(next);
    if (p < phi && (!best || p < best_phi)) {
      best_phi = std::move(p);
      best = SlideResult{std::move(next), {s}};
    }
  }
  return best;
}

// Breadth-first search for the nearest grove with fewer than `below` black
// edges. `budget` == 0 means unbounded.
std::optional<std::vector<Spin>> search_improvement(const Layout& layout, const Grove& start, std::size_t below,
                                                    bool clockwise_only, std::size_t budget) {
  struct Node {
    EdgeMask parent;
    Spin via;
  };
  std::unordered_map<EdgeMask, Node, EdgeMaskHash> seen;
  const EdgeMask root = edge_mask(start);
  seen.emplace(root, Node{{}, {}});
  std::deque<Grove> q{start};
  while (!q.empty()) {
    Grove g = std::move(q.front());
    q.pop_front();
    for (const Spin& s : mode_spins(g, clockwise_only)) {
      Grove next = apply_spin(g, s);
      EdgeMask key = edge_mask(next);
      if (!seen.emplace(key, Node{edge_mask(g), s}).second) continue;
      if (layout.black_count(next) < below) {
        std::vector<Spin> path;
        for (EdgeMask k = key; k != root;) {
          const Node& node = seen.at(k);
          path.push_back(node.via);
          k = node.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (budget != 0 && seen.size() > budget) return std::nullopt;
      q.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace

DiffGrove diff_grove(const Grove& g) {
  const Grove target = target_grove(g.size());
  DiffGrove out;
  out.n = g.size();
  for (const Edge& e : g.edges()) (target.contains(e) ? out.blue : out.red).push_back(e);
  for (const Edge& e : target.edges()) {
    if (!g.contains(e)) out.black.push_back(e);
  }
  return out;
}

std::vector<std::size_t> group_order(int n) {
  const auto board = Board::get(n);
  const auto partition = board->partition();
  std::vector<std::size_t> out;
  for (SetKind kind : {SetKind::East, SetKind::West, SetKind::South, SetKind::Middle}) {
    std::vector<std::size_t> block;
    for (std::size_t k = 0; k < partition.size(); ++k) {
      if (partition[k].kind == kind) block.push_back(k);
    }
    std::sort(block.begin(), block.end(),
              [&](std::size_t x, std::size_t y) { return partition[x].param > partition[y].param; });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::string group_label(const Board& board, std::size_t set_index) {
  const BoundarySet& set = board.partition()[set_index];
  switch (set.kind) {
    case SetKind::Corner: return "corner-" + std::to_string(set.param);
    case SetKind::West: return "west-" + std::to_string(set.param);
    case SetKind::East: return "east-" + std::to_string(set.param);
    case SetKind::South: return "south-" + std::to_string(set.param);
    case SetKind::Middle: return "middle";
  }
  return "?";
}

CentralGroups central_groups(int n) {
  const auto board = Board::get(n);
  const auto partition = board->partition();
  CentralGroups out;
  auto innermost = [&](SetKind kind, std::optional<std::size_t>& slot) {
    for (std::size_t k = 0; k < partition.size(); ++k) {
      if (partition[k].kind == kind && (!slot || partition[k].param < partition[*slot].param)) slot = k;
    }
  };
  innermost(SetKind::West, out.west);
  innermost(SetKind::East, out.east);
  innermost(SetKind::South, out.south);
  return out;
}

SlideResult slide_black_step(const Grove& g, const Edge& black, Vertex toward, bool clockwise_only) {
  const Layout layout(g.size(), clockwise_only);
  const Edge b = Edge::make(black.a, black.b);
  if (!layout.in_target(b) || g.contains(b)) {
    throw Error(ErrorCode::InvalidArgument, "edge " + show(b) + " is not a black edge of this grove");
  }
  if (!layout.board->contains(toward)) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + show(toward) + " is not on the board");
  }
  if (auto r = try_slide(layout, g, b, toward, clockwise_only)) return std::move(*r);
  throw Error(ErrorCode::IllegalSpin, "no legal relocating spin for black edge " + show(b) + " towards " + show(toward));
}

Reduction reduce_to_target(const Grove& start, const ReduceOptions& options) {
  const Layout layout(start.size(), options.clockwise_only);
  const bool cw = options.clockwise_only;
  Reduction out;
  out.sequence.n = start.size();
  Grove g = start;
  auto take = [&](SlideResult step) {
    out.sequence.spins.insert(out.sequence.spins.end(), step.spins.begin(), step.spins.end());
    g = std::move(step.grove);
  };
  auto gap = [&](std::string_view what) {
    if (options.on_strategy_gap) options.on_strategy_gap(g, what);
  };

  for (std::size_t blacks = layout.black_count(g); blacks > 0; blacks = layout.black_count(g)) {
    for (;;) {
      if (auto step = closing_spin(layout, g, cw)) {
        ++out.stats.closing_spins;
        take(std::move(*step));
        break;
      }
      if (auto step = greedy_slide(layout, g, cw)) {
        ++out.stats.slide_steps;
        out.stats.slide_spins += step->spins.size();
        take(std::move(*step));
        continue;
      }
      gap("greedy phases stalled; searching for an improving spin path");
      if (auto path = search_improvement(layout, g, blacks, cw, options.search_node_budget)) {
        ++out.stats.search_phases;
        out.stats.search_spins += path->size();
        take(SlideResult{replay_spins(g, *path), std::move(*path)});
        break;
      }
      if (g.size() > options.exhaustive_max_size) {
        throw Error(ErrorCode::BudgetExceeded, "spin search budget exhausted at size " + std::to_string(g.size()));
      }
      gap("improving-path search exhausted its budget; running exhaustive search");
      auto path = search_improvement(layout, g, 1, cw, 0);
      if (!path) throw Error(ErrorCode::Internal, "target grove unreachable by spins");
      ++out.stats.exhaustive_fallbacks;
      take(SlideResult{replay_spins(g, *path), std::move(*path)});
      break;
    }
    if (layout.black_count(g) >= blacks) throw Error(ErrorCode::Internal, "reduction phase did not remove a black edge");
  }
  if (g != layout.target) throw Error(ErrorCode::Internal, "reduction ended away from the target grove");
  return out;
}

ReplayError::ReplayError(std::size_t index, SpinFailure cause)
    : Error(ErrorCode::IllegalSpin, "spin " + std::to_string(index) + ": " + spin_failure_name(cause)),
      index_(index),
      cause_(cause) {}

Grove replay_spins(const Grove& g, std::span<const Spin> spins) {
  Grove cur = g;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    auto next = try_apply_spin(cur, spins[k]);
    if (auto* failure = std::get_if<SpinFailure>(&next)) throw ReplayError(k, *failure);
    cur = std::get<Grove>(std::move(next));
  }
  return cur;
}

std::vector<Move> spin_moves(const Grove& g, std::span<const Spin> spins) {
  std::vector<Move> out;
  Grove cur = g;
  for (const Spin& s : spins) {
    if (auto m = spin_ast_delta(cur, s)) out.push_back(*m);
    cur = apply_spin(cur, s);
  }
  return out;
}

std::vector<Move> move_path(const Ast& from, const Ast& to, const MovePathOptions& options) {
  if (from.size() != to.size()) {
    throw Error(ErrorCode::InvalidArgument, "triangles have different sizes " + std::to_string(from.size()) +
                                                " and " + std::to_string(to.size()));
  }
  const Grove target = target_grove(from.size());
  auto preimage = [&](const Ast& a, const char* which) {
    if (grove_to_ast(target) == a) return target;
    auto groves = ast_preimages(a, options.limits);
    if (groves.empty()) {
      throw Error(ErrorCode::InvalidAst, std::string(which) + " triangle is not an alternating sign triangle");
    }
    return groves.front();
  };
  const Grove start = preimage(from, "first");
  const Grove finish = preimage(to, "second");
  ReduceOptions reduce;
  reduce.clockwise_only = options.clockwise_only;

  std::vector<Move> out = spin_moves(start, reduce_to_target(start, reduce).sequence.spins);
  std::vector<Move> back = spin_moves(finish, reduce_to_target(finish, reduce).sequence.spins);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    Move m = *it;
    m.sign = m.sign == MoveSign::Add ? MoveSign::Subtract : MoveSign::Add;
    out.push_back(m);
  }
  return out;
}

}  // namespace trigrove
