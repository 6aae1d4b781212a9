#include "trigrove/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "trigrove/error.hpp"

namespace trigrove {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidGrove: return "invalid-grove";
    case ErrorCode::InvalidAst: return "invalid-ast";
    case ErrorCode::IllegalSpin: return "illegal-spin";
    case ErrorCode::NotExact: return "not-exact";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Internal: return "internal-error";
  }
  return "unknown";
}

namespace {

constexpr std::array<Offset, 6> kOffsets = {
    Offset{-1, 1}, Offset{1, 1}, Offset{2, 0},
    Offset{1, -1}, Offset{-1, -1}, Offset{-2, 0}};

constexpr std::array<std::string_view, 6> kNames = {"NW", "NE", "E", "SE", "SW", "W"};

std::string show(Vertex v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

}  // namespace

Offset offset(Direction d) { return kOffsets[static_cast<int>(d)]; }

Direction rotate_direction(Direction d, bool clockwise) {
  const int k = static_cast<int>(d);
  return static_cast<Direction>(clockwise ? (k + 1) % 6 : (k + 5) % 6);
}

Direction opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 3) % 6);
}

std::string_view direction_name(Direction d) { return kNames[static_cast<int>(d)]; }

std::optional<Direction> parse_direction(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return static_cast<Direction>(k);
  }
  return std::nullopt;
}

std::optional<Direction> direction_between(Vertex from, Vertex to) {
  const int di = to.i - from.i;
  const int dj = to.j - from.j;
  for (std::size_t k = 0; k < kOffsets.size(); ++k) {
    if (kOffsets[k].di == di && kOffsets[k].dj == dj) return static_cast<Direction>(k);
  }
  return std::nullopt;
}

int hex_distance(Vertex a, Vertex b) {
  const int dj = std::abs(a.j - b.j);
  const int di = std::abs(a.i - b.i);
  return di <= dj ? dj : dj + (di - dj) / 2;
}

Board::Board(int n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "board size must be >= 1, got " + std::to_string(n));
  }
  const int width = 2 * n + 1;
  vertex_slot_.assign(static_cast<std::size_t>(width * (n + 1)), -1);
  set_slot_.assign(vertex_slot_.size(), -1);

  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= 0; ++j) {
      const Vertex v{i, j};
      if (i + j >= -n && i - j <= n && ((i + j - n) % 2 == 0)) vertices_.push_back(v);
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    vertex_slot_[slot(vertices_[k])] = static_cast<int>(k);
  }

  for (const Vertex& v : vertices_) {
    for (Direction d : kDirections) {
      const Vertex w = step(v, d);
      if (contains(w) && v < w) edges_.push_back(Edge{v, w});
    }
  }
  std::sort(edges_.begin(), edges_.end());

  incident_.assign(vertices_.size(), {-1, -1, -1, -1, -1, -1});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    incident_[vertex_index(e.a)][static_cast<int>(*direction_between(e.a, e.b))] = static_cast<int>(k);
    incident_[vertex_index(e.b)][static_cast<int>(*direction_between(e.b, e.a))] = static_cast<int>(k);
  }

  for (const Vertex& v : vertices_) {
    if (v.j <= -1 && contains({v.i - 1, v.j + 1}) && contains({v.i + 1, v.j + 1})) {
      apexes_.push_back(v);
    }
  }

  partition_.push_back({SetKind::Corner, 0, {{-n, 0}}});
  partition_.push_back({SetKind::Corner, 1, {{n, 0}}});
  partition_.push_back({SetKind::Corner, 2, {{0, -n}}});
  for (int i = 1; i < n; ++i) {
    if ((i - n) % 2 != 0) continue;
    partition_.push_back({SetKind::West, i, {{-i, 0}, {(-n - i) / 2, (-n + i) / 2}}});
  }
  for (int i = 1; i < n; ++i) {
    if ((i - n) % 2 != 0) continue;
    partition_.push_back({SetKind::East, i, {{i, 0}, {(n + i) / 2, (-n + i) / 2}}});
  }
  for (int i = 1; i < n; ++i) {
    if (2 * i <= n) continue;
    partition_.push_back({SetKind::South, i, {{-n + i, -i}, {n - i, -i}}});
  }
  if (n % 2 == 0) {
    partition_.push_back({SetKind::Middle, 0, {{0, 0}, {-n / 2, -n / 2}, {n / 2, -n / 2}}});
  }
  for (std::size_t k = 0; k < partition_.size(); ++k) {
    for (const Vertex& v : partition_[k].vertices) set_slot_[slot(v)] = static_cast<int>(k);
  }
}

std::shared_ptr<const Board> Board::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Board>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto board = std::make_shared<const Board>(n);
  cache.emplace(n, board);
  return board;
}

std::size_t Board::slot(Vertex v) const {
  return static_cast<std::size_t>((v.j + n_) * (2 * n_ + 1) + (v.i + n_));
}

bool Board::contains(Vertex v) const {
  if (v.i < -n_ || v.i > n_ || v.j < -n_ || v.j > 0) return false;
  return vertex_slot_[slot(v)] >= 0;
}

std::size_t Board::vertex_index(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + show(v) + " is not on the board");
  }
  return static_cast<std::size_t>(vertex_slot_[slot(v)]);
}

std::optional<std::size_t> Board::edge_index(const Edge& e) const {
  if (!contains(e.a) || !contains(e.b)) return std::nullopt;
  const auto d = direction_between(e.a, e.b);
  if (!d) return std::nullopt;
  const int k = incident_[vertex_index(e.a)][static_cast<int>(*d)];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

bool Board::is_apex(Vertex v) const {
  return contains(v) && v.j <= -1 && contains({v.i - 1, v.j + 1}) && contains({v.i + 1, v.j + 1});
}

int Board::partition_set_of(Vertex v) const {
  if (!contains(v)) return -1;
  return set_slot_[slot(v)];
}

std::optional<Vertex> Board::adjacent_vertex(Vertex v, Direction d) const {
  if (!contains(v)) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + show(v) + " is not on the board");
  }
  const Vertex w = step(v, d);
  if (!contains(w)) return std::nullopt;
  return w;
}

Vertex Board::owner_apex(const Edge& e) const {
  if (!has_edge(e)) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + show(e.a) + "-" + show(e.b) + " is not in the edge universe");
  }
  // Horizontal edges belong to the triangle below their midpoint; diagonal
  // edges to the triangle whose apex is their lower endpoint.
  if (e.a.j == e.b.j) return {(e.a.i + e.b.i) / 2, e.a.j - 1};
  return e.a.j < e.b.j ? e.a : e.b;
}

std::array<Edge, 3> Board::triangle_edges(Vertex apex) const {
  if (!is_apex(apex)) {
    throw Error(ErrorCode::InvalidArgument, "vertex " + show(apex) + " is not a downward-triangle apex");
  }
  const Vertex left{apex.i - 1, apex.j + 1};
  const Vertex right{apex.i + 1, apex.j + 1};
  return {Edge::make(apex, left), Edge::make(apex, right), Edge::make(left, right)};
}

}  // namespace trigrove
