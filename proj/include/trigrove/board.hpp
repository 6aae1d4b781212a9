#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trigrove/error.hpp"

namespace trigrove {

/// Lattice point. `j` is the row (0 on top, decreasing downward); `i` steps
/// by 2 along a row, so i+j has the parity of the board size.
struct Vertex {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// The six edge directions in clockwise screen order.
enum class Direction : std::uint8_t { NW, NE, E, SE, SW, W };

inline constexpr std::array<Direction, 6> kDirections = {
    Direction::NW, Direction::NE, Direction::E,
    Direction::SE, Direction::SW, Direction::W};

struct Offset {
  int di = 0;
  int dj = 0;
};

Offset offset(Direction d);
Direction rotate_direction(Direction d, bool clockwise);
Direction opposite(Direction d);
std::string_view direction_name(Direction d);
std::optional<Direction> parse_direction(std::string_view name);

/// Direction of the unit step from `from` to `to`, if they are lattice neighbours.
std::optional<Direction> direction_between(Vertex from, Vertex to);

inline Vertex step(Vertex v, Direction d) {
  const Offset o = offset(d);
  return {v.i + o.di, v.j + o.dj};
}

/// Number of unit lattice steps between two vertices of the triangular lattice.
int hex_distance(Vertex a, Vertex b);

/// Undirected lattice edge, stored with the lexicographically smaller endpoint first.
struct Edge {
  Vertex a;
  Vertex b;

  static Edge make(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  bool touches(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return a == v ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class SetKind { Corner, West, East, South, Middle };

/// One block of the boundary partition. `param` is the pair index i
/// (or the corner number 0..2; 0 for the middle triplet).
struct BoundarySet {
  SetKind kind;
  int param;
  std::vector<Vertex> vertices;
};

/// Size-n triangular board: vertices, the edge universe, downward-triangle
/// apexes and the boundary partition. Immutable once built.
class Board {
 public:
  explicit Board(int n);

  /// Shared, lazily built instance for size n.
  static std::shared_ptr<const Board> get(int n);

  int size() const { return n_; }

  bool contains(Vertex v) const;
  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t vertex_index(Vertex v) const;

  std::span<const Edge> edges() const { return edges_; }
  std::optional<std::size_t> edge_index(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }

  std::span<const Vertex> apexes() const { return apexes_; }
  bool is_apex(Vertex v) const;

  std::span<const BoundarySet> partition() const { return partition_; }
  /// Index into partition() of the set containing v, or -1.
  int partition_set_of(Vertex v) const;

  std::optional<Vertex> adjacent_vertex(Vertex v, Direction d) const;

  /// The apex whose downward triangle contains e.
  Vertex owner_apex(const Edge& e) const;
  std::array<Edge, 3> triangle_edges(Vertex apex) const;

 private:
  std::size_t slot(Vertex v) const;

  int n_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Vertex> apexes_;
  std::vector<BoundarySet> partition_;
  // Dense lookup over the bounding box [-n,n] x [-n,0].
  std::vector<int> vertex_slot_;
  std::vector<int> set_slot_;
  // Per vertex, per direction: universe index of the edge, or -1.
  std::vector<std::array<int, 6>> incident_;
};

}  // namespace trigrove
