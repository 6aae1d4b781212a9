#include "trigrove/grove.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "trigrove/error.hpp"

namespace trigrove {

namespace {

std::string show(Vertex v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Vertices of the unique path between u and v in the forest spanned by `edges`.
std::vector<Vertex> forest_path(const Board& board, std::span<const Edge> edges, Vertex u, Vertex v) {
  std::vector<std::vector<std::size_t>> adj(board.vertices().size());
  for (const Edge& e : edges) {
    const std::size_t a = board.vertex_index(e.a);
    const std::size_t b = board.vertex_index(e.b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const std::size_t src = board.vertex_index(u);
  const std::size_t dst = board.vertex_index(v);
  std::vector<std::size_t> prev(adj.size(), adj.size());
  prev[src] = src;
  std::queue<std::size_t> q;
  q.push(src);
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop();
    if (x == dst) break;
    for (std::size_t y : adj[x]) {
      if (prev[y] == adj.size()) {
        prev[y] = x;
        q.push(y);
      }
    }
  }
  std::vector<Vertex> path;
  for (std::size_t x = dst; prev[x] != adj.size(); x = prev[x]) {
    path.push_back(board.vertices()[x]);
    if (x == src) break;
  }
  return path;
}

}  // namespace

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Universe: return "universe";
    case Axiom::Acyclicity: return "acyclicity";
    case Axiom::Connectivity: return "connectivity";
  }
  return "unknown";
}

std::vector<Violation> validate_grove(const Board& board, std::span<const Edge> edges) {
  std::vector<Violation> out;
  std::vector<Edge> accepted;
  DisjointSets sets(board.vertices().size());

  for (const Edge& raw : edges) {
    const Edge e = Edge::make(raw.a, raw.b);
    if (!board.has_edge(e)) {
      out.push_back({Axiom::Universe, "edge " + show(e.a) + "-" + show(e.b) + " is not a lattice edge of the board",
                     {e.a, e.b}});
      continue;
    }
    if (!sets.unite(board.vertex_index(e.a), board.vertex_index(e.b))) {
      std::vector<Vertex> cycle = forest_path(board, accepted, e.a, e.b);
      out.push_back({Axiom::Acyclicity, "edge " + show(e.a) + "-" + show(e.b) + " closes a cycle",
                     std::move(cycle)});
      continue;
    }
    accepted.push_back(e);
  }

  const auto partition = board.partition();
  std::map<std::size_t, std::vector<std::size_t>> sets_by_root;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const auto& members = partition[k].vertices;
    const std::size_t root = sets.find(board.vertex_index(members.front()));
    bool whole = true;
    for (const Vertex& v : members) whole = whole && sets.find(board.vertex_index(v)) == root;
    if (!whole) {
      out.push_back({Axiom::Connectivity,
                     "boundary set containing " + show(members.front()) + " is not contained in one component",
                     members});
      continue;
    }
    sets_by_root[root].push_back(k);
  }

  std::map<std::size_t, std::vector<Vertex>> members_by_root;
  for (const Vertex& v : board.vertices()) members_by_root[sets.find(board.vertex_index(v))].push_back(v);
  for (const auto& [root, members] : members_by_root) {
    auto it = sets_by_root.find(root);
    const std::size_t count = it == sets_by_root.end() ? 0 : it->second.size();
    if (count == 1) continue;
    if (count == 0) {
      // Pieces of a split set were already reported with that set.
      const bool has_set_vertex = std::any_of(members.begin(), members.end(),
                                              [&](Vertex v) { return board.partition_set_of(v) >= 0; });
      if (has_set_vertex) continue;
      out.push_back({Axiom::Connectivity,
                     "component containing " + show(members.front()) + " contains no boundary set", members});
    } else {
      out.push_back({Axiom::Connectivity,
                     "component containing " + show(members.front()) + " contains " + std::to_string(count) +
                         " boundary sets",
                     members});
    }
  }
  return out;
}

bool is_valid_grove(const Board& board, std::span<const Edge> edges) {
  const std::size_t nv = board.vertices().size();
  DisjointSets sets(nv);
  for (const Edge& e : edges) {
    const auto idx = board.edge_index(e);
    if (!idx) return false;
    if (!sets.unite(board.vertex_index(e.a), board.vertex_index(e.b))) return false;
  }
  const auto partition = board.partition();
  // Acyclic with exactly V - C edges means exactly C components, so it is
  // enough that every set is whole and no two sets share a root.
  if (edges.size() + partition.size() != nv) return false;
  std::vector<char> used(nv, 0);
  for (const auto& set : partition) {
    const std::size_t root = sets.find(board.vertex_index(set.vertices.front()));
    for (const Vertex& v : set.vertices) {
      if (sets.find(board.vertex_index(v)) != root) return false;
    }
    if (used[root]) return false;
    used[root] = 1;
  }
  return true;
}

std::size_t component_count(int n) { return Board::get(n)->partition().size(); }

std::size_t grove_edge_count(int n) {
  const auto board = Board::get(n);
  return board->vertices().size() - board->partition().size();
}

std::vector<Edge> canonical_edges(std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::make(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Grove::Grove(std::shared_ptr<const Board> board, std::vector<Edge> edges) : board_(std::move(board)) {
  for (Edge& e : edges) e = Edge::make(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  const auto violations = validate_grove(*board_, edges);
  if (!violations.empty()) {
    throw Error(ErrorCode::InvalidGrove,
                std::string(axiom_name(violations.front().axiom)) + ": " + violations.front().message);
  }
  edges_ = std::move(edges);
}

Grove::Grove(int n, std::vector<Edge> edges) : Grove(Board::get(n), std::move(edges)) {}

Grove Grove::assume_valid(std::shared_ptr<const Board> board, std::vector<Edge> edges) {
  return Grove(Trusted{}, std::move(board), std::move(edges));
}

bool Grove::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::make(e.a, e.b));
}

Grove target_grove(int n) {
  const auto board = Board::get(n);
  std::vector<Edge> edges;
  auto diagonal = [&](Vertex from, Vertex to) {
    for (Vertex v = from; v != to; v = step(v, Direction::SE)) edges.push_back(Edge::make(v, step(v, Direction::SE)));
  };
  auto horizontal = [&](Vertex from, Vertex to) {
    const Vertex lo = std::min(from, to);
    const Vertex hi = std::max(from, to);
    for (Vertex v = lo; v != hi; v = step(v, Direction::E)) edges.push_back(Edge::make(v, step(v, Direction::E)));
  };

  for (const BoundarySet& set : board->partition()) {
    const int i = set.param;
    switch (set.kind) {
      case SetKind::Corner:
        break;
      case SetKind::East:
        diagonal({i, 0}, {(n + i) / 2, (i - n) / 2});
        break;
      case SetKind::West: {
        const Vertex corner{(n - 3 * i) / 2, (i - n) / 2};
        diagonal({-i, 0}, corner);
        horizontal(corner, {(-n - i) / 2, (i - n) / 2});
        break;
      }
      case SetKind::South:
        horizontal({-n + i, -i}, {n - i, -i});
        break;
      case SetKind::Middle:
        diagonal({0, 0}, {n / 2, -n / 2});
        horizontal({n / 2, -n / 2}, {-n / 2, -n / 2});
        break;
    }
  }
  return Grove(board, std::move(edges));
}

std::vector<std::vector<Vertex>> components(const Grove& g) {
  const Board& board = g.board();
  DisjointSets sets(board.vertices().size());
  for (const Edge& e : g.edges()) sets.unite(board.vertex_index(e.a), board.vertex_index(e.b));
  std::map<std::size_t, std::vector<Vertex>> by_root;
  for (const Vertex& v : board.vertices()) by_root[sets.find(board.vertex_index(v))].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeMask edge_mask(const Grove& g) {
  const Board& board = g.board();
  EdgeMask mask((board.edges().size() + 63) / 64, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t k = *board.edge_index(e);
    mask[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  return mask;
}

std::size_t EdgeMaskHash::operator()(const EdgeMask& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : m) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace trigrove
