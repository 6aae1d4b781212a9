#include "trigrove/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "trigrove/error.hpp"
#include "trigrove/spin.hpp"

namespace trigrove {

namespace {

void check_budget(int n, int limit, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "size must be >= 1");
  if (n > limit) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " is limited to n <= " + std::to_string(limit) +
                                               ", requested n = " + std::to_string(n));
  }
}

// Edge-by-edge include/exclude search. A component is checked as soon as
// none of its vertices has an undecided edge left ("closed"): it must then
// hold exactly one whole boundary set.
class GroveSearch {
 public:
  explicit GroveSearch(std::shared_ptr<const Board> board)
      : board_(std::move(board)),
        edges_(board_->edges().begin(), board_->edges().end()),
        target_edges_(grove_edge_count(board_->size())) {
    const std::size_t nv = board_->vertices().size();
    for (const BoundarySet& set : board_->partition()) set_size_.push_back(static_cast<int>(set.vertices.size()));
    parent_.resize(nv);
    open_.assign(nv, 1);
    label_.assign(nv, -1);
    set_members_.assign(nv, 0);
    closing_.resize(edges_.size());
    std::vector<std::size_t> last(nv, 0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      last[board_->vertex_index(edges_[k].a)] = k;
      last[board_->vertex_index(edges_[k].b)] = k;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      parent_[v] = static_cast<int>(v);
      label_[v] = board_->partition_set_of(board_->vertices()[v]);
      set_members_[v] = label_[v] >= 0 ? 1 : 0;
      closing_[last[v]].push_back(v);
    }
  }

  std::vector<Grove> run() {
    recurse(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  struct Undo {
    std::vector<int>* array;
    std::size_t index;
    int old;
  };

  std::size_t find(std::size_t x) const {
    while (parent_[x] != static_cast<int>(x)) x = static_cast<std::size_t>(parent_[x]);
    return x;
  }

  void assign(std::vector<int>& array, std::size_t index, int value) {
    undo_.push_back({&array, index, array[index]});
    array[index] = value;
  }

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      const Undo u = undo_.back();
      undo_.pop_back();
      (*u.array)[u.index] = u.old;
    }
  }

  // Union without path compression so that rollback stays exact.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (label_[a] >= 0 && label_[b] >= 0 && label_[a] != label_[b]) return false;
    if (open_[a] > open_[b]) std::swap(a, b);
    assign(parent_, a, static_cast<int>(b));
    assign(open_, b, open_[a] + open_[b]);
    assign(set_members_, b, set_members_[a] + set_members_[b]);
    if (label_[b] < 0) assign(label_, b, label_[a]);
    return true;
  }

  bool close_vertices(std::size_t k) {
    for (std::size_t v : closing_[k]) {
      const std::size_t r = find(v);
      assign(open_, r, open_[r] - 1);
      if (open_[r] == 0) {
        if (label_[r] < 0 || set_members_[r] != set_size_[static_cast<std::size_t>(label_[r])]) return false;
      }
    }
    return true;
  }

  void recurse(std::size_t k) {
    if (k == edges_.size()) {
      if (chosen_.size() == target_edges_) found_.push_back(Grove::assume_valid(board_, chosen_));
      return;
    }
    if (chosen_.size() + (edges_.size() - k) < target_edges_) return;

    const std::size_t mark = undo_.size();
    if (chosen_.size() < target_edges_ &&
        unite(board_->vertex_index(edges_[k].a), board_->vertex_index(edges_[k].b))) {
      chosen_.push_back(edges_[k]);
      if (close_vertices(k)) recurse(k + 1);
      chosen_.pop_back();
      rollback(mark);
    }
    if (close_vertices(k)) recurse(k + 1);
    rollback(mark);
  }

  std::shared_ptr<const Board> board_;
  std::vector<Edge> edges_;
  std::size_t target_edges_;
  std::vector<int> set_size_;
  std::vector<int> parent_;
  std::vector<int> open_;
  std::vector<int> label_;
  std::vector<int> set_members_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<Undo> undo_;
  std::vector<Edge> chosen_;
  std::vector<Grove> found_;
};

}  // namespace

const std::vector<Grove>& enumerate_groves(int n, const EnumerationLimits& limits) {
  check_budget(n, limits.max_grove_size, "grove enumeration");
  static std::mutex mutex;
  static std::map<int, std::vector<Grove>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GroveSearch(Board::get(n)).run()).first;
  return it->second;
}

std::vector<Ast> enumerate_asts(int n, const EnumerationLimits& limits) {
  std::vector<Ast> out;
  for (const Grove& g : enumerate_groves(n, limits)) out.push_back(grove_to_ast(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Grove> ast_preimages(const Ast& a, const EnumerationLimits& limits) {
  std::vector<Grove> out;
  for (const Grove& g : enumerate_groves(a.size(), limits)) {
    if (grove_to_ast(g) == a) out.push_back(g);
  }
  return out;
}

MoveGraphReport verify_move_connectivity(int n, const EnumerationLimits& limits) {
  check_budget(n, limits.max_move_graph_size, "move-graph construction");
  const std::vector<Ast> nodes = enumerate_asts(n, limits);
  std::map<Ast, std::size_t> index;
  for (std::size_t k = 0; k < nodes.size(); ++k) index.emplace(nodes[k], k);

  std::vector<std::vector<std::size_t>> adj(nodes.size());
  std::size_t edge_count = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (int r = 1; r <= n - 1; ++r) {
      for (int c = 1; c <= n - r; ++c) {
        for (MoveKind kind : {MoveKind::M1, MoveKind::M2, MoveKind::M3}) {
          // Subtraction edges are the additions seen from the other end.
          const auto moved = apply_move(nodes[k], Move{r, c, kind, MoveSign::Add});
          if (!moved.entries_in_range) continue;
          auto it = index.find(moved.array);
          if (it == index.end()) continue;
          adj[k].push_back(it->second);
          adj[it->second].push_back(k);
          ++edge_count;
        }
      }
    }
  }

  auto eccentricity = [&](std::size_t src, std::size_t& reached) {
    std::vector<int> dist(nodes.size(), -1);
    dist[src] = 0;
    std::deque<std::size_t> q{src};
    int far = 0;
    reached = 1;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          far = std::max(far, dist[y]);
          ++reached;
          q.push_back(y);
        }
      }
    }
    return far;
  };

  MoveGraphReport report;
  report.n = n;
  report.node_count = nodes.size();
  report.edge_count = edge_count;
  std::size_t reached = 0;
  eccentricity(0, reached);
  report.connected = reached == nodes.size();
  if (report.connected) {
    int diameter = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) diameter = std::max(diameter, eccentricity(k, reached));
    report.diameter = diameter;
  }
  return report;
}

SpinGraphReport verify_spin_connectivity(int n, const EnumerationLimits& limits) {
  const std::vector<Grove>& groves = enumerate_groves(n, limits);
  std::unordered_map<EdgeMask, std::size_t, EdgeMaskHash> index;
  for (std::size_t k = 0; k < groves.size(); ++k) index.emplace(edge_mask(groves[k]), k);

  SpinGraphReport report;
  report.n = n;
  report.grove_count = groves.size();
  report.distance.assign(groves.size(), -1);

  std::unordered_map<EdgeMask, int, EdgeMaskHash> seen;
  const Grove target = target_grove(n);
  std::deque<Grove> q{target};
  seen.emplace(edge_mask(target), 0);
  while (!q.empty()) {
    Grove g = std::move(q.front());
    q.pop_front();
    const EdgeMask key = edge_mask(g);
    const int d = seen.at(key);
    if (auto it = index.find(key); it != index.end()) report.distance[it->second] = d;
    report.max_distance = std::max(report.max_distance, d);
    for (const Spin& s : legal_spins(g)) {
      Grove next = apply_spin(g, s);
      if (seen.emplace(edge_mask(next), d + 1).second) q.push_back(std::move(next));
    }
  }
  report.reached = static_cast<std::size_t>(
      std::count_if(report.distance.begin(), report.distance.end(), [](int d) { return d >= 0; }));
  // Everything reachable must be a grove the enumerator also produced.
  report.connected = report.reached == groves.size() && seen.size() == groves.size();
  return report;
}

}  // namespace trigrove
