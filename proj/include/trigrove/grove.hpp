#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "trigrove/board.hpp"

namespace trigrove {

enum class Axiom { Universe, Acyclicity, Connectivity };

const char* axiom_name(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::string message;
  std::vector<Vertex> witness;
};

/// Checks an edge set against the grove axioms. Empty result means valid.
std::vector<Violation> validate_grove(const Board& board, std::span<const Edge> edges);

/// Fast boolean form of validate_grove.
bool is_valid_grove(const Board& board, std::span<const Edge> edges);

/// Number of boundary-partition sets, i.e. components of every grove of size n.
std::size_t component_count(int n);
/// Edge count shared by every grove of size n (forest identity V - C).
std::size_t grove_edge_count(int n);

class Grove {
 public:
  /// Validates the edges; throws Error(InvalidGrove) on any violation.
  Grove(std::shared_ptr<const Board> board, std::vector<Edge> edges);
  Grove(int n, std::vector<Edge> edges);

  /// Skips validation. `edges` must already be a canonical (sorted,
  /// canonically oriented) valid grove on `board`.
  static Grove assume_valid(std::shared_ptr<const Board> board, std::vector<Edge> edges);

  int size() const { return board_->size(); }
  const Board& board() const { return *board_; }
  const std::shared_ptr<const Board>& board_ptr() const { return board_; }
  std::span<const Edge> edges() const { return edges_; }
  bool contains(const Edge& e) const;

  friend bool operator==(const Grove& x, const Grove& y) {
    return x.size() == y.size() && x.edges_ == y.edges_;
  }
  friend std::strong_ordering operator<=>(const Grove& x, const Grove& y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    return x.edges_ <=> y.edges_;
  }

 private:
  struct Trusted {};
  Grove(Trusted, std::shared_ptr<const Board> board, std::vector<Edge> edges)
      : board_(std::move(board)), edges_(std::move(edges)) {}

  std::shared_ptr<const Board> board_;
  std::vector<Edge> edges_;
};

/// Sorts, orients and deduplicates an edge list.
std::vector<Edge> canonical_edges(std::vector<Edge> edges);

Grove target_grove(int n);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Grove& g);

/// Bitset of universe edge indices; a compact hashable key for searches.
using EdgeMask = std::vector<std::uint64_t>;
EdgeMask edge_mask(const Grove& g);

struct EdgeMaskHash {
  std::size_t operator()(const EdgeMask& m) const noexcept;
};

}  // namespace trigrove
