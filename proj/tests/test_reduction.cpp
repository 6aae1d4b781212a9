#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trigrove/reduction.hpp"

using namespace trigrove;
using support::edge;
using support::sorted;

namespace {

std::size_t spin_distance(const Grove& g) {
  const auto& all = enumerate_groves(g.size());
  static std::map<int, SpinGraphReport> reports;
  auto it = reports.find(g.size());
  if (it == reports.end()) it = reports.emplace(g.size(), verify_spin_connectivity(g.size())).first;
  const auto pos = std::lower_bound(all.begin(), all.end(), g) - all.begin();
  return static_cast<std::size_t>(it->second.distance[static_cast<std::size_t>(pos)]);
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("figure 4 difference grove") {
    const DiffGrove d = diff_grove(support::figure2());
    CHECK(d.red == sorted({edge(-2, 0, -3, -1), edge(1, -1, -1, -1), edge(-1, -1, -2, -2), edge(-1, -1, 0, -2)}));
    CHECK(d.black == sorted({edge(-2, 0, -1, -1), edge(-3, -1, -1, -1), edge(1, -1, 2, -2), edge(-2, -2, 0, -2)}));
    CHECK(d.blue == sorted({edge(0, 0, 1, -1), edge(0, -2, 2, -2), edge(2, 0, 3, -1), edge(-1, -3, 1, -3)}));
  }

  TEST_CASE("small difference groves") {
    const DiffGrove t = diff_grove(target_grove(5));
    CHECK(t.red.empty());
    CHECK(t.black.empty());
    CHECK(t.blue.size() == 12);
    const DiffGrove d = diff_grove(support::small_grove());
    CHECK(d.red == sorted({edge(0, 0, -1, -1)}));
    CHECK(d.black == sorted({edge(0, 0, 1, -1)}));
    CHECK(d.blue == sorted({edge(-1, -1, 1, -1)}));
  }

  TEST_CASE("difference colours partition both edge sets") {
    for (int n = 1; n <= 4; ++n) {
      const Grove t = target_grove(n);
      for (const Grove& g : enumerate_groves(n)) {
        const DiffGrove d = diff_grove(g);
        CHECK(d.red.size() == d.black.size());
        std::vector<Edge> mine = d.red;
        mine.insert(mine.end(), d.blue.begin(), d.blue.end());
        CHECK(sorted(mine) == support::edges_of(g));
        std::vector<Edge> theirs = d.black;
        theirs.insert(theirs.end(), d.blue.begin(), d.blue.end());
        CHECK(sorted(theirs) == support::edges_of(t));
      }
    }
  }

  TEST_CASE("every broken stretch of a group touches a red edge") {
    for (int n = 2; n <= 4; ++n) {
      const Grove t = target_grove(n);
      for (const Grove& g : enumerate_groves(n)) {
        const DiffGrove d = diff_grove(g);
        for (const auto& comp : components(t)) {
          if (comp.size() < 2) continue;
          const std::set<Vertex> group(comp.begin(), comp.end());
          const bool broken = std::any_of(d.black.begin(), d.black.end(), [&](const Edge& e) { return group.count(e.a); });
          if (!broken) continue;
          // Stretches: pieces of the group held together by blue edges.
          std::map<Vertex, Vertex> root;
          for (const Vertex& v : comp) root[v] = v;
          auto find = [&](Vertex v) {
            while (root[v] != v) v = root[v];
            return v;
          };
          for (const Edge& e : d.blue) {
            if (group.count(e.a)) root[find(e.a)] = find(e.b);
          }
          std::map<Vertex, bool> touched;
          for (const Vertex& v : comp) touched.emplace(find(v), false);
          for (const Edge& r : d.red) {
            for (const Vertex& v : {r.a, r.b}) {
              if (group.count(v)) touched[find(v)] = true;
            }
          }
          for (const auto& [piece, hit] : touched) CHECK(hit);
        }
      }
    }
  }

  TEST_CASE("groups") {
    const Board& b4 = *Board::get(4);
    std::vector<std::string> labels;
    for (std::size_t k : group_order(4)) labels.push_back(group_label(b4, k));
    CHECK(labels == std::vector<std::string>{"east-2", "west-2", "south-3", "middle"});
    const Board& b5 = *Board::get(5);
    labels.clear();
    for (std::size_t k : group_order(5)) labels.push_back(group_label(b5, k));
    CHECK(labels == std::vector<std::string>{"east-3", "east-1", "west-3", "west-1", "south-4", "south-3"});
    const auto c = central_groups(5);
    REQUIRE(c.west.has_value());
    REQUIRE(c.east.has_value());
    REQUIRE(c.south.has_value());
    CHECK(group_label(b5, *c.west) == "west-1");
    CHECK(group_label(b5, *c.east) == "east-1");
    CHECK(group_label(b5, *c.south) == "south-3");
    CHECK_FALSE(central_groups(1).west.has_value());
  }

  TEST_CASE("slide step on the figure 2 grove") {
    const Grove g = support::figure2();
    const SlideResult r = slide_black_step(g, edge(1, -1, 2, -2), {-1, -1});
    REQUIRE(r.spins.size() == 1);
    CHECK(replay_spins(g, r.spins) == r.grove);
    CHECK(diff_grove(r.grove).black.size() == 4);
    // The black edge now sits next to a red edge and closes in one spin.
    const Spin close{{1, -1}, Direction::SW, Direction::SE};
    const Grove closed = apply_spin(r.grove, close);
    CHECK(diff_grove(closed).black.size() == 3);
    CHECK(closed.contains(edge(1, -1, 2, -2)));
  }

  TEST_CASE("slide step errors") {
    const Grove g = support::figure2();
    CHECK_THROWS_AS(slide_black_step(g, edge(0, 0, 1, -1), {-1, -1}), Error);
    CHECK_THROWS_AS(slide_black_step(g, edge(1, -1, 2, -2), {9, 0}), Error);
  }

  TEST_CASE("slide steps keep the black count") {
    std::size_t filled = 0;
    for (int n = 2; n <= 4; ++n) {
      for (bool cw : {false, true}) {
        for (const Grove& g : enumerate_groves(n)) {
          const DiffGrove d = diff_grove(g);
          for (const Edge& b : d.black) {
            for (const Edge& r : d.red) {
              for (const Vertex& toward : {r.a, r.b}) {
                SlideResult s{g, {}};
                try {
                  s = slide_black_step(g, b, toward, cw);
                } catch (const Error& e) {
                  CHECK(e.code() == ErrorCode::IllegalSpin);
                  continue;
                }
                CHECK_FALSE(s.spins.empty());
                CHECK(replay_spins(g, s.spins) == s.grove);
                CHECK(diff_grove(s.grove).black.size() == d.black.size());
                if (cw) {
                  for (const Spin& x : s.spins) CHECK(x.clockwise());
                }
                if (s.grove.contains(b)) ++filled;
              }
            }
          }
        }
      }
    }
    CHECK(filled > 0);
  }

  TEST_CASE("target reduces to nothing") {
    for (int n = 1; n <= 6; ++n) CHECK(reduce_to_target(target_grove(n)).sequence.spins.empty());
  }

  TEST_CASE("size-2 sequences") {
    const Grove g = support::small_grove();
    CHECK(reduce_to_target(g).sequence.spins == std::vector<Spin>{{{0, 0}, Direction::SW, Direction::SE}});
    ReduceOptions cw;
    cw.clockwise_only = true;
    CHECK(reduce_to_target(g, cw).sequence.spins ==
          std::vector<Spin>{{{1, -1}, Direction::W, Direction::NW}, {{-1, -1}, Direction::NE, Direction::E}});
  }

  TEST_CASE("figure 2 grove reduces") {
    const Grove g = support::figure2();
    for (bool cw : {false, true}) {
      ReduceOptions o;
      o.clockwise_only = cw;
      const Reduction r = reduce_to_target(g, o);
      CHECK(r.sequence.n == 4);
      CHECK(replay_spins(g, r.sequence.spins) == target_grove(4));
    }
  }

  TEST_CASE("every grove up to size 5 reduces in both modes") {
    for (int n = 1; n <= 5; ++n) {
      for (bool cw : {false, true}) {
        ReduceOptions o;
        o.clockwise_only = cw;
        for (const Grove& g : enumerate_groves(n)) {
          const Reduction r = reduce_to_target(g, o);
          CHECK(replay_spins(g, r.sequence.spins) == target_grove(n));
          CHECK(r.sequence.spins.size() >= spin_distance(g));
          CHECK(r.stats.exhaustive_fallbacks == 0);
          if (cw) {
            for (const Spin& s : r.sequence.spins) CHECK(s.clockwise());
          }
          if (n <= 4) {
            Grove cur = g;
            for (const Spin& s : r.sequence.spins) {
              cur = apply_spin(cur, s);
              const DiffGrove d = diff_grove(cur);
              CHECK(d.red.size() == d.black.size());
            }
          }
        }
      }
    }
  }

  TEST_CASE("greedy phases cover small sizes without search") {
    for (int n = 1; n <= 3; ++n) {
      for (bool cw : {false, true}) {
        ReduceOptions o;
        o.clockwise_only = cw;
        std::size_t gaps = 0;
        o.on_strategy_gap = [&](const Grove&, std::string_view) { ++gaps; };
        for (const Grove& g : enumerate_groves(n)) reduce_to_target(g, o);
        CHECK(gaps == 0);
      }
    }
  }

  TEST_CASE("reduction is deterministic") {
    for (const Grove& g : enumerate_groves(4)) CHECK(reduce_to_target(g).sequence == reduce_to_target(g).sequence);
  }

  TEST_CASE("replay errors") {
    const Grove g = support::small_grove();
    CHECK(replay_spins(g, {}) == g);
    const std::vector<Spin> bad{{{0, 0}, Direction::SE, Direction::SW}};
    try {
      replay_spins(g, bad);
      FAIL("expected a replay error");
    } catch (const ReplayError& e) {
      CHECK(e.index() == 0);
      CHECK(e.cause() == SpinFailure::NoSourceEdge);
    }
    const std::vector<Spin> late{{{0, 0}, Direction::SW, Direction::SE}, {{0, 0}, Direction::SW, Direction::SE}};
    try {
      replay_spins(g, late);
      FAIL("expected a replay error");
    } catch (const ReplayError& e) {
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("move paths") {
    CHECK(move_path(Ast(support::Rows{{0, 1}, {0}}), Ast(support::Rows{{1, 0}, {0}})) ==
          std::vector<Move>{{1, 1, MoveKind::M1, MoveSign::Subtract}});
    CHECK(move_path(identity_ast(3), identity_ast(3)).empty());
    MovePathOptions cw;
    cw.clockwise_only = true;
    const auto up = move_path(Ast(support::Rows{{0, 0}, {1}}), identity_ast(2), cw);
    CHECK_FALSE(up.empty());
    for (const Move& m : up) CHECK(m.sign == MoveSign::Add);
    CHECK_THROWS_AS(move_path(Ast(support::Rows{{1, -1}, {1}}), identity_ast(2)), Error);
    CHECK_THROWS_AS(move_path(identity_ast(2), identity_ast(3)), Error);
  }

  TEST_CASE("move paths connect every pair at size 3 through triangles") {
    const auto all = enumerate_asts(3);
    for (const Ast& a : all) {
      for (const Ast& b : all) {
        Ast cur = a;
        for (const Move& m : move_path(a, b)) {
          const MoveResult r = apply_move(cur, m);
          CHECK(std::binary_search(all.begin(), all.end(), r.array));
          cur = r.array;
        }
        CHECK(cur == b);
      }
    }
  }

  TEST_CASE("clockwise paths to the identity only add") {
    MovePathOptions cw;
    cw.clockwise_only = true;
    for (int n = 1; n <= 4; ++n) {
      const auto all = enumerate_asts(n);
      for (const Ast& a : all) {
        Ast cur = a;
        for (const Move& m : move_path(a, identity_ast(n), cw)) {
          CHECK(m.sign == MoveSign::Add);
          cur = apply_move(cur, m).array;
          CHECK(std::binary_search(all.begin(), all.end(), cur));
        }
        CHECK(cur == identity_ast(n));
      }
    }
  }
}
