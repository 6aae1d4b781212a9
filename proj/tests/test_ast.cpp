#include "doctest.h"
#include "support.hpp"
#include "trigrove/ast.hpp"
#include "trigrove/enumeration.hpp"

using namespace trigrove;

TEST_SUITE("ast") {
  TEST_CASE("figure 2 triangle") {
    CHECK(grove_to_ast(support::figure2()) == Ast(support::Rows{{0, 1, 0, 0}, {0, -1, 1}, {1, 0}, {0}}));
    CHECK(ast_sum(grove_to_ast(support::figure2())) == 2);
  }

  TEST_CASE("small cases") {
    CHECK(grove_to_ast(target_grove(2)) == Ast(support::Rows{{1, 0}, {0}}));
    CHECK(grove_to_ast(target_grove(1)) == Ast(support::Rows{{1}}));
    CHECK(grove_to_ast(support::small_grove()) == Ast(support::Rows{{0, 1}, {0}}));
  }

  TEST_CASE("identity") {
    CHECK(identity_ast(4) == Ast(support::Rows{{1, 0, 0, 0}, {0, 1, 0}, {0, 0}, {0}}));
    CHECK(identity_ast(1) == Ast(support::Rows{{1}}));
    CHECK(identity_ast(2) == Ast(support::Rows{{1, 0}, {0}}));
    CHECK(ast_sum(identity_ast(5)) == 3);
    CHECK(ast_sum(identity_ast(1)) == 1);
    for (int n = 1; n <= 10; ++n) CHECK(grove_to_ast(target_grove(n)) == identity_ast(n));
  }

  TEST_CASE("shape is checked") {
    CHECK_THROWS_AS(Ast(support::Rows{{1, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(Ast(support::Rows{}), Error);
  }

  TEST_CASE("indexing round trip") {
    for (int n = 1; n <= 6; ++n) {
      for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n + 1 - r; ++c) {
          const Vertex a = apex_of_entry(n, r, c);
          CHECK(Board::get(n)->is_apex(a));
          CHECK(entry_of_apex(n, a) == std::make_pair(r, c));
        }
      }
    }
  }

  TEST_CASE("moves") {
    auto r = apply_move(Ast(support::Rows{{0, 1}, {0}}), {1, 1, MoveKind::M1, MoveSign::Subtract});
    CHECK(r.array == Ast(support::Rows{{1, 0}, {0}}));
    CHECK(r.entries_in_range);

    r = apply_move(Ast(support::Rows{{1, 0}, {0}}), {1, 1, MoveKind::M3, MoveSign::Add});
    CHECK(r.array == Ast(support::Rows{{1, -1}, {1}}));
    CHECK(r.entries_in_range);

    CHECK_THROWS_AS(apply_move(identity_ast(4), {4, 1, MoveKind::M1, MoveSign::Add}), Error);
    CHECK_THROWS_AS(apply_move(identity_ast(4), {1, 4, MoveKind::M1, MoveSign::Add}), Error);
    CHECK_FALSE(apply_move(identity_ast(2), {1, 1, MoveKind::M2, MoveSign::Add}).entries_in_range);
  }

  TEST_CASE("move deltas cancel") {
    for (int k = 0; k < 3; ++k) {
      int total = 0;
      for (MoveKind m : {MoveKind::M1, MoveKind::M2, MoveKind::M3}) total += move_deltas(m)[static_cast<std::size_t>(k)];
      CHECK(total == 0);
    }
  }

  TEST_CASE("moves preserve the sum and invert") {
    for (int n = 2; n <= 4; ++n) {
      for (const Ast& a : enumerate_asts(n)) {
        for (int r = 1; r <= n - 1; ++r) {
          for (int c = 1; c <= n - r; ++c) {
            for (MoveKind k : {MoveKind::M1, MoveKind::M2, MoveKind::M3}) {
              const Ast up = apply_move(a, {r, c, k, MoveSign::Add}).array;
              CHECK(ast_sum(up) == ast_sum(a));
              CHECK(apply_move(up, {r, c, k, MoveSign::Subtract}).array == a);
            }
          }
        }
      }
    }
  }

  TEST_CASE("entries and sums over enumerated groves") {
    for (int n = 1; n <= 5; ++n) {
      for (const Grove& g : enumerate_groves(n)) {
        const Ast a = grove_to_ast(g);
        CHECK(a.entries_in_range());
        CHECK(ast_sum(a) == (n + 1) / 2);
      }
    }
  }
}
