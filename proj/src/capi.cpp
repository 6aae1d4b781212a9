#include "trigrove/trigrove.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "trigrove/documents.hpp"
#include "trigrove/enumeration.hpp"
#include "trigrove/render.hpp"

struct tg_grove {
  trigrove::Grove grove;
};

namespace {

using namespace trigrove;

thread_local std::string last_message;
thread_local std::string last_code;

tg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGrove:
    case ErrorCode::InvalidAst:
    case ErrorCode::IllegalSpin: return TG_INVALID;
    case ErrorCode::InvalidArgument:
    case ErrorCode::Parse: return TG_BAD_INPUT;
    case ErrorCode::BudgetExceeded: return TG_BUDGET;
    case ErrorCode::NotExact:
    case ErrorCode::Internal: return TG_INTERNAL;
  }
  return TG_INTERNAL;
}

tg_status fail(tg_status status, const char* code, const std::string& message) {
  last_code = code;
  last_message = message;
  return status;
}

template <class F>
tg_status guarded(F&& body) {
  last_code.clear();
  last_message.clear();
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), error_code_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TG_INTERNAL, "internal-error", "out of memory");
  } catch (const std::exception& e) {
    return fail(TG_INTERNAL, "internal-error", e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

tg_grove* wrap(Grove g) { return new tg_grove{std::move(g)}; }

}  // namespace

extern "C" {

const char* tg_last_error(void) { return last_message.c_str(); }
const char* tg_last_error_code(void) { return last_code.c_str(); }
void tg_string_free(char* s) { std::free(s); }

tg_status tg_grove_target(int n, tg_grove** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(target_grove(n));
    return TG_OK;
  });
}

tg_status tg_grove_from_json(const char* text, tg_grove** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    GroveDoc doc = parse_grove(text);
    *out = wrap(Grove(doc.n, std::move(doc.edges)));
    return TG_OK;
  });
}

void tg_grove_free(tg_grove* g) { delete g; }

int tg_grove_size(const tg_grove* g) { return g ? g->grove.size() : 0; }

tg_status tg_grove_to_json(const tg_grove* g, char** out) {
  return guarded([&] {
    need(g, "grove");
    need(out, "out");
    *out = copy_out(emit_grove(g->grove));
    return TG_OK;
  });
}

tg_status tg_validate_json(const char* grove_json, char** report) {
  return guarded([&] {
    need(grove_json, "text");
    need(report, "report");
    const GroveDoc doc = parse_grove(grove_json);
    const auto violations = validate_grove(*Board::get(doc.n), doc.edges);
    nlohmann::ordered_json r;
    r["valid"] = violations.empty();
    r["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : violations) {
      nlohmann::ordered_json item;
      item["axiom"] = axiom_name(v.axiom);
      item["message"] = v.message;
      r["violations"].push_back(std::move(item));
    }
    *report = copy_out(r.dump());
    if (violations.empty()) return TG_OK;
    return fail(TG_INVALID, "invalid-grove", violations.front().message);
  });
}

tg_status tg_grove_ast_json(const tg_grove* g, char** out) {
  return guarded([&] {
    need(g, "grove");
    need(out, "out");
    *out = copy_out(emit_ast(grove_to_ast(g->grove)));
    return TG_OK;
  });
}

tg_status tg_grove_diff_json(const tg_grove* g, char** out) {
  return guarded([&] {
    need(g, "grove");
    need(out, "out");
    *out = copy_out(emit_diff(diff_grove(g->grove)));
    return TG_OK;
  });
}

tg_status tg_grove_apply_spin(const tg_grove* g, int pivot_i, int pivot_j, const char* from, const char* to,
                              tg_grove** out) {
  return guarded([&] {
    need(g, "grove");
    need(from, "from");
    need(to, "to");
    need(out, "out");
    const auto d1 = parse_direction(from);
    const auto d2 = parse_direction(to);
    if (!d1 || !d2) throw Error(ErrorCode::Parse, std::string("unknown direction \"") + (d1 ? to : from) + "\"");
    *out = wrap(apply_spin(g->grove, Spin{{pivot_i, pivot_j}, *d1, *d2}));
    return TG_OK;
  });
}

tg_status tg_grove_reduce(const tg_grove* g, int clockwise_only, char** spins_json, tg_reduce_stats* stats) {
  return guarded([&] {
    need(g, "grove");
    need(spins_json, "out");
    ReduceOptions options;
    options.clockwise_only = clockwise_only != 0;
    const Reduction r = reduce_to_target(g->grove, options);
    if (stats) {
      *stats = {r.stats.closing_spins, r.stats.slide_steps,  r.stats.slide_spins,
                r.stats.search_phases, r.stats.search_spins, r.stats.exhaustive_fallbacks};
    }
    *spins_json = copy_out(emit_spins(r.sequence));
    return TG_OK;
  });
}

tg_status tg_grove_replay(const tg_grove* g, const char* spins_json, tg_grove** out) {
  return guarded([&] {
    need(g, "grove");
    need(spins_json, "spins");
    need(out, "out");
    const SpinSeq seq = parse_spins(spins_json);
    if (seq.n != g->grove.size()) {
      throw Error(ErrorCode::Parse, "spin sequence is for size " + std::to_string(seq.n) + ", grove has size " +
                                        std::to_string(g->grove.size()));
    }
    *out = wrap(replay_spins(g->grove, seq.spins));
    return TG_OK;
  });
}

tg_status tg_grove_render_svg(const tg_grove* g, int diff, char** out) {
  return guarded([&] {
    need(g, "grove");
    need(out, "out");
    *out = copy_out(diff ? render_diff_svg(diff_grove(g->grove)) : render_svg(g->grove.size(), g->grove.edges()));
    return TG_OK;
  });
}

tg_status tg_diff_render_svg(const char* diff_json, char** out) {
  return guarded([&] {
    need(diff_json, "text");
    need(out, "out");
    const DiffGrove d = parse_diff(diff_json);
    const auto board = Board::get(d.n);
    for (const auto* list : {&d.red, &d.black, &d.blue}) {
      for (const Edge& e : *list) {
        if (!board->has_edge(e)) throw Error(ErrorCode::InvalidGrove, "edge is not on the board");
      }
    }
    *out = copy_out(render_diff_svg(d));
    return TG_OK;
  });
}

tg_status tg_enumerate(int n, int asts, tg_line_fn line, void* user, size_t* count) {
  return guarded([&] {
    std::size_t total = 0;
    if (asts) {
      const auto all = enumerate_asts(n);
      total = all.size();
      if (line) {
        for (const Ast& a : all) line(emit_ast(a).c_str(), user);
      }
    } else {
      const auto& all = enumerate_groves(n);
      total = all.size();
      if (line) {
        for (const Grove& g : all) line(emit_grove(g).c_str(), user);
      }
    }
    if (count) *count = total;
    return TG_OK;
  });
}

tg_status tg_verify_moves(int n, size_t* nodes, size_t* edges, int* connected) {
  return guarded([&] {
    const MoveGraphReport r = verify_move_connectivity(n);
    if (nodes) *nodes = r.node_count;
    if (edges) *edges = r.edge_count;
    if (connected) *connected = r.connected ? 1 : 0;
    if (r.connected) return TG_OK;
    return fail(TG_INVALID, "not-connected", "move graph of size " + std::to_string(n) + " is disconnected");
  });
}

tg_status tg_verify_spins(int n, size_t* groves, int* max_distance, int* connected) {
  return guarded([&] {
    const SpinGraphReport r = verify_spin_connectivity(n);
    if (groves) *groves = r.grove_count;
    if (max_distance) *max_distance = r.max_distance;
    if (connected) *connected = r.connected ? 1 : 0;
    if (r.connected) return TG_OK;
    return fail(TG_INVALID, "not-connected", "spin graph of size " + std::to_string(n) + " is disconnected");
  });
}

tg_status tg_move_path_json(const char* from_ast_json, const char* to_ast_json, int clockwise_only, char** out) {
  return guarded([&] {
    need(from_ast_json, "from");
    need(to_ast_json, "to");
    need(out, "out");
    const Ast a = parse_ast(from_ast_json);
    const Ast b = parse_ast(to_ast_json);
    MovePathOptions options;
    options.clockwise_only = clockwise_only != 0;
    *out = copy_out(emit_moves(a.size(), move_path(a, b, options)));
    return TG_OK;
  });
}

tg_status tg_cube_level_json(int level, int with_terms, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_out(emit_level_summary(level_summary(level), with_terms != 0));
    return TG_OK;
  });
}

tg_status tg_cube_term_count(int level, size_t* count) {
  return guarded([&] {
    need(count, "count");
    *count = level_summary(level).term_count;
    return TG_OK;
  });
}

}  // extern "C"
