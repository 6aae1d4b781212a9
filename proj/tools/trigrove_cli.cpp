#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trigrove/trigrove.h"

namespace {

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

int exit_for(tg_status s) {
  switch (s) {
    case TG_OK: return 0;
    case TG_BAD_INPUT:
    case TG_BUDGET: return 2;
    default: return 1;
  }
}

void check(tg_status s) {
  if (s != TG_OK) throw Failure{exit_for(s), tg_last_error_code(), tg_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "io-error", "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{2, "io-error", "cannot write " + path};
}

struct GroveFree {
  void operator()(tg_grove* g) const { tg_grove_free(g); }
};
using GrovePtr = std::unique_ptr<tg_grove, GroveFree>;

GrovePtr load_grove(const std::string& path) {
  tg_grove* g = nullptr;
  check(tg_grove_from_json(read_file(path).c_str(), &g));
  return GrovePtr(g);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  tg_string_free(s);
  return out;
}

void print_grove(const tg_grove* g) {
  char* s = nullptr;
  check(tg_grove_to_json(g, &s));
  std::cout << take(s) << '\n';
}

void print_line(const char* line, void*) { std::cout << line << '\n'; }

std::pair<int, int> parse_pivot(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const int i = std::stoi(text.substr(0, comma), &used1);
    const int j = std::stoi(text.substr(comma + 1), &used2);
    if (used1 != comma || used2 != text.size() - comma - 1) throw std::invalid_argument(text);
    return {i, j};
  } catch (const std::logic_error&) {
    throw Failure{2, "invalid-argument", "pivot must look like I,J, got \"" + text + "\""};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplified groves, alternating sign triangles and spins"};
  app.require_subcommand(1);

  std::string input, second, output, seq_file, pivot, from, to;
  int n = 0;
  int level = 0;
  bool clockwise = false, count_only = false, asts = false, moves = false, spins = false, diff = false;

  auto* target = app.add_subcommand("target", "Emit the target grove");
  target->add_option("-n", n, "Size")->required();

  auto* validate = app.add_subcommand("validate", "Check a grove document against the grove axioms");
  validate->add_option("-i", input, "Grove document")->required();

  auto* to_ast = app.add_subcommand("to-ast", "Alternating sign triangle of a grove");
  to_ast->add_option("-i", input, "Grove document")->required();

  auto* diff_cmd = app.add_subcommand("diff", "Red, black and blue edges against the target grove");
  diff_cmd->add_option("-i", input, "Grove document")->required();

  auto* apply = app.add_subcommand("apply-spin", "Apply one spin");
  apply->add_option("-i", input, "Grove document")->required();
  apply->add_option("--pivot", pivot, "Pivot vertex I,J")->required();
  apply->add_option("--from", from, "Direction of the removed edge")->required();
  apply->add_option("--to", to, "Direction of the added edge")->required();

  auto* reduce = app.add_subcommand("reduce", "Spin sequence to the target grove");
  reduce->add_option("-i", input, "Grove document")->required();
  reduce->add_flag("--clockwise", clockwise, "Clockwise spins only");

  auto* replay = app.add_subcommand("replay", "Apply a spin sequence");
  replay->add_option("-i", input, "Grove document")->required();
  replay->add_option("-s", seq_file, "Spin sequence document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every grove (or AST) of a size");
  enumerate->add_option("-n", n, "Size")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_flag("--asts", asts, "Alternating sign triangles instead of groves");

  auto* verify = app.add_subcommand("verify", "Check connectivity by exhaustive search");
  verify->add_option("-n", n, "Size")->required();
  auto* moves_flag = verify->add_flag("--moves", moves, "Move graph on ASTs");
  verify->add_flag("--spins", spins, "Spin graph on groves")->excludes(moves_flag);

  auto* move_path = app.add_subcommand("move-path", "Moves between two ASTs");
  move_path->add_option("-a", input, "First AST document")->required();
  move_path->add_option("-b", second, "Second AST document")->required();
  move_path->add_flag("--clockwise", clockwise, "Reduce with clockwise spins only");

  auto* cube = app.add_subcommand("cube", "Cube recurrence at the balanced cell of a level");
  cube->add_option("--level", level, "Level i+j+k")->required();
  cube->add_flag("--count-only", count_only, "Print only the term count");

  auto* render = app.add_subcommand("render", "Draw a grove or difference grove as SVG");
  render->add_option("-i", input, "Grove or diff document")->required();
  render->add_flag("--diff", diff, "Color against the target grove");
  render->add_option("-o", output, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "trigrove: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*target) {
      tg_grove* g = nullptr;
      check(tg_grove_target(n, &g));
      print_grove(GrovePtr(g).get());
    } else if (*validate) {
      char* report = nullptr;
      const tg_status s = tg_validate_json(read_file(input).c_str(), &report);
      if (report) std::cout << take(report) << '\n';
      check(s);
    } else if (*to_ast) {
      char* s = nullptr;
      check(tg_grove_ast_json(load_grove(input).get(), &s));
      std::cout << take(s) << '\n';
    } else if (*diff_cmd) {
      char* s = nullptr;
      check(tg_grove_diff_json(load_grove(input).get(), &s));
      std::cout << take(s) << '\n';
    } else if (*apply) {
      const auto [i, j] = parse_pivot(pivot);
      tg_grove* g = nullptr;
      check(tg_grove_apply_spin(load_grove(input).get(), i, j, from.c_str(), to.c_str(), &g));
      print_grove(GrovePtr(g).get());
    } else if (*reduce) {
      char* s = nullptr;
      check(tg_grove_reduce(load_grove(input).get(), clockwise, &s, nullptr));
      std::cout << take(s) << '\n';
    } else if (*replay) {
      const std::string seq = read_file(seq_file);
      tg_grove* g = nullptr;
      check(tg_grove_replay(load_grove(input).get(), seq.c_str(), &g));
      print_grove(GrovePtr(g).get());
    } else if (*enumerate) {
      std::size_t count = 0;
      check(tg_enumerate(n, asts, count_only ? nullptr : print_line, nullptr, &count));
      if (count_only) std::cout << count << '\n';
    } else if (*verify) {
      if (!spins) {
        std::size_t nodes = 0;
        const tg_status s = tg_verify_moves(n, &nodes, nullptr, nullptr);
        if (s == TG_OK || s == TG_INVALID) {
          std::cout << (s == TG_OK ? "connected" : "disconnected") << ", " << nodes << " nodes\n";
        }
        check(s);
      }
      if (!moves) {
        std::size_t groves = 0;
        int distance = 0;
        const tg_status s = tg_verify_spins(n, &groves, &distance, nullptr);
        if (s == TG_OK || s == TG_INVALID) {
          std::cout << (s == TG_OK ? "connected" : "disconnected") << ", " << groves << " groves, max distance "
                    << distance << '\n';
        }
        check(s);
      }
    } else if (*move_path) {
      const std::string a = read_file(input);
      const std::string b = read_file(second);
      char* s = nullptr;
      check(tg_move_path_json(a.c_str(), b.c_str(), clockwise, &s));
      std::cout << take(s) << '\n';
    } else if (*cube) {
      if (count_only) {
        std::size_t terms = 0;
        check(tg_cube_term_count(level, &terms));
        std::cout << terms << '\n';
      } else {
        char* s = nullptr;
        check(tg_cube_level_json(level, 1, &s));
        std::cout << take(s) << '\n';
      }
    } else if (*render) {
      const std::string text = read_file(input);
      char* s = nullptr;
      if (text.find("\"red\"") != std::string::npos) {
        check(tg_diff_render_svg(text.c_str(), &s));
      } else {
        tg_grove* g = nullptr;
        check(tg_grove_from_json(text.c_str(), &g));
        check(tg_grove_render_svg(GrovePtr(g).get(), diff, &s));
      }
      write_file(output, take(s));
    }
  } catch (const Failure& f) {
    std::cerr << "trigrove: " << f.code << ": " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}
