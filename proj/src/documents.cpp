#include "trigrove/documents.hpp"

#include <algorithm>

#include "json.hpp"

namespace trigrove {

namespace {

using json = nlohmann::ordered_json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<int>();
}

int size_field(const json& doc) {
  const int n = as_int(field(doc, "n"), "n");
  if (n < 1) bad("n must be at least 1");
  return n;
}

json vertex_json(Vertex v) { return json::array({v.i, v.j}); }

Vertex vertex_from(const json& v) {
  if (!v.is_array() || v.size() != 2) bad("a vertex must be a pair [i,j]");
  return {as_int(v[0], "vertex coordinate"), as_int(v[1], "vertex coordinate")};
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(json::array({vertex_json(e.a), vertex_json(e.b)}));
  return out;
}

std::vector<Edge> edges_from(const json& list) {
  if (!list.is_array()) bad("edges must be a list");
  std::vector<Edge> out;
  for (const json& e : list) {
    if (!e.is_array() || e.size() != 2) bad("an edge must be a pair of vertices");
    const Vertex a = vertex_from(e[0]);
    const Vertex b = vertex_from(e[1]);
    if (a == b) bad("an edge must join two distinct vertices");
    out.push_back(Edge::make(a, b));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) bad("duplicate edge");
  return out;
}

Direction direction_from(const json& v) {
  if (!v.is_string()) bad("a direction must be a string");
  const auto d = parse_direction(v.get<std::string>());
  if (!d) bad("unknown direction \"" + v.get<std::string>() + "\"");
  return *d;
}

}  // namespace

std::string emit_grove(const Grove& g) {
  json doc;
  doc["n"] = g.size();
  doc["edges"] = edges_json({g.edges().begin(), g.edges().end()});
  return doc.dump();
}

GroveDoc parse_grove(std::string_view text) {
  const json doc = parse_text(text);
  return {size_field(doc), edges_from(field(doc, "edges"))};
}

std::string emit_ast(const Ast& a) {
  json doc;
  doc["n"] = a.size();
  doc["rows"] = a.rows();
  return doc.dump();
}

Ast parse_ast(std::string_view text) {
  const json doc = parse_text(text);
  const int n = size_field(doc);
  const json& rows = field(doc, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) bad("rows must hold n lists");
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(n) - r) {
      bad("row " + std::to_string(r + 1) + " must have " + std::to_string(n - static_cast<int>(r)) + " entries");
    }
    std::vector<int> row;
    for (const json& x : rows[r]) row.push_back(as_int(x, "an entry"));
    out.push_back(std::move(row));
  }
  return Ast(std::move(out));
}

std::string emit_spins(const SpinSeq& seq) {
  json doc;
  doc["n"] = seq.n;
  json list = json::array();
  for (const Spin& s : seq.spins) {
    json item;
    item["pivot"] = vertex_json(s.pivot);
    item["from"] = direction_name(s.from);
    item["to"] = direction_name(s.to);
    list.push_back(std::move(item));
  }
  doc["spins"] = std::move(list);
  return doc.dump();
}

SpinSeq parse_spins(std::string_view text) {
  const json doc = parse_text(text);
  SpinSeq out;
  out.n = size_field(doc);
  const json& list = field(doc, "spins");
  if (!list.is_array()) bad("spins must be a list");
  for (const json& item : list) {
    out.spins.push_back({vertex_from(field(item, "pivot")), direction_from(field(item, "from")),
                         direction_from(field(item, "to"))});
  }
  return out;
}

std::string emit_diff(const DiffGrove& d) {
  json doc;
  doc["n"] = d.n;
  doc["red"] = edges_json(d.red);
  doc["black"] = edges_json(d.black);
  doc["blue"] = edges_json(d.blue);
  return doc.dump();
}

DiffGrove parse_diff(std::string_view text) {
  const json doc = parse_text(text);
  return {size_field(doc), edges_from(field(doc, "red")), edges_from(field(doc, "black")),
          edges_from(field(doc, "blue"))};
}

std::string emit_moves(int n, const std::vector<Move>& moves) {
  json doc;
  doc["n"] = n;
  json list = json::array();
  for (const Move& m : moves) {
    json item;
    item["row"] = m.row;
    item["col"] = m.col;
    item["kind"] = move_kind_name(m.kind);
    item["sign"] = m.sign == MoveSign::Add ? "+" : "-";
    list.push_back(std::move(item));
  }
  doc["moves"] = std::move(list);
  return doc.dump();
}

std::string emit_level_summary(const LevelSummary& s, bool terms) {
  json doc;
  doc["level"] = s.level;
  doc["cell"] = json::array({s.cell.i, s.cell.j, s.cell.k});
  doc["terms"] = s.term_count;
  doc["max_abs_coefficient"] = s.max_abs_coefficient.str();
  doc["all_coefficients_one"] = s.all_coefficients_one;
  if (terms) {
    json list = json::array();
    const auto& all = s.value.terms();
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      json exps = json::array();
      for (const auto& [v, e] : it->first) exps.push_back(json::array({v.i, v.j, v.k, e}));
      json item;
      item["coefficient"] = it->second.str();
      item["exponents"] = std::move(exps);
      list.push_back(std::move(item));
    }
    doc["monomials"] = std::move(list);
  }
  return doc.dump();
}

}  // namespace trigrove
