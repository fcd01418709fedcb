#include "rigidpack/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rigidpack/error.hpp"

namespace rigidpack {

namespace {

Count to_count(const std::string& token, const std::string& what) {
  Count value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidArgument(what + ": expected an integer, got '" + token + "'");
  }
  return value;
}

int field_int(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw InvalidArgument("graph file: missing field '" + key + "'");
  const Json& value = doc.at(key);
  if (!value.is_number_integer()) {
    throw InvalidArgument("graph file: field '" + key + "' must be an integer");
  }
  return value.get<int>();
}

class FuncParser {
 public:
  FuncParser(std::string text, int n, std::string base_dir)
      : text_(std::move(text)), n_(n), base_dir_(std::move(base_dir)) {}

  SetFunc run() { return parse(0, text_.size()); }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw InvalidArgument("set function '" + text_ + "' at offset " + std::to_string(at) +
                          ": " + message);
  }

  bool starts(std::size_t at, std::size_t end, const std::string& prefix) const {
    return end - at >= prefix.size() && text_.compare(at, prefix.size(), prefix) == 0;
  }

  Count number(std::size_t at, std::size_t end) const {
    std::string token = text_.substr(at, end - at);
    try {
      return to_count(token, "number");
    } catch (const InvalidArgument&) {
      fail(at, "expected an integer, got '" + token + "'");
    }
  }

  /// Parses "[a,b,...]" starting at `at`; returns the position after ']'.
  std::size_t list(std::size_t at, std::size_t end, std::vector<Count>& out) const {
    if (at >= end || text_[at] != '[') fail(at, "expected '['");
    std::size_t close = text_.find(']', at);
    if (close == std::string::npos || close >= end) fail(at, "unterminated list");
    std::size_t pos = at + 1;
    while (pos < close) {
      std::size_t comma = text_.find(',', pos);
      if (comma == std::string::npos || comma > close) comma = close;
      out.push_back(number(pos, comma));
      pos = comma + 1;
    }
    return close + 1;
  }

  std::size_t expect_colon(std::size_t at, std::size_t end) const {
    if (at >= end || text_[at] != ':') fail(at, "expected ':'");
    return at + 1;
  }

  std::size_t matching_paren(std::size_t open, std::size_t end) const {
    int depth = 0;
    for (std::size_t i = open; i < end; ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return i;
    }
    fail(open, "unbalanced parenthesis");
  }

  VertexSet target(std::size_t at, std::size_t end) const {
    if (end - at == 1 && text_[at] == 'V') return VertexSet::full(n_);
    std::string body = text_.substr(at, end - at);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
      fail(at, "expected V or {a,b,...}");
    }
    VertexSet set;
    std::size_t pos = at + 1;
    std::size_t close = end - 1;
    while (pos < close) {
      std::size_t comma = text_.find(',', pos);
      if (comma == std::string::npos || comma > close) comma = close;
      Count v = number(pos, comma);
      if (v < 0 || v >= n_) fail(pos, "vertex " + std::to_string(v) + " out of range");
      set = set.with(static_cast<VertexId>(v));
      pos = comma + 1;
    }
    return set;
  }

  SetFunc table_file(std::size_t at, std::size_t end) const {
    std::filesystem::path path(text_.substr(at, end - at));
    if (path.is_relative() && !base_dir_.empty()) path = std::filesystem::path(base_dir_) / path;
    Json doc;
    try {
      doc = Json::parse(read_text(path.string()));
    } catch (const Json::parse_error& e) {
      fail(at, std::string("table file: ") + e.what());
    }
    Json values = doc.is_array() ? doc : doc.value("values", Json::array());
    std::vector<Count> table;
    for (const Json& v : values) {
      if (!v.is_number_integer()) fail(at, "table file: values must be integers");
      table.push_back(v.get<Count>());
    }
    int ground = 0;
    if (doc.is_object() && doc.contains("ground")) {
      ground = doc.at("ground").get<int>();
    } else {
      while ((std::size_t{1} << ground) < table.size()) ++ground;
    }
    return SetFunc::table(ground, std::move(table));
  }

  SetFunc parse(std::size_t at, std::size_t end) const {
    if (at >= end) fail(at, "empty expression");
    if (starts(at, end, "lmn:")) {
      std::size_t comma = text_.find(',', at + 4);
      if (comma == std::string::npos || comma >= end) fail(at + 4, "expected m,n");
      return SetFunc::lmn(number(at + 4, comma), number(comma + 1, end));
    }
    if (starts(at, end, "const:")) return SetFunc::constant(number(at + 6, end));
    if (starts(at, end, "table:@")) return table_file(at + 7, end);
    if (starts(at, end, "table")) {
      std::size_t colon = text_.find(':', at);
      if (colon == std::string::npos || colon >= end) fail(at, "expected tableG:[...]");
      Count ground = number(at + 5, colon);
      std::vector<Count> values;
      if (list(colon + 1, end, values) != end) fail(colon + 1, "trailing characters");
      return SetFunc::table(static_cast<int>(ground), std::move(values));
    }
    if (starts(at, end, "vertex:") || starts(at, end, "shift:")) {
      bool vertex = starts(at, end, "vertex:");
      std::vector<Count> values;
      std::size_t pos = list(at + (vertex ? 7 : 6), end, values);
      SetFunc base = parse(expect_colon(pos, end), end);
      if (vertex) {
        if (base.kind() != SetFunc::Kind::Constant) fail(pos, "vertex base must be const:c");
        return SetFunc::vertex_weighted(std::move(values), base(VertexSet::full(2)));
      }
      return base.shifted(std::move(values));
    }
    if (starts(at, end, "scale:")) {
      std::size_t colon = text_.find(':', at + 6);
      if (colon == std::string::npos || colon >= end) fail(at + 6, "expected scale:p:BASE");
      return parse(colon + 1, end).scaled(number(at + 6, colon));
    }
    if (starts(at, end, "sum(")) {
      std::size_t close = matching_paren(at + 3, end);
      if (close + 1 >= end || text_[close + 1] != '(') fail(close + 1, "expected '('");
      std::size_t close2 = matching_paren(close + 1, end);
      if (close2 + 1 != end) fail(close2 + 1, "trailing characters");
      return parse(at + 4, close).plus(parse(close + 2, close2));
    }
    if (starts(at, end, "mod:")) {
      std::size_t colon = text_.rfind(':', end - 1);
      if (colon == std::string::npos || colon < at + 4) fail(at, "expected mod:BASE:SET=v");
      std::size_t eq = text_.find('=', colon);
      if (eq == std::string::npos || eq >= end) fail(colon, "expected SET=v");
      SetFunc base = parse(at + 4, colon);
      return base.with_override(target(colon + 1, eq), number(eq + 1, end));
    }
    fail(at, "unknown function '" + text_.substr(at, end - at) + "'");
  }

  std::string text_;
  int n_;
  std::string base_dir_;
};

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GraphFile graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("graph file: top level must be an object");
  GraphFile file;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw InvalidArgument("graph file: 'name' must be a string");
    file.name = doc.at("name").get<std::string>();
  }
  int n = field_int(doc, "n");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    throw InvalidArgument("graph file: 'edges' must be an array");
  }
  std::vector<Edge> edges;
  const Json& list = doc.at("edges");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InvalidArgument("graph file: edge " + std::to_string(i) + " must be [u, v]");
    }
    edges.push_back(Edge{e[0].get<VertexId>(), e[1].get<VertexId>()});
  }
  file.graph = MultiGraph(n, std::move(edges));
  if (doc.contains("names")) {
    const Json& names = doc.at("names");
    file.names.assign(n, "");
    if (names.is_array()) {
      if (static_cast<int>(names.size()) != n) {
        throw InvalidArgument("graph file: 'names' must list n names");
      }
      for (int v = 0; v < n; ++v) file.names[v] = names[v].get<std::string>();
    } else if (names.is_object()) {
      for (const auto& [key, value] : names.items()) {
        Count v = to_count(key, "graph file: names key");
        if (v < 0 || v >= n) throw InvalidArgument("graph file: names key " + key + " out of range");
        file.names[v] = value.get<std::string>();
      }
    } else {
      throw InvalidArgument("graph file: 'names' must be an array or object");
    }
  }
  return file;
}

GraphFile parse_graph(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("graph file: ") + e.what());
  }
  try {
    return graph_from_json(doc);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("graph file: ") + e.what());
  }
}

GraphFile load_graph(const std::string& path) {
  try {
    return parse_graph(read_text(path));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

Json graph_to_json(const GraphFile& file) {
  Json doc;
  doc["name"] = file.name;
  doc["n"] = file.graph.n();
  Json edges = Json::array();
  for (const Edge& e : file.graph.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (!file.names.empty()) doc["names"] = file.names;
  return doc;
}

std::string serialize_graph(const GraphFile& file) {
  std::ostringstream os;
  os << "{\n  \"name\": " << Json(file.name).dump() << ",\n  \"n\": " << file.graph.n()
     << ",\n  \"edges\": [";
  for (EdgeId e = 0; e < file.graph.m(); ++e) {
    const Edge& edge = file.graph.edge(e);
    os << (e ? "," : "") << '[' << edge.u << ',' << edge.v << ']';
  }
  os << ']';
  if (!file.names.empty()) os << ",\n  \"names\": " << Json(file.names).dump();
  os << "\n}\n";
  return os.str();
}

void save_graph(const GraphFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_graph(file);
}

SetFunc parse_set_func(const std::string& text, int n, const std::string& base_dir) {
  return FuncParser(text, n, base_dir).run();
}

std::vector<Count> parse_count_list(const std::string& text) {
  std::vector<Count> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(to_count(text.substr(pos, comma - pos), "list"));
    pos = comma + 1;
  }
  return out;
}

Json set_to_json(VertexSet a) { return a.members(); }

VertexSet set_from_json(const Json& doc, int n) {
  if (!doc.is_array()) throw InvalidArgument("vertex set must be an array");
  VertexSet set;
  for (const Json& v : doc) {
    int x = v.get<int>();
    if (x < 0 || x >= n) throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
    set = set.with(x);
  }
  return set;
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_to_json(s));
  return out;
}

Json edges_to_json(const std::vector<EdgeId>& ids) { return ids; }

std::vector<EdgeId> edges_from_json(const Json& doc, int m) {
  if (!doc.is_array()) throw InvalidArgument("edge list must be an array");
  std::vector<EdgeId> ids;
  for (const Json& e : doc) {
    int id = e.get<int>();
    if (id < 0 || id >= m) throw InvalidArgument("edge " + std::to_string(id) + " out of range");
    ids.push_back(id);
  }
  return ids;
}

Json orientation_to_json(const Orientation& d) {
  Json arcs = Json::array();
  for (EdgeId e = 0; e < d.host().m(); ++e) arcs.push_back({d.tail(e), d.head(e)});
  return arcs;
}

Orientation orientation_from_json(const MultiGraph& g, const Json& doc) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != g.m()) {
    throw InvalidArgument("orientation must list one arc per edge");
  }
  Orientation d(g);
  for (EdgeId e = 0; e < g.m(); ++e) {
    VertexId tail = doc[e][0].get<VertexId>();
    VertexId head = doc[e][1].get<VertexId>();
    const Edge& edge = g.edge(e);
    if (!((tail == edge.u && head == edge.v) || (tail == edge.v && head == edge.u))) {
      throw InvalidArgument("arc " + std::to_string(e) + " does not match its edge");
    }
    d.set_tail(e, tail);
  }
  return d;
}

}  // namespace rigidpack
