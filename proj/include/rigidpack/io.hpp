#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rigidpack/graph.hpp"
#include "rigidpack/orientation_types.hpp"
#include "rigidpack/set_function.hpp"

namespace rigidpack {

using Json = nlohmann::ordered_json;

struct GraphFile {
  std::string name;
  MultiGraph graph;
  std::vector<std::string> names;  ///< empty, or one name per vertex
};

/// Parses {name, n, edges: [[u,v],...], names?}. names may be an array or an object keyed by
/// vertex index. Throws InvalidArgument with line/column or field information.
GraphFile parse_graph(const std::string& text);
GraphFile load_graph(const std::string& path);
Json graph_to_json(const GraphFile& file);
GraphFile graph_from_json(const Json& doc);
/// Canonical text: fixed key order, one edge list line, trailing newline.
std::string serialize_graph(const GraphFile& file);
void save_graph(const GraphFile& file, const std::string& path);

/// Set function syntax:
///   lmn:m,n  const:c  table:@file  tableG:[v0,v1,...]  vertex:[w0,...]:BASE
///   scale:p:BASE  shift:[r0,...]:BASE  sum(BASE)(BASE)  mod:BASE:SET=v
/// SET is V or {a,b,...}. Table files hold {"ground": g, "values": [...]} or a bare array.
/// Relative table paths resolve against base_dir. Throws InvalidArgument with the offset.
SetFunc parse_set_func(const std::string& text, int n, const std::string& base_dir = "");

/// "1,2,3" -> {1,2,3}. Throws InvalidArgument.
std::vector<Count> parse_count_list(const std::string& text);

Json set_to_json(VertexSet a);
VertexSet set_from_json(const Json& doc, int n);
Json sets_to_json(const std::vector<VertexSet>& sets);
Json edges_to_json(const std::vector<EdgeId>& ids);
std::vector<EdgeId> edges_from_json(const Json& doc, int m);
/// [[tail, head], ...] indexed by edge id.
Json orientation_to_json(const Orientation& d);
/// Throws InvalidArgument when an arc does not match its host edge.
Orientation orientation_from_json(const MultiGraph& g, const Json& doc);

std::string read_text(const std::string& path);

}  // namespace rigidpack
