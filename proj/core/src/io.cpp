#include "symfitch/io.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <tuple>
#include <set>
#include <sstream>

#include "json.hpp"

namespace symfitch {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed-json", e.what());
  }
}

[[noreturn]] void bad_shape(const std::string& what) { throw ValidationError("malformed-document", what); }

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.is_array()) bad_shape("'" + field + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) bad_shape("'" + field + "' must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::pair<std::string, std::string> two_strings(const json& j, const std::string& field) {
  auto v = string_list(j, field);
  if (v.size() != 2) bad_shape("'" + field + "' must name exactly two vertices");
  return {v[0], v[1]};
}

std::string label_text(const LabeledTree& tree, const ColorLabel& label) {
  std::string s = "{";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + tree.colors()[label[i]];
  return s + "}";
}

bool needs_quotes(const std::string& name) {
  return name.find_first_of(" \t\n()[]':;,") != std::string::npos;
}

std::string newick_name(const std::string& name) {
  if (!needs_quotes(name)) return name;
  std::string s = "'";
  for (char c : name) s += c == '\'' ? std::string("''") : std::string(1, c);
  return s + "'";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Header fields one per line, then one compact line per list entry.
std::string layout(const std::vector<std::pair<std::string, ordered_json>>& header, const std::string& list_name,
                   const std::vector<ordered_json>& entries) {
  std::string s = "{\n";
  for (const auto& [key, value] : header) s += "  " + json(key).dump() + ": " + value.dump() + ",\n";
  s += "  " + json(list_name).dump() + ": [";
  for (std::size_t i = 0; i < entries.size(); ++i) s += std::string(i ? "," : "") + "\n    " + entries[i].dump();
  s += entries.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

}  // namespace

MapDocument parse_map_document(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) bad_shape("a map must be a JSON object");
  MapDocument doc;
  if (!j.contains("leaves")) bad_shape("missing 'leaves'");
  doc.leaves = string_list(j["leaves"], "leaves");
  if (j.contains("colors")) doc.colors = string_list(j["colors"], "colors");
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) bad_shape("'strict' must be a boolean");
    doc.strict = j["strict"].get<bool>();
  }
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) bad_shape("'pairs' must be an array");
    for (const auto& p : j["pairs"]) {
      if (!p.is_object() || !p.contains("pair")) bad_shape("every pair entry needs a 'pair' field");
      PairEntry entry;
      std::tie(entry.first, entry.second) = two_strings(p["pair"], "pair");
      if (p.contains("colors")) entry.colors = string_list(p["colors"], "colors");
      doc.pairs.push_back(std::move(entry));
    }
  }
  return doc;
}

SymmetricMap read_map(std::string_view json_text) { return build_map(parse_map_document(json_text)); }

std::string write_map(const SymmetricMap& map) {
  const MapDocument doc = to_document(map);
  std::vector<ordered_json> pairs;
  for (const auto& p : doc.pairs) pairs.push_back({{"pair", {p.first, p.second}}, {"colors", p.colors}});
  return layout({{"leaves", ordered_json(doc.leaves)}, {"colors", ordered_json(doc.colors)}, {"strict", true}},
                "pairs", pairs);
}

TreeDocument parse_tree_document(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) bad_shape("a tree must be a JSON object");
  TreeDocument doc;
  for (const char* field : {"vertices", "edges", "leaves"}) {
    if (!j.contains(field)) bad_shape(std::string("missing '") + field + "'");
  }
  doc.vertices = string_list(j["vertices"], "vertices");
  doc.leaves = string_list(j["leaves"], "leaves");
  if (j.contains("colors")) doc.colors = string_list(j["colors"], "colors");
  if (!j["edges"].is_array()) bad_shape("'edges' must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("ends")) bad_shape("every edge needs an 'ends' field");
    TreeEdgeEntry entry;
    std::tie(entry.first, entry.second) = two_strings(e["ends"], "ends");
    if (e.contains("colors")) entry.colors = string_list(e["colors"], "colors");
    doc.edges.push_back(std::move(entry));
  }
  return doc;
}

LabeledTree read_tree(std::string_view json_text) { return build_tree(parse_tree_document(json_text)); }

std::string write_tree(const LabeledTree& tree) {
  const TreeDocument doc = to_document(tree);
  std::vector<ordered_json> edges;
  for (const auto& e : doc.edges) edges.push_back({{"ends", {e.first, e.second}}, {"colors", e.colors}});
  return layout({{"leaves", ordered_json(doc.leaves)},
                 {"colors", ordered_json(doc.colors)},
                 {"vertices", ordered_json(doc.vertices)}},
                "edges", edges);
}

std::string to_newick(const LabeledTree& tree) {
  const Topology& t = tree.topology();
  const auto adj = t.adjacency();
  const std::size_t root = t.vertex_count > t.leaf_count ? t.leaf_count : 0;
  auto render = [&](auto&& self, std::size_t v, std::size_t from) -> std::string {
    std::string s;
    std::vector<std::string> children;
    for (std::size_t e : adj[v]) {
      const std::size_t w = t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
      if (w == from) continue;
      std::string child = self(self, w, v);
      if (!tree.label(e).empty()) child += "[&colors=" + label_text(tree, tree.label(e)) + "]";
      children.push_back(child + ":1");
    }
    if (!children.empty()) {
      s += "(";
      for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i];
      s += ")";
    }
    if (t.is_leaf(v)) s += newick_name(tree.leaves()[v]);
    return s;
  };
  return render(render, root, t.vertex_count) + ";\n";
}

std::string to_dot(const LabeledTree& tree) {
  static const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
                                         "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};
  auto color_of = [&](const std::string& label) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return kPalette[h % std::size(kPalette)];
  };
  const Topology& t = tree.topology();
  std::ostringstream out;
  out << "graph T {\n  node [shape=point];\n";
  for (std::size_t v = 0; v < t.leaf_count; ++v) {
    out << "  n" << v << " [shape=plaintext, label=\"" << dot_escape(tree.leaves()[v]) << "\"];\n";
  }
  for (std::size_t v = t.leaf_count; v < t.vertex_count; ++v) out << "  n" << v << ";\n";
  std::set<std::string> used;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const std::string label = label_text(tree, tree.label(e));
    out << "  n" << t.edges[e].first << " -- n" << t.edges[e].second;
    if (tree.label(e).empty()) {
      out << " [style=dashed, color=\"#555555\"];\n";
    } else {
      used.insert(label);
      out << " [color=\"" << color_of(label) << "\", penwidth=2, label=\"" << dot_escape(label) << "\"];\n";
    }
  }
  out << "  subgraph cluster_legend {\n    label=\"labels\";\n    node [shape=plaintext];\n";
  std::size_t i = 0;
  out << "    l" << i << "a [label=\"\"]; l" << i << "b [label=\"{}\"];\n";
  out << "    l" << i << "a -- l" << i << "b [style=dashed, color=\"#555555\"];\n";
  for (const auto& label : used) {
    ++i;
    out << "    l" << i << "a [label=\"\"]; l" << i << "b [label=\"" << dot_escape(label) << "\"];\n";
    out << "    l" << i << "a -- l" << i << "b [color=\"" << color_of(label) << "\", penwidth=2];\n";
  }
  out << "  }\n}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace symfitch
