#pragma once

#include <string>
#include <string_view>

#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// Map JSON:
//   {"leaves": [...], "colors": [...],
//    "pairs": [{"pair": ["a", "b"], "colors": ["1"]}, ...], "strict": false}
// Unlisted pairs are empty unless "strict" is true.
// Malformed JSON or a wrong shape is reported as a ValidationError with
// code "malformed-json" or "malformed-document".
MapDocument parse_map_document(std::string_view json_text);
SymmetricMap read_map(std::string_view json_text);
// Strict form listing every pair, two-space indented.
std::string write_map(const SymmetricMap& map);

// Tree JSON:
//   {"vertices": [...], "edges": [{"ends": ["u", "v"], "colors": [...]}],
//    "leaves": [...], "colors": [...]}
// "colors" (the universe) is optional.
TreeDocument parse_tree_document(std::string_view json_text);
LabeledTree read_tree(std::string_view json_text);
std::string write_tree(const LabeledTree& tree);

// Newick rooted at the first inner vertex (at leaf 0 for two leaves). A
// non-empty label is attached to the child end of its edge as
// [&colors={1,3}]; every edge has length 1.
std::string to_newick(const LabeledTree& tree);

// Graphviz. Edge color is chosen by a hash of the label set, a legend lists
// every label set in use, and edges labeled {} are dashed.
std::string to_dot(const LabeledTree& tree);

// Whole file as a string; throws Error if it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace symfitch
