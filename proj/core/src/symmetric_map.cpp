#include "symfitch/symmetric_map.hpp"

#include <map>
#include <set>
#include <utility>

namespace symfitch {

SymmetricMap::SymmetricMap(LeafSet leaves, ColorSet colors)
    : leaves_(std::move(leaves)), colors_(std::move(colors)) {
  if (leaves_.size() > kMaxLeaves) {
    throw ValidationError("too-many-leaves", "at most " + std::to_string(kMaxLeaves) +
                                                 " leaves are supported, got " +
                                                 std::to_string(leaves_.size()));
  }
  rows_.assign(colors_.size(), std::vector<LeafMask>(leaves_.size(), 0));
}

void SymmetricMap::insert(std::size_t x, std::size_t y, std::size_t color) {
  if (x == y) throw ValidationError("self-pair", "entry for identical leaves '" + leaves_[x] + "'");
  rows_[color][x] |= leaf_bit(y);
  rows_[color][y] |= leaf_bit(x);
}

void SymmetricMap::insert(std::string_view x, std::string_view y, std::string_view color) {
  insert(leaves_.require(x), leaves_.require(y), colors_.require(color));
}

std::vector<std::size_t> SymmetricMap::entry(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < colors_.size(); ++m) {
    if (has(x, y, m)) out.push_back(m);
  }
  return out;
}

std::size_t SymmetricMap::entry_size(std::size_t x, std::size_t y) const {
  std::size_t k = 0;
  for (std::size_t m = 0; m < colors_.size(); ++m) k += has(x, y, m) ? 1 : 0;
  return k;
}

bool SymmetricMap::color_used(std::size_t color) const {
  for (LeafMask r : rows_[color]) {
    if (r != 0) return true;
  }
  return false;
}

std::vector<std::size_t> SymmetricMap::used_colors() const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < colors_.size(); ++m) {
    if (color_used(m)) out.push_back(m);
  }
  return out;
}

namespace {

template <class Tag>
void check_ids(const std::vector<std::string>& ids, ValidationReport& report) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) {
      report.add(std::string("empty-") + Tag::kind, std::string("empty ") + Tag::kind + " identifier");
    } else if (!seen.insert(id).second) {
      report.add(std::string("duplicate-") + Tag::kind,
                 std::string("duplicate ") + Tag::kind + " identifier '" + id + "'");
    }
  }
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return natural_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

ValidationReport validate_map(const MapDocument& doc) {
  ValidationReport report;
  check_ids<LeafTag>(doc.leaves, report);
  check_ids<ColorTag>(doc.colors, report);
  const std::set<std::string> leaves(doc.leaves.begin(), doc.leaves.end());
  const std::set<std::string> colors(doc.colors.begin(), doc.colors.end());
  if (leaves.size() < 2) {
    report.add("too-few-leaves", "a map needs at least two leaves, got " + std::to_string(leaves.size()));
  }
  if (leaves.size() > kMaxLeaves) {
    report.add("too-many-leaves", "at most " + std::to_string(kMaxLeaves) + " leaves are supported");
  }

  std::map<std::pair<std::string, std::string>, std::set<std::string>> listed;
  for (const auto& p : doc.pairs) {
    const std::string label = "{" + p.first + "," + p.second + "}";
    bool leaves_ok = true;
    for (const auto* leaf : {&p.first, &p.second}) {
      if (!leaves.contains(*leaf)) {
        report.add("unknown-leaf", "pair " + label + " names unknown leaf '" + *leaf + "'");
        leaves_ok = false;
      }
    }
    if (p.first == p.second) {
      report.add("self-pair", "pair " + label + " joins a leaf to itself");
      continue;
    }
    std::set<std::string> cs;
    for (const auto& c : p.colors) {
      if (!colors.contains(c)) {
        report.add("unknown-color", "pair " + label + " cites color '" + c + "' outside the color set");
      }
      cs.insert(c);
    }
    if (!leaves_ok) continue;
    auto key = ordered(p.first, p.second);
    auto [it, inserted] = listed.emplace(key, cs);
    if (!inserted && it->second != cs) {
      report.add("conflicting-pair", "pair " + label + " is listed twice with different colors");
    }
  }

  if (doc.strict) {
    std::vector<std::string> sorted(leaves.begin(), leaves.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        if (!listed.contains(ordered(sorted[i], sorted[j]))) {
          report.add("missing-pair", "no entry for pair {" + sorted[i] + "," + sorted[j] + "}");
        }
      }
    }
  }
  return report;
}

SymmetricMap build_map(const MapDocument& doc) {
  auto report = validate_map(doc);
  if (!report.ok()) throw ValidationError(std::move(report));
  SymmetricMap map(LeafSet(doc.leaves), ColorSet(doc.colors));
  for (const auto& p : doc.pairs) {
    for (const auto& c : p.colors) map.insert(p.first, p.second, c);
  }
  return map;
}

MapDocument to_document(const SymmetricMap& map) {
  MapDocument doc;
  doc.leaves = map.leaves().ids();
  doc.colors = map.colors().ids();
  doc.strict = true;
  for (std::size_t x = 0; x < map.leaf_count(); ++x) {
    for (std::size_t y = x + 1; y < map.leaf_count(); ++y) {
      PairEntry p{map.leaves()[x], map.leaves()[y], {}};
      for (std::size_t m : map.entry(x, y)) p.colors.push_back(map.colors()[m]);
      doc.pairs.push_back(std::move(p));
    }
  }
  return doc;
}

SymmetricMap restrict(const SymmetricMap& map, const LeafSet& sub_leaves,
                      const ColorSet& sub_colors) {
  ValidationReport report;
  if (sub_leaves.size() < 2) report.add("too-few-leaves", "restriction needs at least two leaves");
  std::vector<std::size_t> leaf_idx;
  for (const auto& x : sub_leaves) {
    auto i = map.leaves().index_of(x);
    if (!i) {
      report.add("unknown-leaf", "leaf '" + x + "' is not in the map");
    } else {
      leaf_idx.push_back(*i);
    }
  }
  std::vector<std::size_t> color_idx;
  for (const auto& c : sub_colors) {
    auto m = map.colors().index_of(c);
    if (!m) {
      report.add("unknown-color", "color '" + c + "' is not in the map");
    } else {
      color_idx.push_back(*m);
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  SymmetricMap out(sub_leaves, sub_colors);
  for (std::size_t mi = 0; mi < color_idx.size(); ++mi) {
    for (std::size_t i = 0; i < leaf_idx.size(); ++i) {
      for (std::size_t j = i + 1; j < leaf_idx.size(); ++j) {
        if (map.has(leaf_idx[i], leaf_idx[j], color_idx[mi])) out.insert(i, j, mi);
      }
    }
  }
  return out;
}

}  // namespace symfitch
