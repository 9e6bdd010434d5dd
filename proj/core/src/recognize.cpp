#include "symfitch/recognize.hpp"

#include <stdexcept>

namespace symfitch {

namespace {

std::optional<RecognitionResult::NonPartition> first_non_partition(const SymmetricMap& map) {
  for (std::size_t m = 0; m < map.color_count(); ++m) {
    if (auto v = is_partition(neighborhood_system(map, m))) return RecognitionResult::NonPartition{m, *v};
  }
  return std::nullopt;
}

std::string describe(const SymmetricMap& map, const RecognitionResult::NonPartition& np) {
  const auto& v = np.violation;
  const std::string color = "'" + map.colors()[np.color] + "'";
  if (v.kind == PartitionViolation::Kind::kUncovered) {
    return "neighborhoods of color " + color + " do not cover leaf " + map.leaves()[v.leaf];
  }
  return "neighborhoods of color " + color + " overlap in leaf " + map.leaves()[v.leaf];
}

LabeledTree two_leaf_tree(const SymmetricMap& map) {
  Topology t;
  t.leaf_count = 2;
  t.vertex_count = 2;
  t.add_edge(0, 1);
  return LabeledTree(map.leaves(), map.colors(), std::move(t), {map.entry(0, 1)});
}

LabeledTree finish_witness(const SymmetricMap& map, const SubsplitSystem& all, const Topology& topology) {
  const auto sides = topology.edge_sides();
  for (const auto& s : all.subsplits()) {
    if (!displays(sides, topology.leaves_mask(), s)) {
      throw std::logic_error("search witness misses subsplit " + format_subsplit(s, map.leaves()));
    }
  }
  LabeledTree tree = label_by_neighborhoods(map, topology);
  if (!(explain(tree, map.colors()) == map)) {
    throw std::logic_error("labeled witness does not explain the input map");
  }
  return tree;
}

}  // namespace

LabeledTree label_by_neighborhoods(const SymmetricMap& map, const Topology& topology) {
  const LeafMask all = all_leaves(map.leaf_count());
  const auto sides = topology.edge_sides();
  std::vector<ColorLabel> labels(topology.edges.size());
  for (std::size_t m = 0; m < map.color_count(); ++m) {
    const auto sys = neighborhood_system(map, m);
    if (is_partition(sys).has_value()) continue;
    for (std::size_t e = 0; e < sides.size(); ++e) {
      const LeafMask side = sides[e];
      const LeafMask other = all & ~side;
      bool splits_pair = false;
      bool cuts_block = false;
      bool block_here = false;
      bool block_there = false;
      for (LeafMask block : sys.members) {
        if ((block & side) != 0 && (block & other) != 0) cuts_block = true;
        block_here = block_here || (block & ~side) == 0;
        block_there = block_there || (block & ~other) == 0;
      }
      splits_pair = block_here && block_there;
      if (splits_pair && !cuts_block) labels[e].push_back(m);
    }
  }
  return LabeledTree(map.leaves(), map.colors(), topology, std::move(labels));
}

std::optional<LabeledTree> build_explaining_tree(const SymmetricMap& map, const SearchOptions& options) {
  if (map.leaf_count() < 2) throw ValidationError("too-few-leaves", "a map needs at least two leaves");
  if (map.leaf_count() == 2) return two_leaf_tree(map);
  if (auto np = first_non_partition(map)) throw PreconditionError(describe(map, *np));
  const auto systems = full_subsplit_systems(map);
  auto verdict = exact_compatibility(systems.nontrivial, options);
  if (verdict.outcome == CompatibilityVerdict::Outcome::kUndecided) throw ResourceLimitError(verdict.note);
  if (!verdict.compatible()) return std::nullopt;
  return finish_witness(map, systems.all, *verdict.witness);
}

RecognitionResult recognize(const SymmetricMap& map, const SearchOptions& options) {
  using Decision = RecognitionResult::Decision;
  if (map.leaf_count() < 2) throw ValidationError("too-few-leaves", "a map needs at least two leaves");
  RecognitionResult r;
  if (map.leaf_count() == 2) {
    r.decision = Decision::kFitch;
    r.witness = two_leaf_tree(map);
    r.note = "every map on two leaves is a symmetrized Fitch map";
    return r;
  }
  if (auto np = first_non_partition(map)) {
    r.decision = Decision::kNotFitch;
    r.note = describe(map, *np);
    r.non_partition = np;
    return r;
  }
  const auto systems = full_subsplit_systems(map);
  r.nontrivial_subsplits = systems.nontrivial.size();
  CompatibilityVerdict verdict;
  try {
    verdict = exact_compatibility(systems.nontrivial, options);
  } catch (const ResourceLimitError& e) {
    r.note = e.what();
    return r;
  }
  r.nodes_explored = verdict.nodes_explored;
  switch (verdict.outcome) {
    case CompatibilityVerdict::Outcome::kCompatible:
      r.decision = Decision::kFitch;
      r.witness = finish_witness(map, systems.all, *verdict.witness);
      break;
    case CompatibilityVerdict::Outcome::kIncompatible:
      r.decision = Decision::kNotFitch;
      r.conflicting_pair = verdict.conflicting_pair;
      r.search_exhausted = verdict.search_exhausted;
      if (r.conflicting_pair) {
        r.note = "subsplits " + format_subsplit(r.conflicting_pair->first, map.leaves()) + " and " +
                 format_subsplit(r.conflicting_pair->second, map.leaves()) + " cannot share a tree";
      } else {
        r.note = "no tree displays all non-trivial subsplits (search exhausted)";
      }
      break;
    case CompatibilityVerdict::Outcome::kUndecided:
      r.note = verdict.note;
      break;
  }
  return r;
}

}  // namespace symfitch
