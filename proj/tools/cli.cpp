#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symfitch/io.hpp"
#include "symfitch/mono.hpp"
#include "symfitch/random.hpp"
#include "symfitch/recognize.hpp"
#include "symfitch/reduction.hpp"

namespace symfitch::cli {

using nlohmann::ordered_json;

namespace {

enum class Export { kJson, kNewick, kDot };

struct Options {
  std::string input;
  std::string output;
  std::string witness_path;
  bool newick = false;
  bool dot = false;
  std::size_t max_leaves = 16;
  long long time_budget_ms = 0;
  unsigned jobs = 1;
  std::vector<std::string> extra_leaves;
  std::size_t leaves = 0;
  std::size_t colors = 1;
  std::size_t count = 0;
  double density = 0.3;
  std::optional<std::uint64_t> seed;
};

Export export_kind(const Options& o) {
  if (o.newick) return Export::kNewick;
  if (o.dot) return Export::kDot;
  return Export::kJson;
}

std::string render(const LabeledTree& tree, Export kind) {
  switch (kind) {
    case Export::kNewick:
      return to_newick(tree);
    case Export::kDot:
      return to_dot(tree);
    case Export::kJson:
      break;
  }
  return write_tree(tree);
}

ordered_json names(const LeafSet& leaves, LeafMask mask) { return names_of(leaves, mask); }

ordered_json tree_json(const LabeledTree& tree) { return ordered_json::parse(write_tree(tree)); }

void emit(std::ostream& out, const Options& o, const std::string& text) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

int report_invalid(std::ostream& out, std::ostream& err, const std::string& kind,
                   const std::vector<ValidationIssue>& issues) {
  ordered_json j;
  j["error"] = kind;
  j["issues"] = ordered_json::array();
  for (const auto& issue : issues) {
    j["issues"].push_back({{"code", issue.code}, {"message", issue.message}});
    err << "error: " << issue.message << " [" << issue.code << "]\n";
  }
  out << j.dump(2) << "\n";
  return kInvalidInput;
}

// Maps library exceptions to exit codes; `body` does the work.
template <class F>
int guarded(std::ostream& out, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    return report_invalid(out, err, "invalid-input", e.report().issues);
  } catch (const PreconditionError& e) {
    return report_invalid(out, err, "precondition-violated", {{"precondition", e.what()}});
  } catch (const ResourceLimitError& e) {
    ordered_json j{{"decision", "undecided-resource-limit"}, {"note", e.what()}};
    out << j.dump(2) << "\n";
    err << "undecided: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    return report_invalid(out, err, "invalid-input", {{"io", e.what()}});
  }
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.max_leaves = o.max_leaves;
  s.time_budget = std::chrono::milliseconds(o.time_budget_ms);
  s.jobs = std::max(1U, o.jobs);
  return s;
}

int cmd_recognize(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const SymmetricMap map = read_map(read_file(o.input));
    const RecognitionResult r = recognize(map, search_options(o));
    ordered_json j{{"decision", nullptr}, {"leaves", map.leaf_count()}, {"colors", map.color_count()}};
    int code = kResourceLimit;
    switch (r.decision) {
      case RecognitionResult::Decision::kFitch:
        j["decision"] = "fitch";
        j["witness"] = tree_json(*r.witness);
        code = kFitch;
        break;
      case RecognitionResult::Decision::kNotFitch: {
        j["decision"] = "not-fitch";
        ordered_json reason;
        if (r.non_partition) {
          const auto& v = r.non_partition->violation;
          reason["kind"] = "non-partition";
          reason["color"] = map.colors()[r.non_partition->color];
          if (v.kind == PartitionViolation::Kind::kOverlap) {
            reason["violation"] = {{"kind", "overlap"},
                                   {"first", names(map.leaves(), v.first)},
                                   {"second", names(map.leaves(), v.second)},
                                   {"leaf", map.leaves()[v.leaf]}};
          } else {
            reason["violation"] = {{"kind", "uncovered"}, {"leaf", map.leaves()[v.leaf]}};
          }
        } else if (r.conflicting_pair) {
          reason["kind"] = "incompatible-subsplits";
          reason["pair"] = {format_subsplit(r.conflicting_pair->first, map.leaves()),
                            format_subsplit(r.conflicting_pair->second, map.leaves())};
        } else {
          reason["kind"] = "search-exhausted";
        }
        j["reason"] = reason;
        code = kNotFitch;
        break;
      }
      case RecognitionResult::Decision::kUndecided:
        j["decision"] = "undecided-resource-limit";
        break;
    }
    j["note"] = r.note;
    j["stats"] = {{"nontrivial_subsplits", r.nontrivial_subsplits}, {"nodes_explored", r.nodes_explored}};
    if (r.witness && !o.witness_path.empty()) write_file(o.witness_path, render(*r.witness, export_kind(o)));
    out << j.dump(2) << "\n";
    err << j["decision"].get<std::string>() << (r.note.empty() ? "" : ": " + r.note) << "\n";
    return code;
  });
}

int cmd_explain(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const LabeledTree tree = read_tree(read_file(o.input));
    emit(out, o, write_map(explain(tree)));
    err << "explained " << tree.leaf_count() << " leaves over " << tree.colors().size() << " colors\n";
    return kFitch;
  });
}

int cmd_mono(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const SymmetricMap map = read_map(read_file(o.input));
    const RestrictedDecision d = is_restricted_fitch(map);
    ordered_json j;
    j["decision"] = d.accepted ? "fitch" : "not-fitch";
    if (d.two_colors) {
      const auto& t = *d.two_colors;
      auto pair = [&](std::pair<std::size_t, std::size_t> p) {
        return ordered_json::array({map.leaves()[p.first], map.leaves()[p.second]});
      };
      j["reason"] = {{"kind", "two-colors"},
                     {"colors", ordered_json::array({map.colors()[t.color_a], map.colors()[t.color_b]})},
                     {"pairs", ordered_json::array({pair(t.pair_a), pair(t.pair_b)})}};
    } else if (d.k1_plus_k2) {
      const auto& w = *d.k1_plus_k2;
      j["reason"] = {{"kind", "induced-k1-plus-k2"},
                     {"color", map.colors()[*d.color]},
                     {"isolated", map.leaves()[w.isolated]},
                     {"edge", ordered_json::array({map.leaves()[w.edge_u], map.leaves()[w.edge_v]})}};
    }
    if (d.accepted && map.leaf_count() >= 3) {
      const TreeFamilyDescription f = least_resolved_trees(map);
      ordered_json fam;
      fam["color"] = f.color ? ordered_json(map.colors()[*f.color]) : ordered_json(nullptr);
      fam["independent_sets"] = ordered_json::array();
      for (LeafMask part : f.independent_sets.parts) fam["independent_sets"].push_back(names(map.leaves(), part));
      fam["star_case"] = f.star_case;
      fam["inner_vertex_count"] = f.inner_vertex_count;
      fam["vertex_count"] = f.vertex_count;
      fam["constraints"] = f.constraints;
      j["family"] = fam;
      j["representative"] = tree_json(f.representative);
      if (!o.witness_path.empty()) write_file(o.witness_path, render(f.representative, export_kind(o)));
      for (const auto& c : f.constraints) err << "  " << c << "\n";
    }
    out << j.dump(2) << "\n";
    err << j["decision"].get<std::string>() << "\n";
    return d.accepted ? kFitch : kNotFitch;
  });
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const QuartetSet q = parse_quartets(read_file(o.input), o.extra_leaves);
    if (q.duplicates_removed > 0) {
      err << "warning: dropped " << q.duplicates_removed << " repeated quartet(s)\n";
    }
    emit(out, o, write_map(reduce_quartets_to_map(q)));
    err << "reduced " << q.quartets.size() << " quartet(s) on " << q.ground.size() << " leaves\n";
    return kFitch;
  });
}

int cmd_gen_tree(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const LabeledTree t = random_labeled_tree(o.leaves, ColorSet(numbered_names(o.colors)), o.density, *o.seed);
    emit(out, o, render(t, export_kind(o)));
    return kFitch;
  });
}

int cmd_gen_map(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    emit(out, o, write_map(random_symmetric_map(o.leaves, ColorSet(numbered_names(o.colors)), o.density, *o.seed)));
    return kFitch;
  });
}

int cmd_gen_quartets(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    emit(out, o, format_quartets(random_quartet_set(o.leaves, o.count, *o.seed)));
    return kFitch;
  });
}

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-leaves", o.max_leaves, "Largest number of leaves the exact search may branch over")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd->add_option("--time-budget", o.time_budget_ms, "Search time budget in milliseconds (0 = unlimited)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "Worker threads for the exact search")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

void add_export_flags(CLI::App* cmd, Options& o) {
  auto* nw = cmd->add_flag("--newick", o.newick, "Write trees as Newick");
  auto* dt = cmd->add_flag("--dot", o.dot, "Write trees as Graphviz DOT");
  nw->excludes(dt);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize symmetrized Fitch maps and build explaining edge-labeled trees"};
  app.name("symfitch");
  app.require_subcommand(1);
  Options o;

  auto* rec = app.add_subcommand("recognize", "Decide whether a map is a symmetrized Fitch map");
  rec->add_option("map", o.input, "Map JSON file")->required();
  rec->add_option("--witness", o.witness_path, "Write the explaining tree to this file");
  add_export_flags(rec, o);
  add_search_flags(rec, o);

  auto* exp = app.add_subcommand("explain", "Print the map explained by a labeled tree");
  exp->add_option("tree", o.input, "Tree JSON file")->required();
  exp->add_option("-o,--out", o.output, "Write the map here instead of stdout");

  auto* mono = app.add_subcommand("mono", "Decide a map with at most one color per pair; describe least-resolved trees");
  mono->add_option("map", o.input, "Map JSON file")->required();
  mono->add_option("--representative", o.witness_path, "Write the least-resolved representative here");
  add_export_flags(mono, o);

  auto* red = app.add_subcommand("reduce", "Turn a quartet file into a map (color i for quartet i)");
  red->add_option("quartets", o.input, "Quartet text file")->required();
  red->add_option("--leaves", o.extra_leaves, "Extra leaves for the ground set")->delimiter(',');
  red->add_option("-o,--out", o.output, "Write the map here instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->require_subcommand(1);
  auto* gen_tree = gen->add_subcommand("tree", "Random labeled binary tree");
  auto* gen_map = gen->add_subcommand("map", "Random symmetric map");
  auto* gen_q = gen->add_subcommand("quartets", "Random quartet set");
  for (auto* g : {gen_tree, gen_map, gen_q}) {
    g->add_option("-n,--leaves", o.leaves, "Number of leaves")->required();
    g->add_option("--seed", o.seed, "Random seed")->required();
    g->add_option("-o,--out", o.output, "Write here instead of stdout");
  }
  for (auto* g : {gen_tree, gen_map}) {
    g->add_option("-k,--colors", o.colors, "Number of colors")->capture_default_str();
    g->add_option("-p,--density", o.density, "Probability per (edge or pair, color)")->capture_default_str();
  }
  add_export_flags(gen_tree, o);
  gen_q->add_option("-k,--count", o.count, "Number of quartets")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string path = "symfitch";
    for (auto* cmd = &app; !cmd->get_subcommands().empty();) {
      cmd = cmd->get_subcommands().front();
      path += " " + cmd->get_name();
    }
    const int code = report_invalid(out, err, "invalid-input", {{"usage", e.what()}});
    err << "run '" << path << " --help' for usage\n";
    return code;
  }

  if (rec->parsed()) return cmd_recognize(o, out, err);
  if (exp->parsed()) return cmd_explain(o, out, err);
  if (mono->parsed()) return cmd_mono(o, out, err);
  if (red->parsed()) return cmd_reduce(o, out, err);
  if (gen_tree->parsed()) return cmd_gen_tree(o, out, err);
  if (gen_map->parsed()) return cmd_gen_map(o, out, err);
  if (gen_q->parsed()) return cmd_gen_quartets(o, out, err);
  return kInvalidInput;
}

}  // namespace symfitch::cli
