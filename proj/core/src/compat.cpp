#include "symfitch/compat.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace symfitch {

bool displays(const std::vector<LeafMask>& edge_sides, LeafMask all, const Subsplit& s) {
  const LeafMask a = s.first();
  const LeafMask b = s.second();
  for (LeafMask side : edge_sides) {
    const LeafMask other = all & ~side;
    if (((a & ~side) == 0 && (b & side) == 0) || ((a & ~other) == 0 && (b & other) == 0)) return true;
  }
  return false;
}

bool displays(const Topology& tree, const Subsplit& s) {
  if ((s.support() & ~tree.leaves_mask()) != 0) {
    throw ValidationError("unknown-leaf", "subsplit names leaves outside the tree");
  }
  return displays(tree.edge_sides(), tree.leaves_mask(), s);
}

std::optional<std::pair<Subsplit, Subsplit>> pairwise_quick_reject(const std::vector<Subsplit>& subsplits) {
  for (std::size_t i = 0; i < subsplits.size(); ++i) {
    for (std::size_t j = i + 1; j < subsplits.size(); ++j) {
      if (subsplits[i].conflicts_with(subsplits[j])) return std::make_pair(subsplits[i], subsplits[j]);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Subsplit, Subsplit>> pairwise_quick_reject(const SubsplitSystem& system) {
  return pairwise_quick_reject(system.subsplits());
}

namespace {

// A subsplit restricted to the leaves inserted so far.
struct Check {
  LeafMask a;
  LeafMask b;
};

// Shared state of one (possibly parallel) search run.
struct SearchControl {
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> timed_out{false};
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};

  bool expired() {
    if (timed_out.load(std::memory_order_relaxed)) return true;
    if (deadline && Clock::now() >= *deadline) {
      timed_out = true;
      return true;
    }
    return false;
  }
};

// Partial binary tree rooted at the first leaf of the insertion order. Every
// non-root vertex stands for the edge to its parent; its cluster is the set
// of inserted leaves below it.
class InsertionSearch {
 public:
  enum class Result { kFound, kExhausted, kAborted };

  InsertionSearch(std::size_t leaf_count, const std::vector<std::size_t>& order, std::size_t branching,
                  const std::vector<std::vector<Check>>& checks)
      : n_(leaf_count), order_(order), branching_(branching), checks_(checks) {
    const std::size_t capacity = 2 * n_ + 2;
    parent_.assign(capacity, kNone);
    cluster_.assign(capacity, 0);
    reset();
  }

  // Star on the first three leaves of the order.
  void reset() {
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::fill(cluster_.begin(), cluster_.end(), 0);
    members_.clear();
    history_.clear();
    next_inner_ = n_;
    const std::size_t center = next_inner_++;
    parent_[center] = order_[0];
    cluster_[center] = leaf_bit(order_[1]) | leaf_bit(order_[2]);
    for (std::size_t i = 1; i < 3; ++i) {
      parent_[order_[i]] = center;
      cluster_[order_[i]] = leaf_bit(order_[i]);
    }
    members_ = {center, order_[1], order_[2]};
  }

  // Inserts order_[step] on edge `edge`; returns false (and undoes) if a
  // subsplit becomes violated.
  bool place(std::size_t step, std::size_t edge) {
    insert(order_[step], members_[edge]);
    for (const Check& c : checks_[step]) {
      if (!displayed(c)) {
        remove(order_[step]);
        return false;
      }
    }
    return true;
  }

  void unplace(std::size_t step) { remove(order_[step]); }

  Result search(std::size_t step, std::size_t task, SearchControl& control) {
    if (step == branching_) return Result::kFound;
    const std::size_t edges = members_.size();
    for (std::size_t e = 0; e < edges; ++e) {
      if ((++local_nodes_ & 0xFFF) == 0) {
        control.nodes.fetch_add(0x1000, std::memory_order_relaxed);
        if (control.expired()) return Result::kAborted;
      }
      if (control.best_task.load(std::memory_order_relaxed) < task) return Result::kAborted;
      if (!place(step, e)) continue;
      Result r = search(step + 1, task, control);
      if (r == Result::kFound) return r;
      unplace(step);
      if (r == Result::kAborted) return r;
    }
    return Result::kExhausted;
  }

  // Prefixes of length `depth` that survive pruning, in search order.
  void frontier(std::size_t step, std::size_t depth, std::vector<std::size_t>& path,
                std::vector<std::vector<std::size_t>>& out) {
    if (step == depth) {
      out.push_back(path);
      return;
    }
    const std::size_t edges = members_.size();
    for (std::size_t e = 0; e < edges; ++e) {
      if (!place(step, e)) continue;
      path.push_back(e);
      frontier(step + 1, depth, path, out);
      path.pop_back();
      unplace(step);
    }
  }

  void replay(const std::vector<std::size_t>& path) {
    reset();
    for (std::size_t i = 0; i < path.size(); ++i) insert(order_[3 + i], members_[path[i]]);
  }

  // Attaches the non-branching leaves and returns the full topology.
  Topology finish() {
    for (std::size_t step = branching_; step < order_.size(); ++step) insert(order_[step], members_[0]);
    Topology t;
    t.leaf_count = n_;
    t.vertex_count = n_;
    std::vector<std::size_t> remap(parent_.size(), kNone);
    for (std::size_t v = 0; v < n_; ++v) remap[v] = v;
    for (std::size_t v = n_; v < next_inner_; ++v) remap[v] = t.add_vertex();
    for (std::size_t v : members_) t.add_edge(remap[v], remap[parent_[v]]);
    return t;
  }

  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool displayed(const Check& c) const {
    for (std::size_t v : members_) {
      const LeafMask side = cluster_[v];
      if (((c.a & ~side) == 0 && (c.b & side) == 0) || ((c.b & ~side) == 0 && (c.a & side) == 0)) {
        return true;
      }
    }
    return false;
  }

  void insert(std::size_t leaf, std::size_t below) {
    const std::size_t w = next_inner_++;
    const std::size_t above = parent_[below];
    parent_[w] = above;
    parent_[below] = w;
    parent_[leaf] = w;
    cluster_[leaf] = leaf_bit(leaf);
    cluster_[w] = cluster_[below] | leaf_bit(leaf);
    for (std::size_t u = above; parent_[u] != kNone; u = parent_[u]) cluster_[u] |= leaf_bit(leaf);
    members_.push_back(w);
    members_.push_back(leaf);
    history_.push_back(below);
  }

  // Undoes the most recent insert, which must have inserted `leaf`.
  void remove(std::size_t leaf) {
    members_.pop_back();
    const std::size_t w = members_.back();
    members_.pop_back();
    const std::size_t below = history_.back();
    history_.pop_back();
    const std::size_t above = parent_[w];
    parent_[below] = above;
    for (std::size_t u = above; parent_[u] != kNone; u = parent_[u]) cluster_[u] &= ~leaf_bit(leaf);
    parent_[w] = kNone;
    parent_[leaf] = kNone;
    cluster_[w] = 0;
    cluster_[leaf] = 0;
    --next_inner_;
  }

  std::size_t n_;
  const std::vector<std::size_t>& order_;
  std::size_t branching_;
  const std::vector<std::vector<Check>>& checks_;
  std::vector<std::size_t> parent_;
  std::vector<LeafMask> cluster_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> history_;
  std::size_t next_inner_ = 0;
  std::uint64_t local_nodes_ = 0;
};

Topology small_tree(std::size_t n) {
  Topology t;
  t.leaf_count = n;
  t.vertex_count = n;
  if (n == 2) t.add_edge(0, 1);
  return t;
}

}  // namespace

CompatibilityVerdict exact_compatibility(const std::vector<Subsplit>& subsplits, std::size_t leaf_count,
                                         const SearchOptions& options) {
  using Outcome = CompatibilityVerdict::Outcome;
  CompatibilityVerdict verdict;
  const LeafMask all = all_leaves(leaf_count);
  std::vector<Subsplit> hard;
  for (const auto& s : subsplits) {
    if ((s.support() & ~all) != 0) {
      throw ValidationError("unknown-leaf", "subsplit names leaves outside the ground set");
    }
    if (!s.is_trivial()) hard.push_back(s);
  }
  if (auto pair = pairwise_quick_reject(hard)) {
    verdict.outcome = Outcome::kIncompatible;
    verdict.conflicting_pair = pair;
    return verdict;
  }
  if (leaf_count < 3) {
    verdict.outcome = Outcome::kCompatible;
    verdict.witness = small_tree(leaf_count);
    return verdict;
  }

  LeafMask involved = 0;
  for (const auto& s : hard) involved |= s.support();
  if (static_cast<std::size_t>(leaf_count_of(involved)) > options.max_leaves) {
    throw ResourceLimitError("exact search would branch over " + std::to_string(leaf_count_of(involved)) +
                             " leaves, above the cap of " + std::to_string(options.max_leaves) +
                             " (raise it with --max-leaves)");
  }
  std::vector<std::size_t> order;
  for_each_leaf(involved, [&](std::size_t x) { order.push_back(x); });
  const std::size_t branching = std::max<std::size_t>(order.size(), 3);
  for_each_leaf(all & ~involved, [&](std::size_t x) { order.push_back(x); });

  // checks[i]: subsplits through order[i] whose restriction to order[0..i]
  // has two leaves on each side. Earlier leaves were checked before.
  std::vector<std::vector<Check>> checks(order.size());
  LeafMask placed = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    placed |= leaf_bit(order[i]);
    if (i < 3) continue;
    for (const auto& s : hard) {
      if ((s.support() & leaf_bit(order[i])) == 0) continue;
      const LeafMask a = s.first() & placed;
      const LeafMask b = s.second() & placed;
      if (leaf_count_of(a) >= 2 && leaf_count_of(b) >= 2) checks[i].push_back({a, b});
    }
  }
  SearchControl control;
  if (options.time_budget.count() > 0) {
    control.deadline = SearchControl::Clock::now() + options.time_budget;
  }

  std::optional<Topology> witness;
  bool exhausted = false;
  if (options.jobs <= 1 || branching <= 4) {
    InsertionSearch search(leaf_count, order, branching, checks);
    auto r = search.search(3, 0, control);
    verdict.nodes_explored = search.local_nodes();
    if (r == InsertionSearch::Result::kFound) witness = search.finish();
    exhausted = r == InsertionSearch::Result::kExhausted;
  } else {
    // Split the tree of choices at a fixed depth; tasks run in any order but
    // the lowest-index success wins, which is the sequential answer.
    InsertionSearch probe(leaf_count, order, branching, checks);
    std::vector<std::vector<std::size_t>> tasks;
    std::size_t depth = 3;
    while (depth < branching) {
      ++depth;
      tasks.clear();
      std::vector<std::size_t> path;
      probe.reset();
      probe.frontier(3, depth, path, tasks);
      if (tasks.size() >= 8 * options.jobs) break;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<Topology> best;
    std::vector<char> exhausted_task(tasks.size(), 0);
    std::uint64_t total_nodes = 0;
    auto worker = [&] {
      InsertionSearch local(leaf_count, order, branching, checks);
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        if (control.best_task.load() < i) break;
        local.replay(tasks[i]);
        const auto r = local.search(3 + tasks[i].size(), i, control);
        std::lock_guard lock(mu);
        if (r == InsertionSearch::Result::kExhausted) exhausted_task[i] = 1;
        if (r == InsertionSearch::Result::kFound && i < control.best_task.load()) {
          control.best_task = i;
          best = local.finish();
        }
      }
      std::lock_guard lock(mu);
      total_nodes += local.local_nodes();
    };
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < options.jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    verdict.nodes_explored = total_nodes;
    // A witness counts only if every earlier task was searched to the end;
    // otherwise the sequential search might have stopped somewhere else.
    const std::size_t first = control.best_task.load();
    const bool earlier_done = std::all_of(exhausted_task.begin(), exhausted_task.begin() +
                                              static_cast<std::ptrdiff_t>(std::min(first, tasks.size())),
                                          [](char d) { return d != 0; });
    if (best && earlier_done) witness = std::move(best);
    exhausted = !best && !control.timed_out;
  }

  if (witness) {
    verdict.outcome = Outcome::kCompatible;
    verdict.witness = std::move(witness);
  } else if (exhausted) {
    verdict.outcome = Outcome::kIncompatible;
    verdict.search_exhausted = true;
  } else {
    verdict.outcome = Outcome::kUndecided;
    verdict.note = "time budget of " + std::to_string(options.time_budget.count()) +
                   " ms exhausted before the search finished";
  }
  return verdict;
}

CompatibilityVerdict exact_compatibility(const SubsplitSystem& system, const SearchOptions& options) {
  return exact_compatibility(system.subsplits(), system.leaf_count(), options);
}

SplitSystem::SplitSystem(std::size_t leaf_count, std::vector<Subsplit> splits)
    : leaf_count_(leaf_count), splits_(std::move(splits)) {
  const LeafMask all = all_leaves(leaf_count);
  for (const auto& s : splits_) {
    if (!s.is_split_of(all)) throw ValidationError("not-a-split", "subsplit does not cover every leaf");
  }
}

bool SplitSystem::has_all_trivial() const {
  const LeafMask all = all_leaves(leaf_count_);
  for (std::size_t x = 0; x < leaf_count_; ++x) {
    const Subsplit trivial(leaf_bit(x), all & ~leaf_bit(x));
    if (std::find(splits_.begin(), splits_.end(), trivial) == splits_.end()) return false;
  }
  return true;
}

SplitSystem splits_of(const Topology& tree) {
  const LeafMask all = tree.leaves_mask();
  std::vector<Subsplit> splits;
  for (LeafMask side : tree.edge_sides()) splits.emplace_back(side, all & ~side);
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  return SplitSystem(tree.leaf_count, std::move(splits));
}

std::optional<Topology> tree_from_splits(const SplitSystem& system) {
  const std::size_t n = system.leaf_count();
  if (n < 3) throw PreconditionError("split reconstruction needs at least three leaves");
  if (!system.has_all_trivial()) throw PreconditionError("split system must contain every trivial split");
  if (pairwise_quick_reject(system.splits())) return std::nullopt;

  const LeafMask all = all_leaves(n);
  // Clusters are the sides without leaf 0; the tree hangs off leaf 0.
  std::vector<LeafMask> clusters;
  for (const auto& s : system.splits()) {
    if (s.is_trivial()) continue;
    clusters.push_back((s.first() & leaf_bit(0)) ? s.second() : s.first());
  }
  auto min_side = [&](LeafMask c) {
    return std::min(leaf_count_of(c), leaf_count_of(all & ~c));
  };
  std::stable_sort(clusters.begin(), clusters.end(),
                   [&](LeafMask a, LeafMask b) { return min_side(a) < min_side(b); });

  // Star: leaf 0 - center - every other leaf.
  std::vector<std::size_t> parent(n + 1, n);
  std::vector<LeafMask> below(n + 1, 0);
  const std::size_t center = n;
  parent[center] = 0;
  below[center] = all & ~leaf_bit(0);
  for (std::size_t x = 1; x < n; ++x) {
    parent[x] = center;
    below[x] = leaf_bit(x);
  }
  for (LeafMask c : clusters) {
    // Smallest inner vertex cluster containing c.
    std::size_t host = center;
    for (std::size_t v = n; v < below.size(); ++v) {
      if ((c & ~below[v]) == 0 && leaf_count_of(below[v]) < leaf_count_of(below[host])) host = v;
    }
    std::vector<std::size_t> moved;
    LeafMask covered = 0;
    for (std::size_t v = 1; v < below.size(); ++v) {
      if (parent[v] != host) continue;
      if ((below[v] & ~c) == 0) {
        moved.push_back(v);
        covered |= below[v];
      } else if ((below[v] & c) != 0) {
        return std::nullopt;
      }
    }
    if (covered != c) return std::nullopt;
    if (below[host] == c) continue;  // already present
    const std::size_t w = parent.size();
    parent.push_back(host);
    below.push_back(c);
    for (std::size_t v : moved) parent[v] = w;
  }

  Topology t;
  t.leaf_count = n;
  t.vertex_count = parent.size();
  for (std::size_t v = 1; v < parent.size(); ++v) t.add_edge(v, parent[v]);
  return t;
}

std::string canonical_form(const Topology& tree) {
  const auto adj = tree.adjacency();
  auto render = [&](auto&& self, std::size_t v, std::size_t from) -> std::string {
    if (tree.is_leaf(v) && from != tree.vertex_count) return std::to_string(v);
    std::vector<std::string> parts;
    for (std::size_t e : adj[v]) {
      const std::size_t w = tree.edges[e].first == v ? tree.edges[e].second : tree.edges[e].first;
      if (w != from) parts.push_back(self(self, w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    s += ")";
    if (tree.is_leaf(v)) s += std::to_string(v);
    return s;
  };
  if (tree.vertex_count == 0) return "()";
  return render(render, 0, tree.vertex_count);
}

}  // namespace symfitch
