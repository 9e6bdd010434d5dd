#include "symfitch/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "symfitch/random.hpp"

namespace symfitch {

QuartetSet make_quartet_set(LeafSet ground, const std::vector<Subsplit>& quartets) {
  QuartetSet q;
  const LeafMask all = all_leaves(ground.size());
  q.ground = std::move(ground);
  std::set<Subsplit> seen;
  for (const auto& s : quartets) {
    if (!s.is_quartet()) throw ValidationError("not-a-quartet", "every entry needs two leaves on each side");
    if ((s.support() & ~all) != 0) throw ValidationError("unknown-leaf", "quartet leaves must lie in the ground set");
    if (seen.insert(s).second) {
      q.quartets.push_back(s);
    } else {
      ++q.duplicates_removed;
    }
  }
  return q;
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

QuartetSet parse_quartets(std::string_view text, const std::vector<std::string>& extra_leaves) {
  struct Raw {
    std::vector<std::string> a;
    std::vector<std::string> b;
  };
  std::vector<Raw> raws;
  std::vector<std::string> names = extra_leaves;
  ValidationReport report;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_words(line).empty()) continue;
    const auto bar = line.find('|');
    const std::string where = "line " + std::to_string(line_no);
    if (bar == std::string_view::npos || line.find('|', bar + 1) != std::string_view::npos) {
      report.add("malformed-quartet", where + ": expected exactly one '|'");
      continue;
    }
    Raw r{split_words(line.substr(0, bar)), split_words(line.substr(bar + 1))};
    if (r.a.size() != 2 || r.b.size() != 2) {
      report.add("malformed-quartet", where + ": expected two leaves on each side");
      continue;
    }
    std::set<std::string> distinct{r.a[0], r.a[1], r.b[0], r.b[1]};
    if (distinct.size() != 4) {
      report.add("malformed-quartet", where + ": a quartet needs four distinct leaves");
      continue;
    }
    names.insert(names.end(), distinct.begin(), distinct.end());
    raws.push_back(std::move(r));
  }
  if (!report.ok()) throw ValidationError(report);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  LeafSet ground(names);
  std::vector<Subsplit> quartets;
  for (const auto& r : raws) quartets.emplace_back(mask_of(ground, r.a), mask_of(ground, r.b));
  return make_quartet_set(std::move(ground), quartets);
}

std::string format_quartets(const QuartetSet& q) {
  std::string out;
  for (const auto& s : q.quartets) out += format_subsplit(s, q.ground) + "\n";
  return out;
}

SymmetricMap reduce_quartets_to_map(const QuartetSet& q) {
  const std::size_t n = q.ground.size();
  if (n < 2) throw ValidationError("too-few-leaves", "a map needs at least two leaves");
  SymmetricMap map(q.ground, ColorSet(numbered_names(q.quartets.size())));
  for (std::size_t i = 0; i < q.quartets.size(); ++i) {
    const LeafMask ab = q.quartets[i].first();
    const LeafMask cd = q.quartets[i].second();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const LeafMask pair = leaf_bit(x) | leaf_bit(y);
        if (pair != ab && pair != cd) map.insert(x, y, i);
      }
    }
  }
  return map;
}

std::vector<Subsplit> all_quartets(std::size_t n) {
  std::vector<Subsplit> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          out.emplace_back(leaf_bit(a) | leaf_bit(b), leaf_bit(c) | leaf_bit(d));
          out.emplace_back(leaf_bit(a) | leaf_bit(c), leaf_bit(b) | leaf_bit(d));
          out.emplace_back(leaf_bit(a) | leaf_bit(d), leaf_bit(b) | leaf_bit(c));
        }
      }
    }
  }
  return out;
}

QuartetSet random_quartet_set(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n > kMaxLeaves) throw ValidationError("too-many-leaves", "at most 64 leaves are supported");
  auto pool = all_quartets(n);
  if (k > pool.size()) {
    throw ValidationError("too-many-quartets", "asked for " + std::to_string(k) + " quartets but only " +
                                                   std::to_string(pool.size()) + " exist on " +
                                                   std::to_string(n) + " leaves");
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
  return make_quartet_set(LeafSet(default_leaf_names(n)), pool);
}

}  // namespace symfitch
