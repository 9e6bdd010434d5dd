#include "symfitch/subsplit.hpp"

#include "symfitch/errors.hpp"

namespace symfitch {

Subsplit::Subsplit(LeafMask a, LeafMask b) {
  if (a == 0 || b == 0) throw ValidationError("empty-side", "subsplit side must be non-empty");
  if ((a & b) != 0) throw ValidationError("overlapping-sides", "subsplit sides must be disjoint");
  if (lowest_leaf(a) < lowest_leaf(b)) {
    first_ = a;
    second_ = b;
  } else {
    first_ = b;
    second_ = a;
  }
}

bool Subsplit::conflicts_with(const Subsplit& other) const {
  return (first_ & other.first_) != 0 && (first_ & other.second_) != 0 &&
         (second_ & other.first_) != 0 && (second_ & other.second_) != 0;
}

std::string format_subsplit(const Subsplit& s, const LeafSet& leaves) {
  std::string out;
  auto side = [&](LeafMask m) {
    bool first = true;
    for_each_leaf(m, [&](std::size_t i) {
      if (!first) out += ' ';
      out += leaves[i];
      first = false;
    });
  };
  side(s.first());
  out += " | ";
  side(s.second());
  return out;
}

}  // namespace symfitch
