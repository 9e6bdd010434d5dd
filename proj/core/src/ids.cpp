#include "symfitch/ids.hpp"

#include <cctype>

#include "symfitch/errors.hpp"

namespace symfitch {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// -1, 0, 1 comparison of two digit runs by numeric value.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool natural_less(std::string_view lhs, std::string_view rhs) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < lhs.size() && is_digit(lhs[ie])) ++ie;
      while (je < rhs.size() && is_digit(rhs[je])) ++je;
      int c = compare_digit_runs(lhs.substr(i, ie - i), rhs.substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
      continue;
    }
    if (lhs[i] != rhs[j]) {
      return static_cast<unsigned char>(lhs[i]) < static_cast<unsigned char>(rhs[j]);
    }
    ++i;
    ++j;
  }
  if ((lhs.size() - i) != (rhs.size() - j)) return (lhs.size() - i) < (rhs.size() - j);
  return lhs < rhs;
}

template <class Tag>
IdSet<Tag>::IdSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  ValidationReport report;
  for (const auto& id : ids_) {
    if (id.empty()) report.add(std::string("empty-") + Tag::kind, std::string("empty ") + Tag::kind + " identifier");
  }
  std::sort(ids_.begin(), ids_.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    if (ids_[i] == ids_[i - 1]) {
      report.add(std::string("duplicate-") + Tag::kind,
                 std::string("duplicate ") + Tag::kind + " identifier '" + ids_[i] + "'");
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));
}

template <class Tag>
std::size_t IdSet<Tag>::require(std::string_view id) const {
  auto idx = index_of(id);
  if (!idx) {
    throw ValidationError(std::string("unknown-") + Tag::kind,
                          std::string("unknown ") + Tag::kind + " '" + std::string(id) + "'");
  }
  return *idx;
}

template class IdSet<LeafTag>;
template class IdSet<ColorTag>;

std::vector<std::string> default_leaf_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("x" + std::to_string(i + 1));
    }
  }
  return names;
}

std::vector<std::string> numbered_names(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) names.push_back(std::to_string(i));
  return names;
}

LeafMask mask_of(const LeafSet& leaves, const std::vector<std::string>& names) {
  LeafMask m = 0;
  for (const auto& name : names) m |= leaf_bit(leaves.require(name));
  return m;
}

std::vector<std::string> names_of(const LeafSet& leaves, LeafMask mask) {
  std::vector<std::string> out;
  for_each_leaf(mask, [&](std::size_t i) { out.push_back(leaves[i]); });
  return out;
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += "; ";
    s += issue.message;
  }
  return s;
}

ValidationError::ValidationError(ValidationReport report)
    : Error(report.summary()), report_(std::move(report)) {}

ValidationError::ValidationError(std::string code, std::string message)
    : Error(message) {
  report_.add(std::move(code), std::move(message));
}

}  // namespace symfitch
