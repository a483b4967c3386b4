#pragma once

// Paths, path diagrams and their row geometry.
//
// A path is a sequence of integer steps b_1..b_N; step b_i is the arrow
// (1, b_i). A path diagram repositions every arrow of a step sequence to
// start at an explicit rank. Arrows are red (b > 0), blue (b < 0) or purple
// (b = 0); a red arrow from rank r covers rows r..r+b-1, a blue arrow covers
// rows r+b..r-1 and a purple arrow covers nothing.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sweepmap/errors.hpp"

namespace sweepmap {

using Step = std::int64_t;
using Rank = std::int64_t;

class StepMultiset;

class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}
  Path(std::initializer_list<Step> steps) : steps_(steps) {}

  std::span<const Step> steps() const noexcept { return steps_; }
  const std::vector<Step>& vector() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  Step total() const noexcept {
    Step sum = 0;
    for (Step b : steps_) sum += b;
    return sum;
  }

  // Level the connected path starts from, so that it ends at level 0. For an
  // incomplete Dyck path this is a.
  Rank start_level() const noexcept { return -total(); }

  // Starting rank of every arrow when the path is drawn connected and ending
  // at level 0.
  std::vector<Rank> starting_ranks() const {
    std::vector<Rank> ranks(steps_.size());
    Rank level = start_level();
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      ranks[i] = level;
      level += steps_[i];
    }
    return ranks;
  }

  StepMultiset type() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

// Multiset of step values, e.g. {3^2, (-2)^3}.
class StepMultiset {
 public:
  StepMultiset() = default;
  explicit StepMultiset(std::map<Step, std::size_t> entries) {
    for (auto [value, mult] : entries) {
      if (mult > 0) entries_[value] = mult;
    }
  }

  template <typename Range>
  static StepMultiset of(const Range& values) {
    StepMultiset m;
    for (Step v : values) ++m.entries_[v];
    return m;
  }

  const std::map<Step, std::size_t>& entries() const noexcept { return entries_; }

  std::size_t multiplicity(Step value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto& [value, mult] : entries_) n += mult;
    return n;
  }

  Step total_sum() const noexcept {
    Step sum = 0;
    for (auto& [value, mult] : entries_) sum += value * static_cast<Step>(mult);
    return sum;
  }

  bool is_balanced_type() const noexcept { return total_sum() == 0; }

  // Values in ascending order, repeated by multiplicity.
  std::vector<Step> sorted_values() const {
    std::vector<Step> out;
    out.reserve(size());
    for (auto& [value, mult] : entries_) out.insert(out.end(), mult, value);
    return out;
  }

  friend bool operator==(const StepMultiset&, const StepMultiset&) = default;

 private:
  std::map<Step, std::size_t> entries_;
};

inline StepMultiset Path::type() const { return StepMultiset::of(steps_); }

// Zero-sum paths that dip below level 0 are free (see is_free) but classify
// as `other`, like paths with positive sum.
enum class PathKind { dyck, incomplete, other };

inline std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::dyck: return "dyck";
    case PathKind::incomplete: return "incomplete";
    case PathKind::other: return "other";
  }
  return "other";
}

inline PathKind classify(const Path& path) {
  const Step total = path.total();
  if (total > 0) return PathKind::other;
  const Rank a = -total;
  Rank level = a;
  bool nonnegative = true;
  for (Step b : path.steps()) {
    level += b;
    if (level < 0) nonnegative = false;
  }
  if (!nonnegative) return PathKind::other;
  return total == 0 ? PathKind::dyck : PathKind::incomplete;
}

inline bool is_free(const Path& p) { return p.total() == 0; }
inline bool is_dyck(const Path& p) { return classify(p) == PathKind::dyck; }
inline bool is_incomplete(const Path& p) { return classify(p) == PathKind::incomplete; }

enum class ArrowColor { red, blue, purple };

inline ArrowColor color_of(Step b) noexcept {
  return b > 0 ? ArrowColor::red : (b < 0 ? ArrowColor::blue : ArrowColor::purple);
}

class PathDiagram {
 public:
  PathDiagram() = default;
  PathDiagram(std::vector<Step> steps, std::vector<Rank> ranks)
      : steps_(std::move(steps)), ranks_(std::move(ranks)) {
    if (steps_.size() != ranks_.size()) {
      throw PreconditionError("path diagram needs one rank per step (got " +
                              std::to_string(steps_.size()) + " steps, " +
                              std::to_string(ranks_.size()) + " ranks)");
    }
  }

  // The path drawn connected, ending at level 0.
  static PathDiagram connected(const Path& path) {
    return PathDiagram(path.vector(), path.starting_ranks());
  }

  std::span<const Step> steps() const noexcept { return steps_; }
  std::span<const Rank> ranks() const noexcept { return ranks_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  Step step(std::size_t i) const { return steps_[i]; }
  Rank rank(std::size_t i) const { return ranks_[i]; }
  Rank end_rank(std::size_t i) const { return ranks_[i] + steps_[i]; }
  ArrowColor color(std::size_t i) const { return color_of(steps_[i]); }

  bool is_increasing() const noexcept {
    return std::is_sorted(ranks_.begin(), ranks_.end());
  }

  bool is_positive() const noexcept {
    if (!is_increasing()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (end_rank(i) < 0) return false;
    }
    return true;
  }

  PathDiagram with_ranks(std::vector<Rank> ranks) const {
    return PathDiagram(steps_, std::move(ranks));
  }

  friend bool operator==(const PathDiagram&, const PathDiagram&) = default;

 private:
  std::vector<Step> steps_;
  std::vector<Rank> ranks_;
};

struct RowCount {
  std::int64_t red = 0;
  std::int64_t blue = 0;
  std::int64_t count() const noexcept { return red - blue; }
  friend bool operator==(const RowCount&, const RowCount&) = default;
};

// Sparse per-row segment counts; absent rows are all zero.
class RowCounts {
 public:
  RowCounts() = default;
  explicit RowCounts(std::map<Rank, RowCount> rows) : rows_(std::move(rows)) {}

  const std::map<Rank, RowCount>& rows() const noexcept { return rows_; }

  RowCount at(Rank j) const {
    auto it = rows_.find(j);
    return it == rows_.end() ? RowCount{} : it->second;
  }
  std::int64_t red(Rank j) const { return at(j).red; }
  std::int64_t blue(Rank j) const { return at(j).blue; }
  std::int64_t count(Rank j) const { return at(j).count(); }

  std::int64_t total() const noexcept {
    std::int64_t sum = 0;
    for (auto& [j, rc] : rows_) sum += rc.count();
    return sum;
  }

  bool all_zero() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const auto& e) { return e.second.count() == 0; });
  }

  bool empty() const noexcept { return rows_.empty(); }
  Rank lowest_row() const { return rows_.begin()->first; }
  Rank highest_row() const { return rows_.rbegin()->first; }

 private:
  std::map<Rank, RowCount> rows_;
};

// Boundary events accumulated per level, then prefix-summed over rows.
inline RowCounts row_counts(const PathDiagram& diagram) {
  std::map<Rank, RowCount> delta;
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    const Rank lo = std::min(diagram.rank(i), diagram.end_rank(i));
    const Rank hi = std::max(diagram.rank(i), diagram.end_rank(i));
    switch (diagram.color(i)) {
      case ArrowColor::red:
        ++delta[lo].red;
        --delta[hi].red;
        break;
      case ArrowColor::blue:
        ++delta[lo].blue;
        --delta[hi].blue;
        break;
      case ArrowColor::purple:
        break;
    }
  }

  std::map<Rank, RowCount> rows;
  RowCount running;
  for (auto it = delta.begin(); it != delta.end(); ++it) {
    running.red += it->second.red;
    running.blue += it->second.blue;
    auto next = std::next(it);
    if (next == delta.end()) break;
    if (running.red == 0 && running.blue == 0) continue;
    for (Rank j = it->first; j < next->first; ++j) rows.emplace_hint(rows.end(), j, running);
  }
  return RowCounts(std::move(rows));
}

inline bool is_balanced(const PathDiagram& diagram) { return row_counts(diagram).all_zero(); }

// Increasing positive diagram with pointwise least ranks.
inline PathDiagram minimal_diagram(const Path& path) {
  std::vector<Rank> ranks(path.size());
  Rank r = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    r = std::max(r, -path[i]);
    ranks[i] = r;
  }
  return PathDiagram(path.vector(), std::move(ranks));
}

inline Path vpath(const PathDiagram& diagram) {
  return Path(std::vector<Step>(diagram.steps().begin(), diagram.steps().end()));
}

struct RowDelta {
  std::int64_t delta = 0;       // c(j) - c(j-1)
  std::int64_t starts_at = 0;   // arrows with starting rank j
  std::int64_t ends_at = 0;     // arrows with end rank j
  friend bool operator==(const RowDelta&, const RowDelta&) = default;
};

inline RowDelta row_count_delta(const PathDiagram& diagram, const RowCounts& counts, Rank j) {
  RowDelta out;
  out.delta = counts.count(j) - counts.count(j - 1);
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    if (diagram.rank(i) == j) ++out.starts_at;
    if (diagram.end_rank(i) == j) ++out.ends_at;
  }
  return out;
}

inline RowDelta row_count_delta(const PathDiagram& diagram, Rank j) {
  return row_count_delta(diagram, row_counts(diagram), j);
}

// Pointwise comparison of rank sequences.
inline bool rank_leq(std::span<const Rank> lhs, std::span<const Rank> rhs) {
  if (lhs.size() != rhs.size()) {
    throw PreconditionError("rank_leq: sequences differ in length (" + std::to_string(lhs.size()) +
                            " vs " + std::to_string(rhs.size()) + ")");
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text formats

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace detail

// "2,0,2,-3,1,-2". Whitespace around tokens is ignored; "" is the empty path.
inline Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  for (auto token : detail::split_commas(text)) {
    Step value{};
    if (!detail::parse_int(token, value)) {
      throw ParseError("invalid step '" + std::string(token) + "' in path \"" +
                           std::string(text) + "\"",
                       std::string(token));
    }
    steps.push_back(value);
  }
  return Path(std::move(steps));
}

inline std::vector<Rank> parse_ranks(std::string_view text) { return parse_path(text).vector(); }

// "1^3,-1^3" or "3^2,-2^3"; "^1" may be omitted and repeated values add up.
inline StepMultiset parse_multiset(std::string_view text) {
  std::map<Step, std::size_t> entries;
  for (auto token : detail::split_commas(text)) {
    const auto caret = token.find('^');
    Step value{};
    std::size_t mult = 1;
    const auto value_part = detail::trim(token.substr(0, caret));
    bool ok = detail::parse_int(value_part, value);
    if (ok && caret != std::string_view::npos) {
      ok = detail::parse_int(detail::trim(token.substr(caret + 1)), mult) && mult > 0;
    }
    if (!ok) {
      throw ParseError("invalid multiset term '" + std::string(token) + "' in \"" +
                           std::string(text) + "\"",
                       std::string(token));
    }
    entries[value] += mult;
  }
  return StepMultiset(std::move(entries));
}

template <typename Range>
std::string join_ints(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (auto v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

inline std::string to_string(const Path& path) { return join_ints(path.steps()); }

// Largest value first, e.g. "3^2,-2^3".
inline std::string to_string(const StepMultiset& m) {
  std::ostringstream os;
  bool first = true;
  for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
    if (!first) os << ',';
    os << it->first;
    if (it->second != 1) os << '^' << it->second;
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Path& path) {
  return os << '(' << to_string(path) << ')';
}

inline std::ostream& operator<<(std::ostream& os, const PathDiagram& d) {
  return os << "steps=(" << join_ints(d.steps()) << ") ranks=(" << join_ints(d.ranks()) << ')';
}

}  // namespace sweepmap
