#pragma once

// Exhaustive enumeration of path families of a fixed type, a lookup-table
// inverse of the order sweep map, and the bijection check built on both.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/incomplete.hpp"
#include "sweepmap/invert.hpp"
#include "sweepmap/schedule.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

enum class FamilyKind { dyck, free, incomplete };

inline std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::dyck: return "dyck";
    case FamilyKind::free: return "free";
    case FamilyKind::incomplete: return "incomplete";
  }
  return "dyck";
}

inline constexpr std::size_t kDefaultFamilyCap = 1'000'000;

struct EnumerationSpec {
  StepMultiset type;
  FamilyKind kind = FamilyKind::dyck;
  std::size_t cap = kDefaultFamilyCap;

  void validate() const {
    const auto sum = type.total_sum();
    if ((kind == FamilyKind::dyck || kind == FamilyKind::free) && sum != 0) {
      throw PreconditionError("a " + std::string(to_string(kind)) + " family needs a type with sum 0, {" +
                              to_string(type) + "} sums to " + std::to_string(sum));
    }
    if (kind == FamilyKind::incomplete && sum >= 0) {
      throw PreconditionError("an incomplete family needs a type with negative sum, {" + to_string(type) +
                              "} sums to " + std::to_string(sum));
    }
  }
};

// Calls `visit(const Path&)` for every member in lexicographic order.
// Prefixes that already violate the family's floor are abandoned early.
template <typename Visitor>
std::size_t for_each_path(const EnumerationSpec& spec, Visitor&& visit) {
  spec.validate();

  std::vector<Step> values;
  std::vector<std::size_t> remaining;
  for (auto& [value, mult] : spec.type.entries()) {
    values.push_back(value);
    remaining.push_back(mult);
  }
  const auto n = spec.type.size();
  const bool floored = spec.kind != FamilyKind::free;
  const Rank start = spec.kind == FamilyKind::incomplete ? -spec.type.total_sum() : 0;

  std::vector<Step> prefix;
  prefix.reserve(n);
  std::size_t produced = 0;

  auto descend = [&](auto&& self, Rank level) -> void {
    if (prefix.size() == n) {
      if (++produced > spec.cap) {
        throw CapExceeded("family {" + to_string(spec.type) + "} has more than " + std::to_string(spec.cap) +
                          " paths");
      }
      const Path path(prefix);
      visit(path);
      return;
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (remaining[v] == 0) continue;
      const Rank next = level + values[v];
      if (floored && next < 0) continue;
      --remaining[v];
      prefix.push_back(values[v]);
      self(self, next);
      prefix.pop_back();
      ++remaining[v];
    }
  };
  descend(descend, start);
  return produced;
}

inline std::vector<Path> enumerate(const EnumerationSpec& spec) {
  std::vector<Path> out;
  for_each_path(spec, [&](const Path& p) { out.push_back(p); });
  return out;
}

inline std::size_t family_size(const EnumerationSpec& spec) {
  return for_each_path(spec, [](const Path&) {});
}

// Maps every image of the order sweep map on a Dyck family back to the
// preimages that produced it.
class OsweepInverseTable {
 public:
  OsweepInverseTable(const StepMultiset& type, const PermSchedule& schedule,
                     std::size_t cap = kDefaultFamilyCap) {
    for_each_path({type, FamilyKind::dyck, cap},
                  [&](const Path& d) { preimages_[osweep(d, schedule)].push_back(d); });
  }

  const Path& invert(const Path& image) const {
    auto it = preimages_.find(image);
    if (it == preimages_.end()) {
      throw BijectionViolation("(" + to_string(image) + ") has no preimage under osweep");
    }
    if (it->second.size() != 1) {
      throw BijectionViolation("(" + to_string(image) + ") has " + std::to_string(it->second.size()) +
                               " preimages under osweep");
    }
    return it->second.front();
  }

  std::size_t images() const noexcept { return preimages_.size(); }

 private:
  std::map<Path, std::vector<Path>> preimages_;
};

inline Path oracle_invert(const Path& path, const PermSchedule& schedule, std::size_t cap = kDefaultFamilyCap) {
  if (!is_dyck(path)) {
    throw PreconditionError("oracle_invert requires a Dyck path, got (" + to_string(path) + ")");
  }
  return OsweepInverseTable(path.type(), schedule, cap).invert(path);
}

// Brute-force preimage of an incomplete path under the order sweep map.
inline IncompletePath oracle_invert_incomplete(const IncompletePath& p, const PermSchedule& schedule,
                                               std::size_t cap = kDefaultFamilyCap) {
  std::vector<Path> hits;
  for_each_path({p.path().type(), FamilyKind::incomplete, cap}, [&](const Path& q) {
    if (osweep_incomplete(IncompletePath(q), schedule).path() == p.path()) hits.push_back(q);
  });
  if (hits.size() != 1) {
    throw BijectionViolation("(" + to_string(p.path()) + ") has " + std::to_string(hits.size()) +
                             " preimages under osweep");
  }
  return IncompletePath(hits.front());
}

struct BijectionReport {
  std::string family;  // type multiset, e.g. "1^3,-1^3"
  FamilyKind kind = FamilyKind::dyck;
  std::size_t size = 0;
  std::string schedule;
  bool injective = false;
  bool closed = false;
  bool roundtrip = false;
  bool pass = false;

  friend bool operator==(const BijectionReport&, const BijectionReport&) = default;
};

// Checks that the (order) sweep map permutes the family: images stay in the
// family, no two members collide, and the inversion algorithm undoes the map
// from both sides.
inline BijectionReport verify_bijection(const EnumerationSpec& spec, const PermSchedule& schedule,
                                        const AlgorithmOptions& options = {}) {
  if (spec.kind == FamilyKind::free) {
    throw PreconditionError("verify_bijection covers dyck and incomplete families only");
  }
  BijectionReport report;
  report.family = to_string(spec.type);
  report.kind = spec.kind;
  report.schedule = schedule.name();

  const auto members = enumerate(spec);  // sorted: generation is lexicographic
  report.size = members.size();

  auto forward = [&](const Path& p) -> Path {
    if (spec.kind == FamilyKind::dyck) return osweep(p, schedule);
    return osweep_incomplete(IncompletePath(p), schedule, options.checks).path();
  };
  auto backward = [&](const Path& p) -> Path {
    if (spec.kind == FamilyKind::dyck) return inv_osweep(p, schedule, options);
    return inv_osweep_incomplete(IncompletePath(p), schedule, options).path();
  };

  std::vector<Path> images;
  images.reserve(members.size());
  report.closed = true;
  report.roundtrip = true;
  for (const auto& p : members) {
    Path image;
    try {
      image = forward(p);
    } catch (const Error&) {
      report.closed = false;
      continue;
    }
    if (!std::binary_search(members.begin(), members.end(), image)) report.closed = false;
    try {
      if (backward(image) != p || forward(backward(p)) != p) report.roundtrip = false;
    } catch (const Error&) {
      report.roundtrip = false;
    }
    images.push_back(std::move(image));
  }
  std::sort(images.begin(), images.end());
  report.injective = images.size() == members.size() &&
                     std::adjacent_find(images.begin(), images.end()) == images.end();
  report.pass = report.injective && report.closed && report.roundtrip;
  return report;
}

}  // namespace sweepmap
