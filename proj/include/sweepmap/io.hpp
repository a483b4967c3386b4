#pragma once

// JSON and line-oriented text forms of paths, bijection reports and traces.
// Field names are part of the CLI's stable output; see docs/formats.md.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sweepmap/combinatorics.hpp"
#include "sweepmap/core.hpp"
#include "sweepmap/invert.hpp"

namespace sweepmap {

inline void to_json(nlohmann::json& j, const Path& p) { j = p.vector(); }

inline void from_json(const nlohmann::json& j, Path& p) {
  if (!j.is_array()) throw ParseError("a path must be a JSON array of integers", j.dump());
  std::vector<Step> steps;
  for (auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("path entries must be integers", v.dump());
    steps.push_back(v.get<Step>());
  }
  p = Path(std::move(steps));
}

inline std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
  if (name == "dyck") return FamilyKind::dyck;
  if (name == "free") return FamilyKind::free;
  if (name == "incomplete") return FamilyKind::incomplete;
  return std::nullopt;
}

inline void to_json(nlohmann::json& j, const BijectionReport& r) {
  j = nlohmann::json{{"family", r.family},       {"kind", std::string(to_string(r.kind))},
                     {"size", r.size},           {"schedule", r.schedule},
                     {"injective", r.injective}, {"closed", r.closed},
                     {"roundtrip", r.roundtrip}, {"pass", r.pass}};
}

inline void from_json(const nlohmann::json& j, BijectionReport& r) {
  j.at("family").get_to(r.family);
  const auto kind = family_kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown family kind", j.at("kind").dump());
  r.kind = *kind;
  j.at("size").get_to(r.size);
  j.at("schedule").get_to(r.schedule);
  j.at("injective").get_to(r.injective);
  j.at("closed").get_to(r.closed);
  j.at("roundtrip").get_to(r.roundtrip);
  j.at("pass").get_to(r.pass);
}

inline void to_json(nlohmann::json& j, const VibMove& m) {
  j = nlohmann::json{{"step", m.step}, {"row", m.row}, {"column", m.column}, {"before", m.before}, {"after", m.after}};
}

inline void from_json(const nlohmann::json& j, VibMove& m) {
  j.at("step").get_to(m.step);
  j.at("row").get_to(m.row);
  j.at("column").get_to(m.column);
  j.at("before").get_to(m.before);
  j.at("after").get_to(m.after);
}

// One hpath label flattened with its round number (1-based).
struct HPathRecord {
  std::size_t round = 0;
  std::size_t i = 0;
  std::size_t column = 0;
  Rank level = 0;
  friend bool operator==(const HPathRecord&, const HPathRecord&) = default;
};

inline std::vector<HPathRecord> hpath_records(const HPathTrace& trace) {
  std::vector<HPathRecord> out;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    for (auto& l : trace.rounds[r].labels) out.push_back({r + 1, l.i, l.column, l.level});
  }
  return out;
}

inline void to_json(nlohmann::json& j, const HPathRecord& r) {
  j = nlohmann::json{{"round", r.round}, {"i", r.i}, {"column", r.column}, {"level", r.level}};
}

inline void from_json(const nlohmann::json& j, HPathRecord& r) {
  j.at("round").get_to(r.round);
  j.at("i").get_to(r.i);
  j.at("column").get_to(r.column);
  j.at("level").get_to(r.level);
}

// ---------------------------------------------------------------------------
// Text

inline std::string format_report(const BijectionReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "family     " << r.family << " (" << to_string(r.kind) << ")\n"
     << "size       " << r.size << '\n'
     << "schedule   " << r.schedule << '\n'
     << "injective  " << yn(r.injective) << '\n'
     << "closed     " << yn(r.closed) << '\n'
     << "roundtrip  " << yn(r.roundtrip) << '\n'
     << "result     " << (r.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

inline std::string format_vib_trace(const VibTrace& t) {
  std::ostringstream os;
  os << "vib start ranks " << join_ints(t.initial_ranks) << '\n';
  for (auto& m : t.moves) {
    os << "move " << m.step << ": row " << m.row << ", column " << m.column << ", rank " << m.before << " -> "
       << m.after << '\n';
  }
  os << "vib final ranks " << join_ints(t.final_ranks) << " (" << t.moves.size() << " moves)\n";
  return os.str();
}

inline std::string format_hpath_trace(const HPathTrace& t) {
  std::ostringstream os;
  for (std::size_t r = 0; r < t.rounds.size(); ++r) {
    const auto& round = t.rounds[r];
    os << "round " << r + 1 << " (k=" << round.k << ")\n";
    for (auto& l : round.labels) {
      os << "label " << l.i << ": column " << l.column << ", level " << l.level << '\n';
    }
    if (round.stop == HPathStop::stuck_at_level_zero) {
      os << "stuck at level 0 after " << round.labels.size() << " labels; shifted ranks "
         << join_ints(round.ranks_after) << '\n';
    } else {
      os << "completed\n";
    }
  }
  return os.str();
}

}  // namespace sweepmap
