#pragma once

// Permutation schedules: a rule giving a permutation phi_k of {1..k} for
// every k >= 1. The order sweep map uses phi_k to order the k arrows that
// start at level 0.

#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"

namespace sweepmap {

// A permutation of {1..k} in one-line notation (1-based values).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> one_line) : one_line_(std::move(one_line)) {
    if (!is_permutation(one_line_)) {
      throw PreconditionError("not a permutation of {1.." + std::to_string(one_line_.size()) +
                              "}: [" + join_ints(one_line_) + "]");
    }
  }

  static Permutation identity(std::size_t k) {
    std::vector<std::size_t> v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = j + 1;
    return Permutation(std::move(v));
  }

  static bool is_permutation(const std::vector<std::size_t>& one_line) {
    std::vector<bool> seen(one_line.size() + 1, false);
    for (auto v : one_line) {
      if (v < 1 || v > one_line.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  std::size_t size() const noexcept { return one_line_.size(); }
  const std::vector<std::size_t>& one_line() const noexcept { return one_line_; }

  // phi(j) for 1 <= j <= k.
  std::size_t operator()(std::size_t j) const { return one_line_.at(j - 1); }

  Permutation inverse() const {
    std::vector<std::size_t> inv(one_line_.size());
    for (std::size_t j = 0; j < one_line_.size(); ++j) inv[one_line_[j] - 1] = j + 1;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> one_line_;
};

enum class BuiltinSchedule { reverse, identity, cycle };

inline std::string_view to_string(BuiltinSchedule b) {
  switch (b) {
    case BuiltinSchedule::reverse: return "reverse";
    case BuiltinSchedule::identity: return "identity";
    case BuiltinSchedule::cycle: return "cycle";
  }
  return "reverse";
}

inline std::optional<BuiltinSchedule> builtin_from_name(std::string_view name) {
  if (name == "reverse") return BuiltinSchedule::reverse;
  if (name == "identity") return BuiltinSchedule::identity;
  if (name == "cycle") return BuiltinSchedule::cycle;
  return std::nullopt;
}

inline Permutation builtin_permutation(BuiltinSchedule b, std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t j = 1; j <= k; ++j) {
    switch (b) {
      case BuiltinSchedule::reverse: v[j - 1] = k + 1 - j; break;
      case BuiltinSchedule::identity: v[j - 1] = j; break;
      case BuiltinSchedule::cycle: v[j - 1] = j == 1 ? 1 : k + 2 - j; break;
    }
  }
  return Permutation(std::move(v));
}

class PermSchedule {
 public:
  PermSchedule() : rule_(BuiltinSchedule::reverse) {}
  PermSchedule(BuiltinSchedule b) : rule_(b) {}  // NOLINT(google-explicit-constructor)

  static PermSchedule reverse() { return BuiltinSchedule::reverse; }
  static PermSchedule identity() { return BuiltinSchedule::identity; }
  static PermSchedule cycle() { return BuiltinSchedule::cycle; }

  // Explicit permutations for some k; every other k uses `fallback`.
  static PermSchedule table(BuiltinSchedule fallback, std::map<std::size_t, Permutation> entries) {
    for (auto& [k, perm] : entries) {
      if (k == 0 || perm.size() != k) {
        throw PreconditionError("schedule table entry for k=" + std::to_string(k) +
                                " must be a permutation of {1.." + std::to_string(k) + "}");
      }
    }
    PermSchedule s;
    s.rule_ = Table{fallback, std::move(entries)};
    return s;
  }

  // phi'_k = 1, phi_{k-1}(1)+1, ..., phi_{k-1}(k-1)+1. Orders a completed
  // incomplete path's level-0 arrows so the prepended arrow always comes first.
  PermSchedule lifted() const {
    PermSchedule s;
    s.rule_ = Lifted{std::make_shared<const PermSchedule>(*this)};
    return s;
  }

  Permutation at(std::size_t k) const {
    return std::visit(
        [k](const auto& rule) -> Permutation {
          using R = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<R, BuiltinSchedule>) {
            return builtin_permutation(rule, k);
          } else if constexpr (std::is_same_v<R, Table>) {
            auto it = rule.entries.find(k);
            return it != rule.entries.end() ? it->second : builtin_permutation(rule.fallback, k);
          } else {
            if (k == 0) return Permutation{};
            const auto base = rule.base->at(k - 1);
            std::vector<std::size_t> v{1};
            for (auto s : base.one_line()) v.push_back(s + 1);
            return Permutation(std::move(v));
          }
        },
        rule_);
  }

  Permutation inverse_at(std::size_t k) const { return at(k).inverse(); }

  std::optional<BuiltinSchedule> builtin() const {
    if (auto* b = std::get_if<BuiltinSchedule>(&rule_)) return *b;
    return std::nullopt;
  }

  // "reverse", "table(default=reverse,k=2,3)", "lift(identity)".
  std::string name() const {
    return std::visit(
        [](const auto& rule) -> std::string {
          using R = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<R, BuiltinSchedule>) {
            return std::string(to_string(rule));
          } else if constexpr (std::is_same_v<R, Table>) {
            std::string out = "table(default=" + std::string(to_string(rule.fallback));
            if (!rule.entries.empty()) {
              out += ",k=";
              bool first = true;
              for (auto& [k, perm] : rule.entries) {
                if (!first) out += ',';
                out += std::to_string(k);
                first = false;
              }
            }
            return out + ")";
          } else {
            return "lift(" + rule.base->name() + ")";
          }
        },
        rule_);
  }

  // Builtins serialize as their name, tables as the JSON document form.
  // Lifted schedules serialize as a table covering k <= max_k.
  nlohmann::json to_json(std::size_t max_k = 16) const {
    if (auto b = builtin()) return std::string(to_string(*b));
    nlohmann::json doc;
    nlohmann::json table = nlohmann::json::object();
    if (auto* t = std::get_if<Table>(&rule_)) {
      doc["default"] = std::string(to_string(t->fallback));
      for (auto& [k, perm] : t->entries) table[std::to_string(k)] = perm.one_line();
    } else {
      doc["default"] = "reverse";
      for (std::size_t k = 1; k <= max_k; ++k) table[std::to_string(k)] = at(k).one_line();
    }
    doc["table"] = std::move(table);
    return doc;
  }

  static PermSchedule from_json(const nlohmann::json& doc) {
    if (doc.is_string()) return from_name(doc.get<std::string>());
    if (!doc.is_object()) throw ParseError("schedule must be a name or an object", doc.dump());
    BuiltinSchedule fallback = BuiltinSchedule::reverse;
    if (auto it = doc.find("default"); it != doc.end()) {
      if (!it->is_string()) throw ParseError("schedule \"default\" must be a string", it->dump());
      fallback = from_name(it->get<std::string>()).builtin().value();
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (it.key() != "default" && it.key() != "table") {
        throw ParseError("unknown schedule field '" + it.key() + "'", it.key());
      }
    }
    std::map<std::size_t, Permutation> entries;
    if (auto it = doc.find("table"); it != doc.end()) {
      if (!it->is_object()) throw ParseError("schedule \"table\" must be an object", it->dump());
      for (auto e = it->begin(); e != it->end(); ++e) {
        std::size_t k = 0;
        if (!detail::parse_int(std::string_view(e.key()), k) || k == 0) {
          throw ParseError("schedule table key '" + e.key() + "' is not a positive integer", e.key());
        }
        std::vector<std::size_t> one_line;
        if (!e->is_array()) throw ParseError("schedule table entry must be an array", e->dump());
        for (auto& v : *e) {
          if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
            throw ParseError("schedule table entry for k=" + e.key() + " has invalid value", v.dump());
          }
          one_line.push_back(v.get<std::size_t>());
        }
        if (one_line.size() != k || !Permutation::is_permutation(one_line)) {
          throw ParseError("schedule table entry for k=" + e.key() +
                               " is not a permutation of {1.." + e.key() + "}",
                           e->dump());
        }
        entries.emplace(k, Permutation(std::move(one_line)));
      }
    }
    return table(fallback, std::move(entries));
  }

  static PermSchedule from_name(std::string_view name) {
    if (auto b = builtin_from_name(name)) return *b;
    throw ParseError("unknown schedule '" + std::string(name) + "' (expected reverse, identity or cycle)",
                     std::string(name));
  }

  // A builtin name or a JSON schedule document.
  static PermSchedule parse(std::string_view text) {
    const auto t = detail::trim(text);
    if (!t.empty() && t.front() == '{') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(t);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed schedule JSON: ") + e.what(), std::string(t));
      }
      return from_json(doc);
    }
    return from_name(t);
  }

  static PermSchedule load_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw ParseError("cannot open schedule file '" + filename + "'", filename);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

 private:
  struct Table {
    BuiltinSchedule fallback;
    std::map<std::size_t, Permutation> entries;
  };
  struct Lifted {
    std::shared_ptr<const PermSchedule> base;
  };

  std::variant<BuiltinSchedule, Table, Lifted> rule_;
};

}  // namespace sweepmap
