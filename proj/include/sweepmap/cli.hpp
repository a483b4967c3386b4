#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 verification failure or violated invariant,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sweepmap/combinatorics.hpp"
#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/incomplete.hpp"
#include "sweepmap/invert.hpp"
#include "sweepmap/io.hpp"
#include "sweepmap/render.hpp"
#include "sweepmap/schedule.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// A builtin name, an inline JSON document, or the name of a JSON file.
inline PermSchedule load_schedule(const std::string& spec) {
  const auto text = detail::trim(spec);
  if (builtin_from_name(text) || (!text.empty() && text.front() == '{')) return PermSchedule::parse(text);
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(text), ec)) return PermSchedule::load_file(std::string(text));
  throw ParseError("unknown schedule '" + std::string(text) +
                       "' (expected reverse, identity, cycle, a JSON document or a JSON file)",
                   std::string(text));
}

namespace detail {

enum class KindFlag { automatic, dyck, incomplete };

struct Options {
  std::string path;
  std::string ranks;
  std::string type;
  std::string schedule = "reverse";
  std::string kind = "auto";
  std::string algorithm;
  std::string out;
  std::size_t cap = kDefaultFamilyCap;
  bool json = false;
  bool oracle = false;
  bool count_only = false;
  bool dry_run = false;
};

inline KindFlag parse_kind_flag(const std::string& s) {
  if (s == "auto") return KindFlag::automatic;
  if (s == "dyck") return KindFlag::dyck;
  if (s == "incomplete") return KindFlag::incomplete;
  throw ParseError("unknown --kind '" + s + "' (expected auto, dyck or incomplete)", s);
}

inline FamilyKind parse_family_kind(const std::string& s) {
  if (auto k = family_kind_from_name(s)) return *k;
  throw ParseError("unknown --kind '" + s + "' (expected dyck, free or incomplete)", s);
}

// Resolves whether `p` is handled as a Dyck path or an incomplete one.
inline PathKind resolve_kind(const Path& p, KindFlag flag) {
  const auto actual = classify(p);
  if (flag == KindFlag::dyck && actual != PathKind::dyck) {
    throw PreconditionError("(" + to_string(p) + ") is not a Dyck path");
  }
  if (flag == KindFlag::incomplete && actual != PathKind::incomplete) {
    throw PreconditionError("(" + to_string(p) + ") is not an incomplete Dyck path");
  }
  return actual;
}

inline void print_path(std::ostream& out, const Path& p, bool json) {
  if (json) {
    out << nlohmann::json(p).dump() << '\n';
  } else {
    out << to_string(p) << '\n';
  }
}

inline int cmd_sweep(const Options& o, bool order, std::ostream& out) {
  const Path p = parse_path(o.path);
  const auto kind = resolve_kind(p, parse_kind_flag(o.kind));
  const PermSchedule schedule = order ? load_schedule(o.schedule) : PermSchedule::reverse();
  Path image;
  if (kind == PathKind::incomplete) {
    const IncompletePath ip(p);
    image = order ? osweep_incomplete(ip, schedule).path() : sweep_incomplete(ip).path();
  } else {
    image = osweep(p, schedule);
  }
  print_path(out, image, o.json);
  return kExitOk;
}

inline int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
  const Path p = parse_path(o.path);
  const auto kind = resolve_kind(p, parse_kind_flag(o.kind));
  const PermSchedule schedule = load_schedule(o.schedule);
  Path preimage;
  if (kind == PathKind::dyck) {
    preimage = inv_osweep(p, schedule);
  } else if (kind == PathKind::incomplete) {
    preimage = inv_osweep_incomplete(IncompletePath(p), schedule).path();
  } else {
    throw PreconditionError("invert needs a Dyck or incomplete Dyck path, got (" + to_string(p) + ")");
  }
  if (o.oracle) {
    const Path expected = kind == PathKind::dyck
                              ? oracle_invert(p, schedule, o.cap)
                              : oracle_invert_incomplete(IncompletePath(p), schedule, o.cap).path();
    if (expected != preimage) {
      err << "error: inversion (" << to_string(preimage) << ") disagrees with the oracle (" << to_string(expected)
          << ")\n";
      return kExitFailure;
    }
  }
  print_path(out, preimage, o.json);
  return kExitOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumerationSpec spec{parse_multiset(o.type), parse_family_kind(o.kind), o.cap};
  if (o.count_only || o.dry_run) {
    const auto size = family_size(spec);
    if (o.json) {
      out << nlohmann::json{{"family", to_string(spec.type)}, {"kind", std::string(to_string(spec.kind))},
                            {"size", size}}
                 .dump()
          << '\n';
    } else {
      out << size << '\n';
    }
    return kExitOk;
  }
  if (o.json) {
    out << nlohmann::json(enumerate(spec)).dump() << '\n';
  } else {
    for_each_path(spec, [&](const Path& p) { out << to_string(p) << '\n'; });
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const EnumerationSpec spec{parse_multiset(o.type), parse_family_kind(o.kind), o.cap};
  if (spec.kind == FamilyKind::free) throw PreconditionError("verify supports --kind dyck or incomplete");
  if (o.dry_run) {
    const auto size = family_size(spec);
    if (o.json) {
      out << nlohmann::json{{"family", to_string(spec.type)}, {"kind", std::string(to_string(spec.kind))},
                            {"size", size}}
                 .dump()
          << '\n';
    } else {
      out << "family     " << to_string(spec.type) << " (" << to_string(spec.kind) << ")\nsize       " << size
          << '\n';
    }
    return kExitOk;
  }
  const auto report = verify_bijection(spec, load_schedule(o.schedule));
  if (o.json) {
    out << nlohmann::json(report).dump() << '\n';
  } else {
    out << format_report(report);
  }
  return report.pass ? kExitOk : kExitFailure;
}

inline int cmd_trace(const Options& o, std::ostream& out) {
  const Path p = parse_path(o.path);
  const PermSchedule schedule = load_schedule(o.schedule);
  auto start_diagram = [&]() {
    return o.ranks.empty() ? minimal_diagram(p) : PathDiagram(p.vector(), parse_ranks(o.ranks));
  };

  if (o.algorithm == "vib") {
    const auto result = vib(start_diagram());
    if (o.json) {
      out << nlohmann::json(result.trace.moves).dump() << '\n';
    } else {
      out << format_vib_trace(result.trace);
    }
  } else if (o.algorithm == "hpath") {
    const PathDiagram d =
        o.ranks.empty() ? vib(minimal_diagram(p)).balanced : PathDiagram(p.vector(), parse_ranks(o.ranks));
    const auto result = hpath(d, schedule);
    if (o.json) {
      out << nlohmann::json(hpath_records(result.trace)).dump() << '\n';
    } else {
      out << format_hpath_trace(result.trace) << "preimage " << to_string(result.path) << '\n';
    }
  } else if (o.algorithm == "invosweep") {
    const auto result = inv_osweep_traced(p, schedule);
    if (o.json) {
      out << nlohmann::json{{"vib", result.vib.trace.moves},
                            {"hpath", hpath_records(result.hpath.trace)},
                            {"preimage", result.preimage}}
                 .dump()
          << '\n';
    } else {
      out << "minimal ranks " << join_ints(result.minimal.ranks()) << '\n'
          << format_vib_trace(result.vib.trace) << format_hpath_trace(result.hpath.trace) << "preimage "
          << to_string(result.preimage) << '\n';
    }
  } else {
    throw ParseError("unknown --algorithm '" + o.algorithm + "' (expected vib, hpath or invosweep)", o.algorithm);
  }
  return kExitOk;
}

inline int cmd_render(const Options& o, std::ostream& out) {
  const Path p = parse_path(o.path);
  const PathDiagram d = o.ranks.empty() ? PathDiagram::connected(p) : PathDiagram(p.vector(), parse_ranks(o.ranks));
  const bool svg = o.out.size() >= 4 && o.out.compare(o.out.size() - 4, 4, ".svg") == 0;
  const std::string doc = svg ? render_svg(d) : render_ascii(d);
  if (o.out.empty() || o.out == "-") {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw PreconditionError("cannot write '" + o.out + "'");
  file << doc;
  if (o.json) {
    out << nlohmann::json{{"out", o.out}, {"format", svg ? "svg" : "ascii"}, {"bytes", doc.size()}}.dump() << '\n';
  } else {
    out << "wrote " << o.out << '\n';
  }
  return kExitOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sweep and order sweep maps on general Dyck paths, with inversion and exhaustive checks",
               "sweepmap"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_path = [&](CLI::App* c) { c->add_option("--path", o.path, "Comma-separated steps, e.g. 2,0,2,-3,1,-2")->required(); };
  auto add_schedule = [&](CLI::App* c) {
    c->add_option("--schedule", o.schedule, "reverse | identity | cycle | JSON document | JSON file")
        ->capture_default_str();
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable JSON output"); };
  auto add_kind = [&](CLI::App* c) {
    c->add_option("--kind", o.kind, "auto | dyck | incomplete")->capture_default_str();
  };

  auto* sweep_cmd = app.add_subcommand("sweep", "Apply the sweep map");
  add_path(sweep_cmd);
  add_kind(sweep_cmd);
  add_json(sweep_cmd);

  auto* osweep_cmd = app.add_subcommand("osweep", "Apply the order sweep map");
  add_path(osweep_cmd);
  add_schedule(osweep_cmd);
  add_kind(osweep_cmd);
  add_json(osweep_cmd);

  auto* invert_cmd = app.add_subcommand("invert", "Invert the order sweep map");
  add_path(invert_cmd);
  add_schedule(invert_cmd);
  add_kind(invert_cmd);
  add_json(invert_cmd);
  invert_cmd->add_flag("--oracle", o.oracle, "Cross-check against exhaustive lookup");
  invert_cmd->add_option("--cap", o.cap, "Family size guard for --oracle")->capture_default_str();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the paths of a type");
  enumerate_cmd->add_option("--type", o.type, "Multiset, e.g. 1^3,-1^3")->required();
  enumerate_cmd->add_option("--kind", o.kind, "dyck | free | incomplete")->required();
  enumerate_cmd->add_flag("--count-only", o.count_only, "Print only the family size");
  enumerate_cmd->add_flag("--dry-run", o.dry_run, "Same as --count-only");
  enumerate_cmd->add_option("--cap", o.cap, "Family size guard")->capture_default_str();
  add_json(enumerate_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check bijectivity on a family");
  verify_cmd->add_option("--type", o.type, "Multiset, e.g. 1^3,-1^3")->required();
  verify_cmd->add_option("--kind", o.kind, "dyck | incomplete")->required();
  add_schedule(verify_cmd);
  verify_cmd->add_flag("--dry-run", o.dry_run, "Report the family size without checking");
  verify_cmd->add_option("--cap", o.cap, "Family size guard")->capture_default_str();
  add_json(verify_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "Show the steps of vib, hpath or the full inversion");
  add_path(trace_cmd);
  add_schedule(trace_cmd);
  trace_cmd->add_option("--algorithm", o.algorithm, "vib | hpath | invosweep")->required();
  trace_cmd->add_option("--ranks", o.ranks, "Explicit starting ranks for vib or hpath");
  add_json(trace_cmd);

  auto* render_cmd = app.add_subcommand("render", "Draw a path diagram as SVG or ASCII");
  add_path(render_cmd);
  render_cmd->add_option("--ranks", o.ranks, "Ranks (default: the connected path)");
  render_cmd->add_option("--out", o.out, "Output file; .svg selects SVG, anything else ASCII");
  add_json(render_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return detail::cmd_sweep(o, false, out);
    if (osweep_cmd->parsed()) return detail::cmd_sweep(o, true, out);
    if (invert_cmd->parsed()) return detail::cmd_invert(o, out, err);
    if (enumerate_cmd->parsed()) return detail::cmd_enumerate(o, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(o, out);
    if (trace_cmd->parsed()) return detail::cmd_trace(o, out);
    if (render_cmd->parsed()) return detail::cmd_render(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace sweepmap::cli
