#pragma once

// Command-line front end. Exit codes:
//   0 success (exists: Exists; verify: magic)
//   1 invalid arguments
//   2 malformed input file
//   3 exists: NotExists
//   4 exists: Unknown
//   5 construct: no labeling produced (no constructor, or search NotFound)
//   6 verify: labeling is not magic

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magicpoly/construct.hpp"
#include "magicpoly/document.hpp"
#include "magicpoly/properties.hpp"
#include "magicpoly/render.hpp"
#include "magicpoly/search.hpp"
#include "magicpoly/structure.hpp"
#include "magicpoly/verify.hpp"

namespace magicpoly {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidArgs = 1,
  kExitMalformedInput = 2,
  kExitNotExists = 3,
  kExitUnknown = 4,
  kExitNotFound = 5,
  kExitNotMagic = 6,
};

namespace detail {

struct SpecArgs {
  std::string family;
  int n = 0;
  int k = 0;

  StructureSpec spec() const {
    StructureSpec s{family == "P" ? Family::MagicP : Family::DegenerateD, n, k};
    validate(s);
    return s;
  }
};

inline void add_spec_options(CLI::App* cmd, SpecArgs& a, bool required = true) {
  auto* f = cmd->add_option("--family", a.family, "P (magic polygon) or D (degenerated)")
                ->check(CLI::IsMember({"P", "D"}));
  auto* n = cmd->add_option("--n", a.n, "number of polygon sides");
  auto* k = cmd->add_option("--k", a.k, "order parameter (order is k+1)");
  if (required) {
    f->required();
    n->required();
    k->required();
  }
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw MalformedDocument("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline int write_output(const std::string& path, const std::string& text,
                        std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path << "\n";
    return kExitInvalidArgs;
  }
  return kExitOk;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int cli_main(const std::vector<std::string>& args, std::istream& in,
                    std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, search and render magic polygons", "magicpoly"};
  app.require_subcommand(1);

  detail::SpecArgs props_args, exists_args, construct_args, search_args, render_args;
  std::uint64_t budget = 100'000'000;
  std::string verify_file, render_file, render_out, search_mode = "first";
  std::optional<std::uint64_t> search_limit;
  bool search_parallel = false, search_free_center = false, render_bare = false;
  unsigned search_threads = 0;

  auto* props = app.add_subcommand("props", "closed-form constants");
  detail::add_spec_options(props, props_args);

  auto* exist = app.add_subcommand("exists", "existence verdict");
  detail::add_spec_options(exist, exists_args);

  auto* construct = app.add_subcommand("construct", "emit a witness labeling as JSON");
  detail::add_spec_options(construct, construct_args);
  construct->add_option("--budget", budget, "node budget for the P(n,4) search")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check a labeling document");
  verify_cmd->add_option("--file", verify_file, "labeling JSON, '-' for stdin")->required();

  auto* search = app.add_subcommand("search", "backtracking search");
  detail::add_spec_options(search, search_args);
  search->add_option("--mode", search_mode, "first | count | all")
      ->check(CLI::IsMember({"first", "count", "all"}));
  search->add_option("--limit", search_limit, "node limit")->check(CLI::PositiveNumber);
  search->add_flag("--parallel", search_parallel, "split the tree across threads");
  search->add_option("--threads", search_threads, "worker count (parallel only)");
  search->add_flag("--free-center", search_free_center,
                   "search the center value instead of fixing it");

  auto* render = app.add_subcommand("render", "SVG figure");
  detail::add_spec_options(render, render_args, false);
  render->add_option("--file", render_file, "labeling JSON, '-' for stdin");
  render->add_option("--out", render_out, "output SVG path (default stdout)");
  render->add_flag("--bare", render_bare, "draw the unlabeled structure");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }

  try {
    if (*props) {
      const auto spec = props_args.spec();
      out << to_json(spec, constants(spec)).dump() << "\n";
      return kExitOk;
    }

    if (*exist) {
      const auto e = exists(exists_args.spec());
      out << nlohmann::json{{"verdict", to_string(e.verdict)},
                            {"reason", to_string(e.reason)}}
                 .dump()
          << "\n";
      switch (e.verdict) {
        case Verdict::Exists: return kExitOk;
        case Verdict::NotExists: return kExitNotExists;
        case Verdict::Unknown: return kExitUnknown;
      }
    }

    if (*construct) {
      const auto spec = construct_args.spec();
      std::optional<Labeling> l;
      if (spec.family == Family::MagicP && spec.k == 2 && spec.n % 2 == 0) {
        l = p2(spec.n);
      } else if (spec.family == Family::DegenerateD && spec.k == 2) {
        l = d2(spec.n);
      } else if (spec.family == Family::MagicP && spec.k == 4) {
        const auto r = p4(spec.n, budget);
        if (!r.labeling) {
          err << "construct: no " << spec.to_string() << " witness ("
              << to_string(r.status) << " after " << r.nodes << " nodes)\n";
          return kExitNotFound;
        }
        l = r.labeling;
      } else {
        err << "construct: no constructor for " << spec.to_string() << "\n";
        return kExitNotFound;
      }
      out << to_json(to_document(spec, *l)).dump() << "\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto doc = parse_document(detail::read_input(verify_file, in));
      const auto report = verify(build(doc.spec), to_labeling(doc));
      out << to_json(report).dump() << "\n";
      return report.is_magic ? kExitOk : kExitNotMagic;
    }

    if (*search) {
      const auto spec = search_args.spec();
      SearchOptions opt;
      opt.mode = search_mode == "count" ? SearchMode::CountAll
                 : search_mode == "all" ? SearchMode::EnumerateAll
                                        : SearchMode::First;
      opt.fix_center = !search_free_center;
      opt.node_limit = search_limit;
      opt.parallel = search_parallel;
      opt.threads = search_threads;
      const auto r = solve(build(spec), opt);
      out << to_json(spec, r, opt.mode != SearchMode::CountAll).dump() << "\n";
      return kExitOk;
    }

    if (*render) {
      std::string svg;
      if (!render_file.empty()) {
        const auto doc = parse_document(detail::read_input(render_file, in));
        svg = to_svg(build(doc.spec), to_labeling(doc));
      } else if (render_bare && !render_args.family.empty()) {
        svg = to_svg(build(render_args.spec()));
      } else {
        err << "render: give --file, or --family/--n/--k with --bare\n";
        return kExitInvalidArgs;
      }
      return detail::write_output(render_out, svg, out, err);
    }
  } catch (const MalformedDocument& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  }
  return kExitInvalidArgs;
}

}  // namespace magicpoly
