// Copyright 2026 The convexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Lives in a header so tests can call run()
// in-process with their own streams.

#ifndef CONVEXP_TOOLS_CLI_HPP_
#define CONVEXP_TOOLS_CLI_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "convexp/convexp.hpp"

namespace convexp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // mismatch or internal invariant
inline constexpr int kExitUsage = 2;    // bad input, bad arguments

namespace detail {

struct CommonFlags {
  std::string input;  // empty: read stdin
  std::string format = "text";
};

inline Graph load_graph(const CommonFlags& flags, std::istream& stdin_stream) {
  if (flags.input.empty() || flags.input == "-") {
    return parse_edge_list(stdin_stream);
  }
  std::ifstream file(flags.input);
  if (!file) throw PreconditionError("cannot open " + flags.input);
  return parse_edge_list(file);
}

inline void print_odd_cycle(std::ostream& err, const NotBipartiteError& e) {
  err << "error: " << e.what() << "\nodd cycle:";
  for (Vertex v : e.odd_cycle()) err << ' ' << v;
  err << '\n';
}

// Re-checks every reported partition; returns a description of the first
// broken invariant or an empty string.
inline std::string audit(const Graph& g, std::size_t p,
                         const PartitionSet& partitions) {
  const DistanceTable d = all_distances(g);
  for (const Partition& partition : partitions) {
    if (partition.block_count() != p) return "wrong block count";
    try {
      const auto sets = partition.block_sets();
      if (canonicalize(sets) != partition) return "non-canonical partition";
      for (const VertexSet& block : sets) {
        if (!is_convex_by_frontier(g, d, block)) return "non-convex block";
      }
    } catch (const PreconditionError& e) {
      return e.what();
    }
    if (partition.vertex_count() != g.vertex_count()) return "bad cover";
  }
  return {};
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline int cmd_enumerate(const CommonFlags& flags, std::size_t p,
                         bool count_only, std::size_t parallel,
                         std::istream& in, std::ostream& out,
                         std::ostream& err) {
  const Graph g = load_graph(flags, in);
  Timer timer;
  EnumerateOptions options;
  options.threads = parallel;
  const PartitionSet partitions = enumerate_partitions(g, p, options);
  const double ms = timer.elapsed_ms();
  if (std::string broken = audit(g, p, partitions); !broken.empty()) {
    err << "internal error: " << broken << '\n';
    return kExitFailure;
  }
  if (flags.format == "json") {
    out << partitions_to_json(g.vertex_count(), p, partitions, !count_only)
               .dump()
        << '\n';
  } else if (count_only) {
    out << partitions.size() << '\n';
  } else {
    write_text(out, partitions);
  }
  err << "count: " << partitions.size() << "\nelapsed_ms: " << ms << '\n';
  return kExitOk;
}

inline int cmd_check(const CommonFlags& flags,
                     const std::vector<std::uint64_t>& members,
                     std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(flags, in);
  const std::size_t n = g.vertex_count();
  VertexSet s(n);
  for (std::uint64_t v : members) {
    if (v >= n) {
      err << "error: unknown vertex " << v << " (graph has " << n
          << " vertices)\n";
      return kExitUsage;
    }
    s.insert(static_cast<Vertex>(v));
  }
  const DistanceTable d = all_distances(g);
  const auto violation = find_convexity_violation(d, s);
  if (flags.format == "json") {
    nlohmann::json doc;
    doc["convex"] = !violation.has_value();
    if (violation) doc["witness"] = {violation->u, violation->v, violation->w};
    out << doc.dump() << '\n';
  } else if (violation) {
    // v lies on a shortest u-w path but outside the set.
    out << "not-convex " << violation->u << ' ' << violation->v << ' '
        << violation->w << '\n';
  } else {
    out << "convex\n";
  }
  return kExitOk;
}

inline int cmd_verify(const CommonFlags& flags, std::size_t p, bool force,
                      std::size_t parallel, std::istream& in,
                      std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(flags, in);
  OracleOptions oracle;
  if (force) oracle.max_vertices = 0;
  EnumerateOptions options;
  options.threads = parallel;
  Timer timer;
  const EquivalenceReport report = verify_equivalence(g, p, oracle, options);
  err << "elapsed_ms: " << timer.elapsed_ms() << '\n';
  if (flags.format == "json") {
    nlohmann::json doc;
    doc["match"] = report.match();
    doc["fast_count"] = report.fast_count;
    doc["oracle_count"] = report.oracle_count;
    doc["only_fast"] = nlohmann::json::array();
    doc["only_oracle"] = nlohmann::json::array();
    for (const auto& x : report.only_fast) doc["only_fast"].push_back(x.blocks);
    for (const auto& x : report.only_oracle) {
      doc["only_oracle"].push_back(x.blocks);
    }
    out << doc.dump() << '\n';
  } else {
    out << (report.match() ? "match" : "mismatch")
        << " fast=" << report.fast_count << " oracle=" << report.oracle_count
        << '\n';
    for (const auto& x : report.only_fast) {
      out << "only-fast " << format_partition(x) << '\n';
    }
    for (const auto& x : report.only_oracle) {
      out << "only-oracle " << format_partition(x) << '\n';
    }
  }
  return report.match() ? kExitOk : kExitFailure;
}

inline std::size_t to_count(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw PreconditionError("expected a non-negative integer, got '" + text +
                            "'");
  }
  return static_cast<std::size_t>(value);
}

inline double to_probability(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw PreconditionError("expected a probability, got '" + text + "'");
  }
  return value;
}

inline int cmd_generate(const std::string& family,
                        const std::vector<std::string>& params,
                        std::uint64_t seed, std::ostream& out) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError(family + " takes " + std::to_string(count) +
                              " parameter(s), got " +
                              std::to_string(params.size()));
    }
  };
  Graph g;
  if (family == "path") {
    need(1);
    g = generate::path(to_count(params[0]));
  } else if (family == "even-cycle") {
    need(1);
    g = generate::even_cycle(to_count(params[0]));
  } else if (family == "complete-bipartite") {
    need(2);
    g = generate::complete_bipartite(to_count(params[0]), to_count(params[1]));
  } else if (family == "grid") {
    need(2);
    g = generate::grid(to_count(params[0]), to_count(params[1]));
  } else if (family == "random-tree") {
    need(1);
    g = generate::random_tree(to_count(params[0]), seed);
  } else if (family == "random-bipartite") {
    need(2);
    g = generate::random_bipartite(to_count(params[0]),
                                   to_probability(params[1]), seed);
  } else {
    throw PreconditionError("unknown family '" + family + "'");
  }
  out << to_edge_list(g);
  return kExitOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate convex p-partitions of bipartite graphs", "convexp"};
  app.require_subcommand(1);

  detail::CommonFlags flags;
  std::size_t p = 0;
  std::size_t parallel = 1;
  bool count_only = false;
  bool force = false;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> members;
  std::string family;
  std::vector<std::string> params;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", flags.input, "Edge-list file (default stdin)");
    sub->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List convex p-partitions");
  add_common(enumerate);
  enumerate->add_option("--p", p, "Number of parts")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", count_only, "Print only the count");
  enumerate->add_option("--parallel", parallel, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Test whether a vertex set is convex");
  add_common(check);
  check->add_option("--set", members, "Vertices, comma separated")
      ->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify", "Compare enumeration with the brute-force oracle");
  add_common(verify);
  verify->add_option("--p", p, "Number of parts")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--force", force, "Ignore the oracle size cap");
  verify->add_option("--parallel", parallel, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "Emit a graph as an edge list");
  gen->add_option("family", family,
                  "path | even-cycle | complete-bipartite | grid | "
                  "random-tree | random-bipartite")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Seed for random families");

  std::vector<const char*> argv;
  argv.push_back("convexp");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      return detail::cmd_enumerate(flags, p, count_only, parallel, in, out, err);
    }
    if (check->parsed()) {
      return detail::cmd_check(flags, members, in, out, err);
    }
    if (verify->parsed()) {
      return detail::cmd_verify(flags, p, force, parallel, in, out, err);
    }
    return detail::cmd_generate(family, params, seed, out);
  } catch (const NotBipartiteError& e) {
    detail::print_odd_cycle(err, e);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace convexp::cli

#endif  // CONVEXP_TOOLS_CLI_HPP_
