// Copyright 2026 The jp2c Authors
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

#pragma once

// The jp2c command line. run() is the whole program minus main, so tests can
// drive it with string streams.
//
// Exit codes: 0 success, 1 validation failure (invalid cover, absent oracle
// solution, failed sweep), 2 usage error (bad flags, vertices outside the
// graph, parameters outside the supported range).

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/hamilton.hpp"
#include "jp2c/json.hpp"
#include "jp2c/oracle.hpp"
#include "jp2c/p2c_johnson.hpp"
#include "jp2c/p2c_qj.hpp"
#include "jp2c/sweep.hpp"
#include "jp2c/verify.hpp"

namespace jp2c::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  int n = 0;
  int k = 0;
  std::vector<int> levels;
  std::string fixture;
  std::string u, v, x, y, s, t;
  std::string format = "json";
  bool debug_check = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string mode = "exhaustive";
  std::uint64_t seed = kDefaultSweepSeed;
  std::size_t count = 1000;
  std::string constructor;
  unsigned jobs = 1;
  std::size_t budget = SweepConfig{}.budget;
  bool timing = false;

  BuildOptions build() const { return {debug_check}; }
};

// Each host bundles a graph with its vertex encoding and constructors.

struct SetHost {
  SetCodec codec;
  BuildOptions opt;

  ElementSet parse(const std::string& flag, const std::string& text) const {
    std::vector<int> elems;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        elems.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError(flag + ": '" + text + "' is not a comma-separated element list");
      }
    }
    return ElementSet::of(codec.n, elems);
  }
};

struct JohnsonHost : SetHost {
  JohnsonGraph graph;
  bool complete;

  Json describe() const { return complete ? complete_descriptor(graph.n()) : descriptor(graph); }
  std::string default_constructor() const { return complete ? "complete" : "johnson"; }
  Path<ElementSet> hamilton(const ElementSet& s, const ElementSet& t) const {
    if (complete) return hamilton_complete(graph.vertices(), s, t);
    return hamilton_johnson(graph, s, t, opt);
  }
  P2CSolution<ElementSet> p2c(const EndpointQuad<ElementSet>& q) const {
    if (complete) return p2c_complete(graph.vertices(), q);
    return p2c_johnson(graph, q, opt);
  }
};

struct QjHost : SetHost {
  QJGraph graph;

  Json describe() const { return descriptor(graph); }
  std::string default_constructor() const { return "qj"; }
  Path<ElementSet> hamilton(const ElementSet& s, const ElementSet& t) const { return hamilton_qj(graph, s, t, opt); }
  P2CSolution<ElementSet> p2c(const EndpointQuad<ElementSet>& q) const { return p2c_qj(graph, q, opt); }
};

struct FixtureHost {
  Fixture fixture;
  BinaryCodec codec;
  const GenericGraph& graph;

  explicit FixtureHost(Fixture f) : fixture(std::move(f)), codec{fixture.label_bits}, graph(fixture.graph) {}
  FixtureHost(const FixtureHost& o) : fixture(o.fixture), codec(o.codec), graph(fixture.graph) {}

  Json describe() const { return fixture_descriptor(fixture); }
  std::string default_constructor() const { return "oracle"; }
  int parse(const std::string& flag, const std::string& text) const {
    try {
      return codec.parse(text);
    } catch (const Error& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  Path<int> hamilton(int s, int t) const {
    auto found = hamilton_bruteforce(graph, s, t);
    if (!found) fail(ErrorCode::kConstructionCheckFailed, "the fixture has no Hamilton path between these vertices");
    return *found;
  }
  P2CSolution<int> p2c(const EndpointQuad<int>&) const {
    throw UsageError("fixtures have no cover constructor; use the oracle subcommand");
  }
};

using Host = std::variant<JohnsonHost, QjHost, FixtureHost>;

inline Fixture named_fixture(const std::string& name) {
  if (name == "fig1") return fig1_counterexample();
  throw UsageError("unknown fixture '" + name + "' (known: fig1)");
}

inline Host make_host(const Options& o) {
  if (!o.fixture.empty()) {
    if (!o.graph.empty()) throw UsageError("--fixture and --graph are mutually exclusive");
    return FixtureHost(named_fixture(o.fixture));
  }
  if (o.graph.empty()) throw UsageError("one of --graph or --fixture is required");
  if (o.n < 1 || o.n > kMaxGround) throw UsageError("--n must be in 1.." + std::to_string(kMaxGround));
  const SetHost base{SetCodec{o.n}, o.build()};
  if (o.graph == "johnson") {
    if (o.k < 0 || o.k > o.n) throw UsageError("--k must be in 0..n");
    return JohnsonHost{base, JohnsonGraph(o.n, o.k), false};
  }
  if (o.graph == "complete") return JohnsonHost{base, JohnsonGraph(o.n, 1), true};
  if (o.levels.empty()) throw UsageError("--levels is required for --graph qj");
  return QjHost{base, QJGraph(o.n, o.levels)};
}

inline Host host_from_json(const Json& d, const BuildOptions& opt) {
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "fixture") return FixtureHost(named_fixture(d.at("name").get<std::string>()));
  const int n = d.at("n").get<int>();
  if (n < 1 || n > kMaxGround) throw UsageError("graph n out of range");
  const SetHost base{SetCodec{n}, opt};
  if (kind == "johnson") return JohnsonHost{base, JohnsonGraph(n, d.at("k").get<int>()), false};
  if (kind == "complete") return JohnsonHost{base, JohnsonGraph(n, 1), true};
  if (kind == "qj") return QjHost{base, QJGraph(n, d.at("levels").get<std::vector<int>>())};
  throw UsageError("unknown graph kind '" + kind + "'");
}

template <class H>
auto require_flag(const H& h, const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError(flag + " is required");
  auto w = h.parse(flag, value);
  if (!h.graph.contains(w)) fail(ErrorCode::kNotAVertex, flag + " " + value + " is not a vertex of the graph");
  return w;
}

template <class H>
auto quad_from_flags(const H& h, const Options& o) {
  return EndpointQuad{require_flag(h, "--u", o.u), require_flag(h, "--v", o.v), require_flag(h, "--x", o.x),
                      require_flag(h, "--y", o.y)};
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

template <class H>
int cmd_gen(const H& h, const Options& o, std::ostream& out) {
  if (o.format == "dot") {
    out << to_dot(h.graph, h.codec);
  } else {
    emit(out, graph_json(h.graph, h.codec, h.describe()));
  }
  return kExitOk;
}

inline int cmd_fixture(const std::string& name, const Options& o, std::ostream& out) {
  const FixtureHost h(named_fixture(name));
  if (o.format == "dot") {
    out << to_dot(h.graph, h.codec);
    return kExitOk;
  }
  Json j{{"name", h.fixture.name}};
  const Json body = graph_json(h.graph, h.codec, h.describe());
  for (const auto& [key, value] : body.items()) j[key] = value;
  const auto& e = h.fixture.endpoints;
  j["endpoints"] = quad_json(h.codec, EndpointQuad<int>{e[0], e[1], e[2], e[3]});
  emit(out, j);
  return kExitOk;
}

template <class H>
int cmd_hamilton(const H& h, const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = require_flag(h, "--s", o.s);
  const auto t = require_flag(h, "--t", o.t);
  const auto path = h.hamilton(s, t);
  const auto report = check_hamilton(h.graph, path, s, t);
  if (!report.valid) {
    err << "constructed path failed verification: " << report.violations.front().detail << "\n";
    return kExitInvalid;
  }
  if (o.format == "dot") {
    out << to_dot(h.graph, h.codec, {{path, kDotFirstPath}});
  } else {
    emit(out, {{"graph", h.describe()}, {"s", h.codec.write(s)}, {"t", h.codec.write(t)}, {"path", path_json(h.codec, path)}});
  }
  return kExitOk;
}

template <class H>
int cmd_p2c(const H& h, const Options& o, std::ostream& out, std::ostream& err) {
  const auto q = quad_from_flags(h, o);
  const auto sol = h.p2c(q);
  const auto report = check_p2c(h.graph, q, sol);
  if (!report.valid) {
    err << "cover failed verification: " << to_string(report.violations.front().code) << " "
        << report.violations.front().detail << "\n";
    return kExitInvalid;
  }
  if (o.format == "dot") {
    out << to_dot(h.graph, h.codec, {{sol.path_uv, kDotFirstPath}, {sol.path_xy, kDotSecondPath}});
  } else {
    emit(out, {{"graph", h.describe()},
               {"quad", quad_json(h.codec, q)},
               {"path_uv", path_json(h.codec, sol.path_uv)},
               {"path_xy", path_json(h.codec, sol.path_xy)}});
  }
  return kExitOk;
}

template <class H>
int cmd_oracle(const H& h, const Options& o, std::ostream& out, std::ostream& err) {
  const auto q = quad_from_flags(h, o);
  const auto found = p2c_bruteforce(h.graph, q, o.oracle_cap);
  if (!found) {
    emit(out, {{"exists", false}});
    return kExitInvalid;
  }
  const auto report = check_p2c(h.graph, q, *found);
  if (!report.valid) {
    err << "oracle witness failed verification: " << report.violations.front().detail << "\n";
    return kExitInvalid;
  }
  emit(out, {{"exists", true}, {"path_uv", path_json(h.codec, found->path_uv)}, {"path_xy", path_json(h.codec, found->path_xy)}});
  return kExitOk;
}

template <class H>
int cmd_verify(const H& h, const Json& doc, std::ostream& out) {
  CheckReport report;
  if (doc.contains("path")) {
    report = check_hamilton(h.graph, read_path(h.codec, doc.at("path")), h.codec.read(doc.at("s")), h.codec.read(doc.at("t")));
  } else {
    const auto q = read_quad(h.codec, doc.at("quad"));
    P2CSolution<decltype(q.u)> sol{read_path(h.codec, doc.at("path_uv")), read_path(h.codec, doc.at("path_xy"))};
    report = check_p2c(h.graph, q, sol);
  }
  emit(out, report_json(report));
  return report.valid ? kExitOk : kExitInvalid;
}

template <class H, class Solve>
int run_sweep(const H& h, const Options& o, const std::string& name, const Solve& solve, std::ostream& out) {
  SweepConfig config;
  config.mode = o.mode == "sampled" ? SweepMode::kSampled : SweepMode::kExhaustive;
  config.seed = o.seed;
  config.count = o.count;
  config.budget = o.budget;
  config.jobs = o.jobs;
  const auto start = std::chrono::steady_clock::now();
  const auto summary = sweep(h.graph, solve, config);
  Json j = sweep_json(h.codec, h.describe(), name, summary);
  if (o.timing) j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(out, j);
  return summary.all_valid() ? kExitOk : kExitInvalid;
}

template <class H>
int cmd_sweep(const H& h, const Options& o, std::ostream& out) {
  const std::string name = o.constructor.empty() ? h.default_constructor() : o.constructor;
  if (name == "oracle") return run_sweep(h, o, name, oracle_constructor(o.oracle_cap), out);
  if constexpr (std::is_same_v<H, JohnsonHost>) {
    if (name == "complete" && h.graph.k() == 1) return run_sweep(h, o, name, complete_constructor(), out);
    if (name == "johnson") return run_sweep(h, o, name, johnson_constructor(o.build()), out);
  } else if constexpr (std::is_same_v<H, QjHost>) {
    if (name == "qj") return run_sweep(h, o, name, qj_constructor(o.build()), out);
  }
  throw UsageError("constructor '" + name + "' does not apply to this graph");
}

inline bool is_usage(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotAVertex:
    case ErrorCode::kEqualEndpoints:
    case ErrorCode::kTooFewVertices:
    case ErrorCode::kBadQuad:
    case ErrorCode::kOutOfTheoremRange:
    case ErrorCode::kTooLargeForOracle:
    case ErrorCode::kSweepBudget:
      return true;
    default:
      return false;
  }
}

inline void add_graph_flags(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph, "Graph family")->check(CLI::IsMember({"johnson", "qj", "complete"}));
  sub->add_option("--n", o.n, "Ground set size");
  sub->add_option("--k", o.k, "Subset size (johnson)");
  sub->add_option("--levels", o.levels, "Comma-separated level sizes (qj)")->delimiter(',');
  sub->add_option("--fixture", o.fixture, "Built-in fixture graph (fig1)");
  sub->add_flag("--debug-check", o.debug_check, "Validate every intermediate sub-solution");
}

inline void add_quad_flags(CLI::App* sub, Options& o) {
  sub->add_option("--u", o.u, "First path start");
  sub->add_option("--v", o.v, "First path end");
  sub->add_option("--x", o.x, "Second path start");
  sub->add_option("--y", o.y, "Second path end");
}

inline void add_format_flag(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Paired 2-disjoint path covers of Johnson and stacked Johnson graphs", "jp2c"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Emit the vertex and edge lists of a graph");
  add_graph_flags(gen, o);
  add_format_flag(gen, o);

  auto* ham = app.add_subcommand("hamilton", "Construct a Hamilton path between --s and --t");
  add_graph_flags(ham, o);
  add_format_flag(ham, o);
  ham->add_option("--s", o.s, "Start vertex");
  ham->add_option("--t", o.t, "End vertex");

  auto* p2c = app.add_subcommand("p2c", "Construct a paired 2-disjoint path cover");
  add_graph_flags(p2c, o);
  add_quad_flags(p2c, o);
  add_format_flag(p2c, o);

  auto* ver = app.add_subcommand("verify", "Check a path or cover read as JSON from standard input");

  auto* orc = app.add_subcommand("oracle", "Exact search for a cover on a small graph");
  add_graph_flags(orc, o);
  add_quad_flags(orc, o);
  orc->add_option("--oracle-cap", o.oracle_cap, "Largest vertex count the search accepts");

  auto* swp = app.add_subcommand("sweep", "Run and check a constructor over many endpoint quads");
  add_graph_flags(swp, o);
  swp->add_option("--mode", o.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  swp->add_option("--seed", o.seed, "Sampling seed");
  swp->add_option("--count", o.count, "Sample count");
  swp->add_option("--constructor", o.constructor, "johnson, qj, complete or oracle")
      ->check(CLI::IsMember({"johnson", "qj", "complete", "oracle"}));
  swp->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  swp->add_option("--budget", o.budget, "Largest exhaustive quad count");
  swp->add_option("--oracle-cap", o.oracle_cap, "Largest vertex count the oracle accepts");
  swp->add_flag("--timing", o.timing, "Add elapsed seconds to the summary");

  auto* fix = app.add_subcommand("fixture", "Describe a built-in fixture graph");
  std::string fixture_name = "fig1";
  fix->add_option("--name", fixture_name, "Fixture name");
  add_format_flag(fix, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fix->parsed()) return cmd_fixture(fixture_name, o, out);
    if (ver->parsed()) {
      const std::string text(std::istreambuf_iterator<char>(in), {});
      const Json doc = Json::parse(text);
      const Host host = host_from_json(doc.at("graph"), o.build());
      return std::visit([&](const auto& h) { return cmd_verify(h, doc, out); }, host);
    }
    const Host host = make_host(o);
    return std::visit(
        [&](const auto& h) {
          if (gen->parsed()) return cmd_gen(h, o, out);
          if (ham->parsed()) return cmd_hamilton(h, o, out, err);
          if (p2c->parsed()) return cmd_p2c(h, o, out, err);
          if (orc->parsed()) return cmd_oracle(h, o, out, err);
          return cmd_sweep(h, o, out);
        },
        host);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage(e.code()) ? kExitUsage : kExitInvalid;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace jp2c::cli
