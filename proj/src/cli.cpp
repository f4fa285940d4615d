// Copyright 2026 The Authors.
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

#include "covrough/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "covrough/core.hpp"
#include "covrough/graph.hpp"
#include "covrough/io.hpp"
#include "covrough/matroid.hpp"
#include "covrough/oracle.hpp"

namespace covrough::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string format = "text";
  bool oracle = false;
  std::string set_csv;
  std::string method = "circuit-covering";
  std::string u_label;
  std::string v_label;
  std::size_t k = 0;
  std::size_t n = 0;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Options opts;

  bool structured() const { return opts.format == "structured"; }
  // Structured mode is line-oriented: one "key: <json value>" per line.
  void emit(const std::string& key, const json& value) const {
    out << key << ": " << value.dump() << "\n";
  }
};

json json_subset(const Universe& u, const Subset& s) {
  return json(labels_of(u, s));
}

json json_blocks(const Universe& u, const std::vector<Subset>& blocks) {
  json out = json::array();
  for (const Subset& b : blocks) out.push_back(json_subset(u, b));
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Subset parse_set_option(const Context& ctx, const Universe& u) {
  return subset_of_labels(u, split_csv(ctx.opts.set_csv));
}

// Runs fn on the file named in opts (or the provided stream for "-").
template <typename Fn>
auto with_input(Context& ctx, Fn&& fn) {
  if (ctx.opts.file == "-") return fn(ctx.in);
  std::ifstream stream(ctx.opts.file);
  if (!stream) throw Error("cannot open file: " + ctx.opts.file);
  return fn(stream);
}

Graph load_graph(Context& ctx) {
  return with_input(ctx, [](std::istream& in) { return io::parse_graph(in); });
}

std::size_t resolve_vertex(const Graph& g, const std::string& label) {
  auto i = g.vertices().index_of(label);
  if (!i) throw UnknownLabelError(label);
  return *i;
}

// ---------------------------------------------------------------- graph --

int graph_connected(Context& ctx) {
  const Graph g = load_graph(ctx);
  const auto isolated = g.isolated_vertices();
  const bool applicable = g.vertex_count() >= 2 && isolated.empty();

  bool verdict = false;
  std::string method;
  std::optional<Subset> witness;  // nontrivial outer definable set
  std::string note;

  if (!applicable) {
    verdict = connected_components_bfs(g).blocks().size() == 1;
    method = "bfs-fallback";
    if (!isolated.empty()) {
      Subset iso(g.vertex_count());
      for (std::size_t v : isolated) iso.insert(v);
      note = "isolated vertices " + format_subset(g.vertices(), iso);
    } else {
      note = "fewer than 2 vertices";
    }
  } else if (ctx.opts.oracle) {
    method = "oracle";
    const Covering c = induce_covering(g);
    for (const Subset& fp : oracle::outer_definable_exhaustive(c)) {
      if (!fp.empty() && !fp.is_full()) {
        witness = fp;
        break;
      }
    }
    verdict = !witness.has_value();
  } else {
    method = "covering";
    verdict = is_connected_covering(g);
    if (!verdict) {
      Subset seed(g.vertex_count());
      seed.insert(0);
      witness = closure_upper(induce_covering(g), seed);
    }
  }

  if (ctx.structured()) {
    ctx.emit("connected", verdict);
    ctx.emit("method", method);
    if (witness) ctx.emit("witness", json_subset(g.vertices(), *witness));
    if (!note.empty()) ctx.emit("note", note);
  } else {
    ctx.out << "connected: " << (verdict ? "true" : "false");
    if (method == "bfs-fallback") {
      ctx.out << " (covering method inapplicable: " << note
              << "; oracle used)";
    } else if (verdict) {
      ctx.out << " (outer definable sets: ∅, V)";
    } else {
      ctx.out << " (outer definable set: "
              << format_subset(g.vertices(), *witness) << ")";
    }
    if (method == "oracle") ctx.out << " [oracle]";
    ctx.out << "\n";
  }
  return verdict ? 0 : 1;
}

int graph_components(Context& ctx) {
  const Graph g = load_graph(ctx);
  const Partition p = connected_components_bfs(g);
  if (ctx.structured()) {
    ctx.emit("count", p.blocks().size());
    ctx.emit("blocks", json_blocks(g.vertices(), p.blocks()));
  } else {
    ctx.out << "components: " << p.blocks().size() << "\n";
    for (const Subset& b : p.blocks()) {
      ctx.out << "block:";
      for (const auto& label : labels_of(g.vertices(), b))
        ctx.out << " " << label;
      ctx.out << "\n";
    }
  }
  return 0;
}

int graph_induce_covering(Context& ctx) {
  const Graph g = load_graph(ctx);
  const SetFamily family = induce_family(g);
  const CoveringValidation validation = validate_covering(family);
  if (!validation.ok()) {
    if (ctx.structured()) {
      ctx.emit("covering", false);
      ctx.emit("violations", validation.violations.report(g.vertices()));
    } else {
      ctx.out << "covering: false\n";
      for (const auto& line : validation.violations.report(g.vertices()))
        ctx.out << line << "\n";
    }
    return 1;
  }
  if (ctx.structured()) {
    ctx.emit("covering", true);
    ctx.emit("universe", g.vertices().labels());
    ctx.emit("blocks", json_blocks(g.vertices(), validation.covering->blocks()));
  } else {
    io::print_covering(ctx.out, *validation.covering);
  }
  return 0;
}

int graph_incidence(Context& ctx) {
  const Graph g = load_graph(ctx);
  const IncidenceMatrix m = incidence_matrix(g);
  if (ctx.structured()) {
    ctx.emit("rows", m.rows);
    ctx.emit("cols", m.cols);
    json matrix = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
      matrix.push_back(row);
    }
    ctx.emit("matrix", matrix);
    ctx.emit("labels", g.vertices().labels());
  } else {
    io::print_incidence(ctx.out, m, g.vertices().labels());
  }
  return 0;
}

int graph_from_incidence_cmd(Context& ctx) {
  const io::RawIncidence raw = with_input(
      ctx, [](std::istream& in) { return io::parse_incidence(in); });
  const Graph g = covrough::graph_from_incidence(raw.matrix, raw.labels);
  if (ctx.structured()) {
    ctx.emit("vertices", g.vertices().labels());
    json edges = json::array();
    for (const Edge& e : g.edges())
      edges.push_back({g.vertices().label(e.u), g.vertices().label(e.v)});
    ctx.emit("edges", edges);
  } else {
    io::print_graph(ctx.out, g);
  }
  return 0;
}

int graph_witness(Context& ctx) {
  const Graph g = load_graph(ctx);
  const std::size_t u = resolve_vertex(g, ctx.opts.u_label);
  const std::size_t v = resolve_vertex(g, ctx.opts.v_label);

  if (ctx.opts.oracle) {
    if (u == v) throw SameVertexError(ctx.opts.u_label);
    const bool verdict = oracle::path_exists(g, u, v);
    if (ctx.structured()) {
      ctx.emit("connected_pair", verdict);
      ctx.emit("method", "oracle");
    } else {
      ctx.out << "connected pair: " << (verdict ? "true" : "false")
              << " [oracle]\n";
    }
    return verdict ? 0 : 1;
  }

  const auto chain = connection_witness(g, u, v);
  if (ctx.structured()) {
    ctx.emit("connected_pair", chain.has_value());
    if (chain) ctx.emit("chain", json_blocks(g.vertices(), *chain));
  } else if (chain) {
    ctx.out << "connected pair: true\nchain:";
    for (std::size_t i = 0; i < chain->size(); ++i)
      ctx.out << (i == 0 ? " " : " -> ")
              << format_subset(g.vertices(), (*chain)[i]);
    ctx.out << "\n";
  } else {
    ctx.out << "connected pair: false (no chain of covering blocks)\n";
  }
  return chain ? 0 : 1;
}

int graph_subgraph(Context& ctx) {
  const Graph g = load_graph(ctx);
  const Subset k = parse_set_option(ctx, g.vertices());
  const Graph sub = vertex_induced_subgraph(g, k);
  if (ctx.structured()) {
    ctx.emit("vertices", sub.vertices().labels());
    json edges = json::array();
    for (const Edge& e : sub.edges())
      edges.push_back({sub.vertices().label(e.u), sub.vertices().label(e.v)});
    ctx.emit("edges", edges);
  } else {
    io::print_graph(ctx.out, sub);
  }
  return 0;
}

// --------------------------------------------------------------- approx --

int approx_op(Context& ctx, const std::string& op) {
  const SetFamily family = with_input(
      ctx, [](std::istream& in) { return io::parse_family(in); });
  const CoveringValidation validation = validate_covering(family);
  if (!validation.ok()) {
    if (ctx.structured()) {
      ctx.emit("covering", false);
      ctx.emit("violations", validation.violations.report(family.universe()));
    } else {
      ctx.out << "covering: false\n";
      for (const auto& line : validation.violations.report(family.universe()))
        ctx.out << line << "\n";
    }
    return 1;
  }
  const Covering& c = *validation.covering;
  const Subset x = parse_set_option(ctx, c.universe());

  Subset result(x.universe_size());
  if (op == "upper")
    result = upper(c, x);
  else if (op == "lower")
    result = lower(c, x);
  else
    result = closure_upper(c, x);

  if (ctx.structured()) {
    ctx.emit(op, json_subset(c.universe(), result));
    if (op == "upper")
      ctx.emit("outer_definable", is_outer_definable(c, x));
  } else {
    ctx.out << op << ": " << format_subset(c.universe(), result) << "\n";
    if (op == "upper")
      ctx.out << "outer definable: "
              << (is_outer_definable(c, x) ? "true" : "false") << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- matroid --

// Parses and validates; on violations prints the report and returns empty.
std::optional<CircuitFamily> load_matroid(Context& ctx) {
  auto [ground, circuits] = with_input(
      ctx, [](std::istream& in) { return io::parse_circuits(in); });
  CircuitValidation validation = validate_circuits(ground, circuits);
  if (validation.ok()) return std::move(validation.family);

  const auto lines =
      validation.violations.report(ground, validation.checked_circuits);
  if (ctx.structured()) {
    ctx.emit("valid", false);
    ctx.emit("violations", lines);
  } else {
    for (const auto& line : lines) ctx.out << line << "\n";
  }
  return std::nullopt;
}

int matroid_validate(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  if (ctx.structured())
    ctx.emit("valid", true);
  else
    ctx.out << "circuit axioms: C1 ok, C2 ok, C3 ok\n";
  return 0;
}

int matroid_connected(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  const Universe& ground = m->ground();
  const std::size_t n = ground.size();

  // --oracle forces the union-find route.
  const std::string method_name =
      ctx.opts.oracle ? "gamma" : ctx.opts.method;
  ConnectivityMethod method = ConnectivityMethod::kCircuitCovering;
  if (method_name == "gamma")
    method = ConnectivityMethod::kGamma;
  else if (method_name == "induced-graph")
    method = ConnectivityMethod::kInducedGraph;
  else if (method_name != "circuit-covering")
    throw BadParamsError("unknown method: " + method_name);

  const bool verdict = is_connected_matroid(*m, method);

  std::string detail;
  json extra = json::object();
  if (method == ConnectivityMethod::kGamma) {
    const std::size_t classes = gamma_components(*m).blocks().size();
    detail = "gamma classes: " + std::to_string(classes);
    extra["gamma_classes"] = classes;
  } else if (method == ConnectivityMethod::kInducedGraph) {
    detail = verdict ? "G(M) is connected" : "G(M) is disconnected";
  } else if (n == 1) {
    detail = "single-element ground set";
  } else {
    const Subset loop_set = loops(*m);
    if (!loop_set.empty()) {
      detail = std::string("step 1: ") +
               (loop_set.count() == 1 ? "loop " : "loops ") +
               format_subset(ground, loop_set);
      extra["step"] = 1;
      extra["loops"] = json_subset(ground, loop_set);
    } else if (!circuits_cover(*m)) {
      Subset covered(n);
      for (const Subset& c : m->circuits()) covered |= c;
      detail = "step 2: circuits do not cover, missing " +
               format_subset(ground, covered.complement());
      extra["step"] = 2;
      extra["uncovered"] = json_subset(ground, covered.complement());
    } else {
      Subset seed(n);
      seed.insert(0);
      const Subset up = upper_via_circuits(*m, seed);
      detail = "step 3: upper({" + ground.label(0) + "}) = " +
               (up.is_full() ? "ground" : format_subset(ground, up));
      extra["step"] = 3;
      extra["upper_of_first"] = json_subset(ground, up);
    }
  }

  if (ctx.structured()) {
    ctx.emit("connected", verdict);
    ctx.emit("method", method_name);
    for (const auto& [key, value] : extra.items()) ctx.emit(key, value);
  } else {
    ctx.out << "connected: " << (verdict ? "true" : "false") << " (" << detail
            << ")\n";
  }
  return verdict ? 0 : 1;
}

int matroid_induce_graph(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  const Graph g = induce_graph(*m);
  if (ctx.structured()) {
    ctx.emit("vertices", g.vertices().labels());
    json edges = json::array();
    for (const Edge& e : g.edges())
      edges.push_back({g.vertices().label(e.u), g.vertices().label(e.v)});
    ctx.emit("edges", edges);
  } else {
    io::print_graph(ctx.out, g);
  }
  return 0;
}

int matroid_components(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  const Partition p = gamma_components(*m);
  if (ctx.structured()) {
    ctx.emit("count", p.blocks().size());
    ctx.emit("blocks", json_blocks(m->ground(), p.blocks()));
  } else {
    ctx.out << "gamma classes: " << p.blocks().size() << "\n";
    for (const Subset& b : p.blocks()) {
      ctx.out << "block:";
      for (const auto& label : labels_of(m->ground(), b))
        ctx.out << " " << label;
      ctx.out << "\n";
    }
  }
  return 0;
}

int matroid_loops(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  const Subset loop_set = loops(*m);
  if (ctx.structured())
    ctx.emit("loops", json_subset(m->ground(), loop_set));
  else
    ctx.out << "loops: " << format_subset(m->ground(), loop_set) << "\n";
  return 0;
}

int matroid_covers(Context& ctx) {
  const auto m = load_matroid(ctx);
  if (!m) return 1;
  const bool verdict = circuits_cover(*m);
  Subset covered(m->ground().size());
  for (const Subset& c : m->circuits()) covered |= c;
  if (ctx.structured()) {
    ctx.emit("covers", verdict);
    if (!verdict)
      ctx.emit("uncovered", json_subset(m->ground(), covered.complement()));
  } else if (verdict) {
    ctx.out << "covers: true\n";
  } else {
    ctx.out << "covers: false (uncovered "
            << format_subset(m->ground(), covered.complement()) << ")\n";
  }
  return verdict ? 0 : 1;
}

// ------------------------------------------------------------------ gen --

int emit_generated(Context& ctx, const CircuitFamily& m) {
  if (ctx.structured()) {
    ctx.emit("ground", m.ground().labels());
    ctx.emit("circuits", json_blocks(m.ground(), m.circuits()));
  } else {
    io::print_circuits(ctx.out, m.ground(), m.circuits());
  }
  return 0;
}

int gen_uniform(Context& ctx) {
  return emit_generated(ctx, uniform_matroid(ctx.opts.k, ctx.opts.n));
}

int gen_cycle_matroid(Context& ctx) {
  return emit_generated(ctx, cycle_matroid(load_graph(ctx)));
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err, {}};
  std::function<int()> action;

  CLI::App app{"Connectedness of graphs and matroids via covering "
               "approximation operators"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_oracle) {
    cmd->add_option("--format", ctx.opts.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    if (with_oracle)
      cmd->add_flag("--oracle", ctx.opts.oracle,
                    "Decide with the brute-force oracle instead");
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", ctx.opts.file, "Input file ('-' for stdin)")
        ->required();
  };
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&action, fn = std::move(fn)]() { action = fn; });
  };

  CLI::App* graph = app.add_subcommand("graph", "Operations on graph files");
  graph->require_subcommand(1);
  {
    CLI::App* c = graph->add_subcommand(
        "connected", "Decide connectedness via the induced covering");
    add_file(c);
    add_common(c, true);
    bind(c, [&] { return graph_connected(ctx); });

    CLI::App* comp =
        graph->add_subcommand("components", "Connected components (BFS)");
    add_file(comp);
    add_common(comp, false);
    bind(comp, [&] { return graph_components(ctx); });

    CLI::App* cov = graph->add_subcommand(
        "induce-covering", "Edge family as a covering of the vertex set");
    add_file(cov);
    add_common(cov, false);
    bind(cov, [&] { return graph_induce_covering(ctx); });

    CLI::App* inc =
        graph->add_subcommand("incidence", "Vertex-edge incidence matrix");
    add_file(inc);
    add_common(inc, false);
    bind(inc, [&] { return graph_incidence(ctx); });

    CLI::App* from = graph->add_subcommand(
        "from-incidence", "Rebuild a graph from an incidence matrix file");
    add_file(from);
    add_common(from, false);
    bind(from, [&] { return graph_from_incidence_cmd(ctx); });

    CLI::App* wit = graph->add_subcommand(
        "witness", "Chain of covering blocks connecting two vertices");
    add_file(wit);
    wit->add_option("u", ctx.opts.u_label, "First vertex")->required();
    wit->add_option("v", ctx.opts.v_label, "Second vertex")->required();
    add_common(wit, true);
    bind(wit, [&] { return graph_witness(ctx); });

    CLI::App* sub =
        graph->add_subcommand("subgraph", "Vertex-induced subgraph");
    add_file(sub);
    sub->add_option("--set", ctx.opts.set_csv, "Vertices, comma-separated")
        ->required();
    add_common(sub, false);
    bind(sub, [&] { return graph_subgraph(ctx); });
  }

  CLI::App* approx = app.add_subcommand(
      "approx", "Approximation operators on covering files");
  approx->require_subcommand(1);
  for (const std::string op : {"upper", "lower", "closure"}) {
    CLI::App* c = approx->add_subcommand(
        op, op == "closure" ? "Least fixpoint of the upper operator"
                            : "Covering " + op + " approximation");
    add_file(c);
    c->add_option("--set", ctx.opts.set_csv,
                  "Subset, comma-separated labels (may be empty)")
        ->required();
    add_common(c, false);
    bind(c, [&ctx, op] { return approx_op(ctx, op); });
  }

  CLI::App* matroid =
      app.add_subcommand("matroid", "Operations on circuit-family files");
  matroid->require_subcommand(1);
  {
    CLI::App* val = matroid->add_subcommand(
        "validate", "Check the circuit axioms C1, C2, C3");
    add_file(val);
    add_common(val, false);
    bind(val, [&] { return matroid_validate(ctx); });

    CLI::App* con = matroid->add_subcommand(
        "connected", "Decide matroid connectedness");
    add_file(con);
    con->add_option("--method", ctx.opts.method,
                    "gamma | induced-graph | circuit-covering")
        ->check(CLI::IsMember({"gamma", "induced-graph", "circuit-covering"}));
    add_common(con, true);
    bind(con, [&] { return matroid_connected(ctx); });

    CLI::App* ig = matroid->add_subcommand(
        "induce-graph", "Graph joining elements that share a circuit");
    add_file(ig);
    add_common(ig, false);
    bind(ig, [&] { return matroid_induce_graph(ctx); });

    CLI::App* comp = matroid->add_subcommand(
        "components", "Connected components (gamma classes)");
    add_file(comp);
    add_common(comp, false);
    bind(comp, [&] { return matroid_components(ctx); });

    CLI::App* lp = matroid->add_subcommand("loops", "Singleton circuits");
    add_file(lp);
    add_common(lp, false);
    bind(lp, [&] { return matroid_loops(ctx); });

    CLI::App* cv = matroid->add_subcommand(
        "covers", "Do the circuits cover the ground set?");
    add_file(cv);
    add_common(cv, false);
    bind(cv, [&] { return matroid_covers(ctx); });
  }

  CLI::App* gen = app.add_subcommand("gen", "Generate circuit families");
  gen->require_subcommand(1);
  {
    CLI::App* uni = gen->add_subcommand(
        "uniform", "Uniform matroid: circuits are all (k+1)-subsets of 1..n");
    uni->add_option("--k", ctx.opts.k, "Rank parameter")->required();
    uni->add_option("--n", ctx.opts.n, "Ground set size")->required();
    add_common(uni, false);
    bind(uni, [&] { return gen_uniform(ctx); });

    CLI::App* cyc = gen->add_subcommand(
        "cycle-matroid", "Cycle matroid of a graph (circuits = simple cycles)");
    add_file(cyc);
    add_common(cyc, false);
    bind(cyc, [&] { return gen_cycle_matroid(ctx); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("covrough");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace covrough::cli
