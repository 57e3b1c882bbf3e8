// Command-line front end: instance generation, exact solving, constructive
// colouring, fuzz campaigns, chi regression and DOT export.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "incol/dot.hpp"
#include "incol/harness.hpp"

using namespace incol;

namespace {

enum Exit { kOk = 0, kFailures = 1, kConfig = 2, kIncomplete = 3 };

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("parameter '" + item + "' is not key=value");
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("parameter '" + item + "' needs an integer value");
    }
  }
  return out;
}

std::string default_out_dir() {
  const char* env = std::getenv("INCOL_OUT_DIR");
  return env && *env ? env : ".";
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const Json& j) { emit(path, j.dump(2) + "\n"); }

struct Options {
  std::string family, params, graph, lists, pre, trace, out, colouring, style = "annotated";
  std::uint64_t seed = 1;
  int trials = 200, workers = 1;
  std::optional<int> k, universe;
  std::optional<std::uint64_t> budget;
  bool precoloured = false;
};

Generated load_instance(const Options& o) {
  if (!o.graph.empty()) return instance_from_json(read_json_file(o.graph));
  if (o.family.empty()) throw ConfigError("give --graph or --family");
  return instance_from_params(family_from_string(o.family), parse_params(o.params), o.seed);
}

ListAssignment load_or_draw_lists(const Options& o, const Graph& g, int default_k) {
  if (!o.lists.empty()) return lists_from_json(g, read_json_file(o.lists));
  const int k = o.k.value_or(default_k);
  return random_list_assignment(g, k, o.universe.value_or(3 * k), o.seed);
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.node_budget = o.budget;
  return cfg;
}

int cmd_generate(const Options& o) {
  if (o.family.empty()) throw ConfigError("--family is required");
  Generated inst = instance_from_params(family_from_string(o.family), parse_params(o.params), o.seed);
  emit(o.out, to_json(inst));
  if (!o.lists.empty()) {
    const int k = o.k ? *o.k : theorem_bound(inst);
    write_json_file(o.lists, to_json(inst.graph, random_list_assignment(inst.graph, k, o.universe.value_or(3 * k), o.seed)));
  }
  return kOk;
}

int cmd_solve(const Options& o) {
  if (o.graph.empty() || o.lists.empty()) throw ConfigError("solve needs --graph and --lists");
  const Graph g = any_graph_from_json(read_json_file(o.graph));
  const ListAssignment lists = lists_from_json(g, read_json_file(o.lists));
  SolveResult r = solve_list_colouring(g, lists, solver_config(o));
  switch (r.status) {
    case SolveStatus::coloured:
      emit(o.out, to_json(g, r.colouring));
      return 0;
    case SolveStatus::unsatisfiable:
      std::cerr << "no list colouring exists (" << r.nodes << " nodes)\n";
      return 1;
    case SolveStatus::unknown:
      std::cerr << "budget exhausted after " << r.nodes << " nodes\n";
      return 2;
  }
  return 2;
}

int cmd_chi(const Options& o) {
  if (o.graph.empty()) throw ConfigError("chi needs --graph");
  const Graph g = any_graph_from_json(read_json_file(o.graph));
  ChiResult r = incidence_chromatic_number(g, solver_config(o));
  Json j{{"lower", r.lower}, {"upper", r.upper}};
  if (r.status == SolveStatus::coloured) j["chi"] = r.value;
  emit(o.out, j);
  return r.status == SolveStatus::coloured ? 0 : 2;
}

int cmd_construct(const Options& o) {
  Generated inst = load_instance(o);
  std::optional<CoronaPrecolouring> pre;
  if (!o.pre.empty()) pre = precolouring_from_json(read_json_file(o.pre));
  const ListAssignment lists = load_or_draw_lists(o, inst.graph, theorem_bound(inst, pre.has_value()));
  ConstructiveReport r = construct(inst, lists, pre);
  if (!o.trace.empty()) write_json_file(o.trace, to_json(inst.graph, r.trace));
  emit(o.out, to_json(inst.graph, r));
  if (!r.success) {
    std::cerr << "stuck";
    if (r.stuck) std::cerr << " at incidence (" << inst.graph.incidence(*r.stuck).vertex << ","
                           << inst.graph.incidence(*r.stuck).other << ")";
    if (r.stuck_rule) std::cerr << " in rule " << to_string(*r.stuck_rule);
    std::cerr << '\n';
  }
  return r.success ? kOk : kFailures;
}

int cmd_fuzz(const Options& o) {
  if (o.family.empty()) throw ConfigError("fuzz needs --family");
  const Family f = family_from_string(o.family);
  FuzzCampaign c;
  if (o.params.empty()) c.instances = sample_instances(f, o.seed);
  else c.instances.push_back({o.family + "[" + o.params + "]", instance_from_params(f, parse_params(o.params), o.seed)});
  c.k = o.k;
  c.universe = o.universe;
  c.trials = o.trials;
  c.seed = o.seed;
  c.precoloured = o.precoloured;
  c.workers = o.workers;
  CampaignReport report = run_campaign(c);
  const std::string dir = o.out.empty() ? default_out_dir() : o.out;
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/fuzz-" + o.family + (o.precoloured ? "-pre" : "") + ".json";
  write_json_file(path, to_json(report));
  std::cout << summary(report) << "report: " << path << '\n';
  return report.total_failures() ? kFailures : kOk;
}

int cmd_regress(const Options& o) {
  auto rows = regression_chi(default_chi_suite(), solver_config(o));
  Json table = Json::array();
  bool mismatch = false, unknown = false;
  for (const auto& r : rows) {
    std::cout << r.name << ": expected " << r.expected << ", got ";
    if (r.unknown()) std::cout << "unknown [" << r.result.lower << "," << r.result.upper << "]";
    else std::cout << r.result.value;
    std::cout << (r.match() ? "  ok" : r.unknown() ? "  incomplete" : "  MISMATCH") << '\n';
    mismatch |= !r.unknown() && !r.match();
    unknown |= r.unknown();
    Json row{{"name", r.name}, {"expected", r.expected}, {"match", r.match()}};
    if (!r.unknown()) row["chi"] = r.result.value;
    table.push_back(row);
  }
  const std::string dir = o.out.empty() ? default_out_dir() : o.out;
  std::filesystem::create_directories(dir);
  write_json_file(dir + "/regress-chi.json", table);
  if (mismatch) return kFailures;
  return unknown ? kIncomplete : kOk;
}

int cmd_export_dot(const Options& o) {
  if (o.graph.empty()) throw ConfigError("export-dot needs --graph");
  const Json gj = read_json_file(o.graph);
  const Graph g = any_graph_from_json(gj);
  DotStyle style;
  if (o.style == "annotated") style = DotStyle::annotated;
  else if (o.style == "incidence") style = DotStyle::incidence_graph;
  else throw ConfigError("--style must be annotated or incidence");
  std::optional<IncidenceColouring> c;
  if (!o.colouring.empty()) {
    c = colouring_from_json(g, read_json_file(o.colouring));
  } else if (!o.lists.empty()) {
    const ListAssignment lists = lists_from_json(g, read_json_file(o.lists));
    if (gj.contains("spec")) {
      ConstructiveReport r = construct(instance_from_json(gj), lists);
      if (r.success) c = r.colouring;
    } else {
      SolveResult r = solve_list_colouring(g, lists, solver_config(o));
      if (r.status == SolveStatus::coloured) c = r.colouring;
    }
    if (!c) std::cerr << "no colouring found; exporting the uncoloured graph\n";
  }
  emit(o.out, export_dot(g, c ? &*c : nullptr, style));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence list-colouring toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--out", o.out, "Output file (or directory for fuzz/regress)");
  };
  auto add_lists = [&](CLI::App* sub) {
    sub->add_option("--lists", o.lists, "List assignment JSON");
    sub->add_option("--k", o.k, "List size for drawn lists");
    sub->add_option("--universe", o.universe, "Colour universe for drawn lists (default 3k)");
  };

  auto* gen = app.add_subcommand("generate", "Write a family instance as JSON");
  add_common(gen);
  add_lists(gen);
  gen->add_option("--family", o.family, "Family tag")->required();
  gen->add_option("--params", o.params, "key=value pairs, e.g. m=5,n=3");

  auto* solve = app.add_subcommand("solve", "Exact list colouring (exit 0/1/2 = coloured/unsat/unknown)");
  add_common(solve);
  solve->add_option("--graph", o.graph, "Graph or instance JSON")->required();
  solve->add_option("--lists", o.lists, "List assignment JSON")->required();
  solve->add_option("--budget", o.budget, "Search node budget");

  auto* chi = app.add_subcommand("chi", "Exact incidence chromatic number");
  add_common(chi);
  chi->add_option("--graph", o.graph, "Graph or instance JSON")->required();
  chi->add_option("--budget", o.budget, "Search node budget per colour count");

  auto* cons = app.add_subcommand("construct", "Run the constructive procedure of a family");
  add_common(cons);
  add_lists(cons);
  cons->add_option("--graph", o.graph, "Instance JSON");
  cons->add_option("--family", o.family, "Family tag (with --params)");
  cons->add_option("--params", o.params, "key=value pairs");
  cons->add_option("--pre", o.pre, "Corona pre-colouring JSON {a, b}");
  cons->add_option("--trace", o.trace, "Write the trace to this file");

  auto* fuzz = app.add_subcommand("fuzz", "Fuzz a family at its theorem bound");
  add_common(fuzz);
  fuzz->add_option("--family", o.family, "Family tag")->required();
  fuzz->add_option("--params", o.params, "Single instance instead of the default grid");
  fuzz->add_option("--trials", o.trials, "Trials per instance");
  fuzz->add_option("--k", o.k, "Explicit list size (default: theorem bound)");
  fuzz->add_option("--universe", o.universe, "Colour universe (default 3k)");
  fuzz->add_option("--workers", o.workers, "Worker threads");
  fuzz->add_flag("--pre", o.precoloured, "Pre-colour the first pendant edge (coronae)");

  auto* regress = app.add_subcommand("regress", "Compare exact chi values with the stored table");
  add_common(regress);
  regress->add_option("--budget", o.budget, "Search node budget per colour count");

  auto* dot = app.add_subcommand("export-dot", "Graphviz export, optionally coloured");
  add_common(dot);
  dot->add_option("--graph", o.graph, "Graph or instance JSON")->required();
  dot->add_option("--lists", o.lists, "Colour from these lists first");
  dot->add_option("--colouring", o.colouring, "Colouring JSON");
  dot->add_option("--style", o.style, "annotated | incidence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*solve) return cmd_solve(o);
    if (*chi) return cmd_chi(o);
    if (*cons) return cmd_construct(o);
    if (*fuzz) return cmd_fuzz(o);
    if (*regress) return cmd_regress(o);
    if (*dot) return cmd_export_dot(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kConfig;
}
