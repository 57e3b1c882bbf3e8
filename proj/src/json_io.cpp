#include "incol/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace incol {

namespace {

Json pair(const Incidence& inc) { return Json::array({inc.vertex, inc.other}); }

IncidenceId id_of(const Graph& g, const Json& p) { return g.incidence_id(p.at(0).get<int>(), p.at(1).get<int>()); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return out;
}

}  // namespace

Json to_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_json(g.edges())}}; }

Graph graph_from_json(const Json& j) { return Graph(j.at("n").get<int>(), edges_from(j.at("edges"))); }

Json to_json(const FamilySpec& spec) {
  Json j{{"family", to_string(family_of(spec))}};
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BasicSpec>) {
          j["n"] = s.n;
        } else if constexpr (std::is_same_v<S, GridSpec>) {
          j["m"] = s.m;
          j["n"] = s.n;
        } else if constexpr (std::is_same_v<S, TreeSpec>) {
          j["tree"] = to_json(s.tree);
        } else if constexpr (std::is_same_v<S, HalinSpec>) {
          j["tree"] = to_json(s.tree);
          j["leaf_order"] = s.leaf_order;
        } else if constexpr (std::is_same_v<S, CoronaSpec>) {
          j["n"] = s.n;
          j["p"] = s.p;
        } else if constexpr (std::is_same_v<S, CactusSpec>) {
          j["n"] = s.n;
          j["cycles"] = s.cycles;
          j["bridges"] = edges_json(s.bridges);
        } else if constexpr (std::is_same_v<S, HamCubicSpec>) {
          j["n"] = s.n;
          std::vector<Edge> matching;
          for (Vertex v = 0; v < s.n; ++v)
            if (v < s.partner[v]) matching.push_back({v, s.partner[v]});
          j["matching"] = edges_json(matching);
        } else {
          j["n"] = s.n;
          j["power"] = s.power;
        }
      },
      spec);
  return j;
}

FamilySpec spec_from_json(const Json& j) {
  return instance_from_json(Json{{"spec", j}}).spec;
}

Json to_json(const Generated& instance) { return {{"graph", to_json(instance.graph)}, {"spec", to_json(instance.spec)}}; }

Generated instance_from_json(const Json& j) {
  const Json& s = j.at("spec");
  const Family f = family_from_string(s.at("family").get<std::string>());
  Generated out = [&]() -> Generated {
    switch (f) {
      case Family::grid:
        return gen_grid(s.at("m").get<int>(), s.at("n").get<int>());
      case Family::tree:
        return gen_tree(graph_from_json(s.at("tree")));
      case Family::halin:
        return gen_halin(graph_from_json(s.at("tree")), s.at("leaf_order").get<std::vector<Vertex>>());
      case Family::corona:
        return gen_corona(s.at("n").get<int>(), s.at("p").get<int>());
      case Family::cactus:
        return gen_cactus(s.at("n").get<int>(), s.at("cycles").get<std::vector<std::vector<Vertex>>>(),
                          edges_from(s.at("bridges")));
      case Family::ham_cubic:
        return gen_ham_cubic(s.at("n").get<int>(), edges_from(s.at("matching")));
      case Family::cycle_power:
        return gen_cycle_power(s.at("n").get<int>(), s.at("power").get<int>());
      default:
        return gen_basic(f, s.at("n").get<int>());
    }
  }();
  if (j.contains("graph") && !(graph_from_json(j.at("graph")) == out.graph))
    throw std::invalid_argument("instance graph does not match its spec");
  return out;
}

Graph any_graph_from_json(const Json& j) {
  if (j.contains("spec")) return instance_from_json(j).graph;
  if (j.contains("graph")) return graph_from_json(j.at("graph"));
  return graph_from_json(j);
}

Json to_json(const Graph& g, const ListAssignment& lists) {
  Json inc = Json::array();
  for (IncidenceId i = 0; i < g.incidence_count(); ++i) inc.push_back(pair(g.incidence(i)));
  return {{"incidences", inc}, {"lists", lists.lists()}};
}

ListAssignment lists_from_json(const Graph& g, const Json& j) {
  const auto raw = j.at("lists").get<std::vector<std::vector<Colour>>>();
  if (static_cast<int>(raw.size()) != g.incidence_count())
    throw std::invalid_argument("list file has " + std::to_string(raw.size()) + " lists, graph has " +
                                std::to_string(g.incidence_count()) + " incidences");
  if (!j.contains("incidences")) return ListAssignment(raw);
  std::vector<std::vector<Colour>> lists(raw.size());
  const Json& inc = j.at("incidences");
  if (inc.size() != raw.size()) throw std::invalid_argument("incidence and list arrays differ in length");
  for (std::size_t k = 0; k < raw.size(); ++k) lists[id_of(g, inc[k])] = raw[k];
  return ListAssignment(std::move(lists));
}

Json to_json(const Graph& g, const IncidenceColouring& c) {
  Json inc = Json::array();
  for (IncidenceId i = 0; i < g.incidence_count(); ++i) inc.push_back(pair(g.incidence(i)));
  return {{"incidences", inc}, {"colours", c.values()}};
}

IncidenceColouring colouring_from_json(const Graph& g, const Json& j) {
  const auto raw = j.at("colours").get<std::vector<Colour>>();
  if (static_cast<int>(raw.size()) != g.incidence_count()) throw std::invalid_argument("colouring size mismatch");
  if (!j.contains("incidences")) return IncidenceColouring(raw);
  IncidenceColouring c(g.incidence_count());
  const Json& inc = j.at("incidences");
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (raw[k] != kNoColour) c.set(id_of(g, inc.at(k)), raw[k]);
  return c;
}

Json to_json(const Graph& g, const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const auto& s : trace)
    out.push_back({{"id", s.incidence}, {"incidence", pair(g.incidence(s.incidence))}, {"colour", s.colour},
                   {"rule", to_string(s.rule)}});
  return out;
}

std::vector<TraceStep> trace_from_json(const Graph& g, const Json& j) {
  std::vector<TraceStep> out;
  for (const auto& s : j)
    out.push_back({id_of(g, s.at("incidence")), s.at("colour").get<Colour>(), rule_from_string(s.at("rule"))});
  return out;
}

Json to_json(const Graph& g, const ConstructiveReport& r) {
  Json j{{"success", r.success},
         {"used_fallback", r.used_fallback},
         {"colouring", to_json(g, r.colouring)},
         {"trace", to_json(g, r.trace)}};
  if (r.stuck) j["stuck"] = pair(g.incidence(*r.stuck));
  if (r.stuck_rule) j["stuck_rule"] = to_string(*r.stuck_rule);
  return j;
}

Json to_json(const CoronaPrecolouring& pre) { return {{"a", pre.a}, {"b", pre.b}}; }

CoronaPrecolouring precolouring_from_json(const Json& j) { return {j.at("a").get<Colour>(), j.at("b").get<Colour>()}; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace incol
