#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "incol/constructive.hpp"
#include "incol/generators.hpp"
#include "incol/graph.hpp"

// JSON forms of the library types. Incidences are written as [vertex, other]
// pairs next to their ids so files stay readable and survive re-indexing.
namespace incol {

using Json = nlohmann::json;

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const Json& j);

Json to_json(const Generated& instance);
Generated instance_from_json(const Json& j);

// A graph file may hold either a bare graph or a generated instance.
Graph any_graph_from_json(const Json& j);

Json to_json(const Graph& g, const ListAssignment& lists);
ListAssignment lists_from_json(const Graph& g, const Json& j);

Json to_json(const Graph& g, const IncidenceColouring& c);
IncidenceColouring colouring_from_json(const Graph& g, const Json& j);

Json to_json(const Graph& g, const std::vector<TraceStep>& trace);
std::vector<TraceStep> trace_from_json(const Graph& g, const Json& j);

Json to_json(const Graph& g, const ConstructiveReport& r);

Json to_json(const CoronaPrecolouring& pre);
CoronaPrecolouring precolouring_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace incol
