#pragma once

#include <array>
#include <optional>

#include "builder.hpp"

// Building blocks shared between the constructive procedures.
namespace incol::detail {

// Colours every incidence of the subtree hanging below `start` (away from
// `parent`), node by node: first (w,wc) for each child c, then (c,cw).
void tree_top_down(Builder& b, const Graph& tree, Vertex parent, Vertex start, Rule rule);

// Complete-graph procedure on four vertices of b's graph.
void colour_k4(Builder& b, std::array<Vertex, 4> vertices);

// Corona procedure on its own graph; `lists` already trimmed to the working size.
ConstructiveReport corona_procedure(const CoronaSpec& spec, const Graph& g, const ListAssignment& lists,
                                    std::vector<std::vector<Colour>> working,
                                    const std::optional<CoronaPrecolouring>& pre);

}  // namespace incol::detail
