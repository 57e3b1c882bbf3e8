#pragma once

#include <string>

#include "incol/graph.hpp"

namespace incol {

enum class DotStyle {
  annotated,        // G itself; each edge end carries the colour of the incidence at that end
  incidence_graph,  // I_G with one node per incidence, filled by colour
};

// `colouring` may be null or partial; uncoloured incidences are left blank.
std::string export_dot(const Graph& g, const IncidenceColouring* colouring, DotStyle style = DotStyle::annotated);

}  // namespace incol
