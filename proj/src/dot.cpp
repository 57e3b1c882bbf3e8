#include "incol/dot.hpp"

#include <sstream>

namespace incol {

namespace {

// Qualitative palette, cycled when there are more colours than entries.
const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string label(const IncidenceColouring* c, IncidenceId id) {
  if (!c || !c->is_coloured(id)) return "";
  return std::to_string((*c)[id]);
}

}  // namespace

std::string export_dot(const Graph& g, const IncidenceColouring* colouring, DotStyle style) {
  if (colouring && colouring->size() != g.incidence_count()) throw StructuralError("colouring size mismatch");
  std::ostringstream out;
  if (style == DotStyle::annotated) {
    out << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges())
      out << "  " << e.u << " -- " << e.v << " [taillabel=\"" << label(colouring, g.incidence_id(e.u, e.v))
          << "\", headlabel=\"" << label(colouring, g.incidence_id(e.v, e.u)) << "\"];\n";
    out << "}\n";
    return out.str();
  }
  const Graph h = incidence_graph(g);
  out << "graph I {\n  node [shape=box, style=filled];\n";
  constexpr int palette_size = sizeof(kPalette) / sizeof(kPalette[0]);
  for (IncidenceId i = 0; i < g.incidence_count(); ++i) {
    const Incidence& inc = g.incidence(i);
    const std::string c = label(colouring, i);
    out << "  i" << i << " [label=\"(" << inc.vertex << "," << inc.vertex << "-" << inc.other << ")";
    if (!c.empty()) out << "\\n" << c;
    out << "\", fillcolor=\"";
    out << (c.empty() ? "white" : kPalette[((*colouring)[i] % palette_size + palette_size) % palette_size]) << "\"];\n";
  }
  for (const auto& e : h.edges()) out << "  i" << e.u << " -- i" << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace incol
