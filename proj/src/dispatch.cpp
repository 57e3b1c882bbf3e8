#include <numeric>

#include "procedures.hpp"

namespace incol {

namespace {

// The wheel W_n as a Halin graph: star with hub n, rim 0..n-1 in order.
Generated wheel_as_halin(int n) {
  std::vector<Edge> spokes;
  for (int i = 0; i < n; ++i) spokes.push_back({i, n});
  std::vector<Vertex> rim(n);
  std::iota(rim.begin(), rim.end(), 0);
  return gen_halin(Graph(n + 1, std::move(spokes)), std::move(rim));
}

[[noreturn]] void unsupported(const Generated& g) {
  throw std::invalid_argument("no constructive procedure for family " + to_string(family_of(g.spec)));
}

}  // namespace

int theorem_bound(const Generated& instance, bool precoloured) {
  const Graph& g = instance.graph;
  if (precoloured && family_of(instance.spec) != Family::corona)
    throw std::invalid_argument("pre-colouring is only defined for coronae");
  if (const auto* s = std::get_if<BasicSpec>(&instance.spec)) {
    switch (s->family) {
      case Family::path:
      case Family::star:
        return g.max_degree() + 1;
      case Family::cycle:
        return cycle_bound(s->n);
      case Family::wheel:
        return halin_bound(wheel_as_halin(s->n));
      case Family::complete:
        if (s->n <= 2) return s->n;
        if (s->n == 3) return cycle_bound(3);
        if (s->n == 4) return 6;
        break;
      default:
        break;
    }
    unsupported(instance);
  }
  if (const auto* s = std::get_if<GridSpec>(&instance.spec)) return std::min(s->m, s->n) == 2 ? 5 : 6;
  if (std::holds_alternative<TreeSpec>(instance.spec)) return g.max_degree() + 1;
  if (std::holds_alternative<HalinSpec>(instance.spec)) return halin_bound(instance);
  if (const auto* s = std::get_if<CoronaSpec>(&instance.spec)) return corona_bound(s->n, s->p, precoloured);
  if (const auto* s = std::get_if<CactusSpec>(&instance.spec)) return cactus_bound(g, *s);
  if (std::holds_alternative<HamCubicSpec>(instance.spec)) return 6;
  unsupported(instance);
}

ConstructiveReport construct(const Generated& instance, const ListAssignment& lists,
                             const std::optional<CoronaPrecolouring>& pre) {
  const Graph& g = instance.graph;
  if (pre && family_of(instance.spec) != Family::corona)
    throw std::invalid_argument("pre-colouring is only defined for coronae");
  if (const auto* s = std::get_if<BasicSpec>(&instance.spec)) {
    switch (s->family) {
      case Family::path:
      case Family::star:
        return colour_tree(g, lists);
      case Family::cycle:
        return colour_cycle(s->n, lists);
      case Family::wheel: {
        Generated h = wheel_as_halin(s->n);
        return colour_halin(h.graph, std::get<HalinSpec>(h.spec), lists);
      }
      case Family::complete:
        if (s->n <= 2) return colour_tree(g, lists);
        if (s->n == 3) return colour_cycle(3, lists);
        if (s->n == 4) {
          Generated h = wheel_as_halin(3);
          return colour_halin(h.graph, std::get<HalinSpec>(h.spec), lists);
        }
        break;
      default:
        break;
    }
    unsupported(instance);
  }
  if (const auto* s = std::get_if<GridSpec>(&instance.spec)) return colour_grid(s->m, s->n, lists);
  if (std::holds_alternative<TreeSpec>(instance.spec)) return colour_tree(g, lists);
  if (const auto* s = std::get_if<HalinSpec>(&instance.spec)) return colour_halin(g, *s, lists);
  if (const auto* s = std::get_if<CoronaSpec>(&instance.spec)) return colour_corona(*s, lists, pre);
  if (const auto* s = std::get_if<CactusSpec>(&instance.spec)) return colour_cactus(g, *s, lists);
  if (const auto* s = std::get_if<HamCubicSpec>(&instance.spec)) return colour_hamiltonian_cubic(g, *s, lists);
  unsupported(instance);
}

}  // namespace incol
