#include "doctest.h"
#include "incol/generators.hpp"
#include "incol/graph.hpp"
#include "incol/rng.hpp"
#include "incol/solver.hpp"
#include "oracles.hpp"

using namespace incol;

namespace {

Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }

std::vector<Graph> random_graphs(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng.uniform(1, 15), rng.uniform(1, 3), 6, rng));
  return out;
}

}  // namespace

TEST_CASE("incidences of K2, C3 and G_{2,2}") {
  Graph k2(2, {{0, 1}});
  REQUIRE(k2.incidence_count() == 2);
  CHECK(k2.incidence(0) == Incidence{0, 1});
  CHECK(k2.incidence(1) == Incidence{1, 0});
  CHECK(gen_basic(Family::cycle, 3).graph.incidence_count() == 6);
  CHECK(gen_grid(2, 2).graph.incidence_count() == 8);
}

TEST_CASE("incidence adjacency on P3") {
  const Graph g = p3();
  const auto a = g.incidence(g.incidence_id(0, 1));
  const auto b = g.incidence(g.incidence_id(1, 0));
  const auto c = g.incidence(g.incidence_id(2, 1));
  const auto d = g.incidence(g.incidence_id(1, 2));
  CHECK(incidence_adjacent(a, b));
  CHECK_FALSE(incidence_adjacent(a, c));
  CHECK(incidence_adjacent(b, d));
  CHECK(incidence_adjacent(a, d));  // the edge 0-1 is the edge of a
}

TEST_CASE("neighbourhood sizes from the degree formula") {
  const Graph grid = gen_grid(5, 5).graph;
  const GridSpec s{5, 5};
  CHECK(incidence_neighbourhood(grid, grid.incidence_id(s.at(3, 3), s.at(3, 4))).size() == 10);
  Graph k2(2, {{0, 1}});
  CHECK(incidence_neighbourhood(k2, 0).size() == 1);
  const Graph s3 = gen_basic(Family::star, 3).graph;
  CHECK(incidence_neighbourhood(s3, s3.incidence_id(1, 0)).size() == 3);
}

TEST_CASE("internal and external incidence sets") {
  const Graph s3 = gen_basic(Family::star, 3).graph;
  CHECK(internal_incidences(s3, 0).size() == 3);
  CHECK(external_incidences(s3, 0).size() == 3);
  for (IncidenceId id : internal_incidences(s3, 0)) CHECK(s3.incidence(id).vertex == 0);
  for (IncidenceId id : external_incidences(s3, 0)) CHECK(s3.incidence(id).other == 0);
}

TEST_CASE("incidence graph of small graphs") {
  const Graph ik2 = incidence_graph(Graph(2, {{0, 1}}));
  CHECK(ik2.order() == 2);
  CHECK(ik2.size() == 1);
  const Graph ic4 = incidence_graph(gen_basic(Family::cycle, 4).graph);
  CHECK(ic4.order() == 8);
  for (Vertex v = 0; v < 8; ++v) CHECK(ic4.degree(v) == 4);
}

TEST_CASE("property: counts, neighbourhoods and adjacency agree with the definitions") {
  for (const Graph& g : random_graphs(100, 41)) {
    REQUIRE(g.incidence_count() == 2 * g.size());
    const auto ref = oracle::incidences(g);
    const auto pairs = oracle::conflict_pairs(g);
    std::set<std::pair<int, int>> expected(pairs.begin(), pairs.end());
    for (IncidenceId i = 0; i < g.incidence_count(); ++i) {
      const Incidence& x = g.incidence(i);
      CHECK(x.vertex == ref[i].v);
      CHECK_FALSE(incidence_adjacent(x, x));
      const auto nb = incidence_neighbourhood(g, i);
      CHECK(static_cast<int>(nb.size()) == 2 * g.degree(x.vertex) + g.degree(x.other) - 2);
      for (IncidenceId j = 0; j < g.incidence_count(); ++j) {
        if (i == j) continue;
        const bool adj = incidence_adjacent(x, g.incidence(j));
        CHECK(adj == incidence_adjacent(g.incidence(j), x));
        CHECK(adj == (expected.count({std::min(i, j), std::max(i, j)}) > 0));
        CHECK(adj == std::binary_search(nb.begin(), nb.end(), j));
      }
    }
    const Graph ig = incidence_graph(g);
    CHECK(ig.size() == static_cast<int>(pairs.size()));
  }
}

TEST_CASE("property: deleting an edge or vertex gives an incidence subgraph") {
  Rng rng(5);
  for (const Graph& g : random_graphs(40, 43)) {
    if (g.size() == 0) continue;
    const Edge e = g.edges()[rng.below(g.size())];
    for (const Graph& h : {remove_edge(g, e), remove_vertex(g, e.u)}) {
      const Graph ih = incidence_graph(h), ig = incidence_graph(g);
      auto to_g = [&](IncidenceId i) {
        const Incidence& x = h.incidence(i);
        return g.incidence_id(x.vertex, x.other);
      };
      for (const Edge& f : ih.edges()) CHECK(ig.has_edge(to_g(f.u), to_g(f.v)));
    }
  }
}

TEST_CASE("property: I(C_n) is the square of C_2n for n = 3..8") {
  for (int n = 3; n <= 8; ++n) {
    const Graph c = gen_basic(Family::cycle, n).graph;
    const Graph ic = incidence_graph(c);
    const Graph sq = gen_cycle_power(2 * n, 2).graph;
    // (v_i, v_i v_{i+1}) -> 2i + 1 and (v_{i+1}, v_{i+1} v_i) -> 2i + 2 walks round C_2n.
    std::vector<Vertex> phi(ic.order());
    for (int i = 0; i < n; ++i) {
      phi[c.incidence_id(i, (i + 1) % n)] = (2 * i + 1) % (2 * n);
      phi[c.incidence_id((i + 1) % n, i)] = (2 * i + 2) % (2 * n);
    }
    REQUIRE(ic.size() == sq.size());
    for (const Edge& e : ic.edges()) CHECK(sq.has_edge(phi[e.u], phi[e.v]));
  }
}

TEST_CASE("validate_colouring verdicts") {
  const Graph c3 = gen_basic(Family::cycle, 3).graph;
  SolveResult r = solve_list_colouring(c3, ListAssignment::uniform(6, 3));
  REQUIRE(r.status == SolveStatus::coloured);
  const auto v = validate_colouring(c3, ListAssignment::uniform(6, 3), r.colouring);
  CHECK(v.total);
  CHECK(v.proper);
  CHECK(v.list_respecting);
  CHECK(oracle::proper(c3, r.colouring.values()));

  IncidenceColouring same(6);
  same.set(c3.incidence_id(0, 1), 1);
  same.set(c3.incidence_id(1, 0), 1);
  const auto bad = validate_colouring(c3, same);
  CHECK_FALSE(bad.proper);
  REQUIRE(bad.first_conflict);
  CHECK(c3.incidence(bad.first_conflict->first).edge() == c3.incidence(bad.first_conflict->second).edge());

  IncidenceColouring partial(6);
  partial.set(0, 1);
  const auto part = validate_colouring(c3, partial);
  CHECK_FALSE(part.total);
  CHECK(part.proper);

  CHECK_THROWS_AS(validate_colouring(c3, IncidenceColouring(5)), StructuralError);
  IncidenceColouring off(6);
  for (IncidenceId i = 0; i < 6; ++i) off.set(i, 9 + i);
  CHECK_FALSE(validate_colouring(c3, ListAssignment::uniform(6, 3), off).list_respecting);
}

TEST_CASE("empty and edgeless graphs") {
  Graph empty;
  CHECK(empty.incidence_count() == 0);
  CHECK(incidence_graph(empty).order() == 0);
  Graph edgeless(4);
  CHECK(edgeless.incidence_count() == 0);
  CHECK(validate_colouring(edgeless, IncidenceColouring(0)).ok());
  CHECK(incidence_chromatic_number(edgeless).value == 0);
}

TEST_CASE("list assignment helpers") {
  ListAssignment l({{3, 1}, {2, 5, 4}});
  CHECK(l.min_list_size() == 2);
  CHECK(l.max_colour() == 5);
  CHECK(l.contains(0, 3));
  CHECK_FALSE(l.contains(0, 2));
  const auto u = ListAssignment::uniform(3, 4);
  CHECK(u.size() == 3);
  CHECK(u.min_list_size() == 4);
}
