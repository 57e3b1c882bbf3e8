#include "doctest.h"
#include "incol/generators.hpp"
#include "incol/harness.hpp"
#include "incol/solver.hpp"
#include "oracles.hpp"

using namespace incol;

TEST_CASE("cycle colourings with three colours") {
  const Graph c6 = gen_basic(Family::cycle, 6).graph;
  const SolveResult r6 = solve_list_colouring(c6, ListAssignment::uniform(12, 3));
  REQUIRE(r6.status == SolveStatus::coloured);
  CHECK(oracle::proper(c6, r6.colouring.values()));
  const Graph c4 = gen_basic(Family::cycle, 4).graph;
  CHECK(solve_list_colouring(c4, ListAssignment::uniform(8, 3)).status == SolveStatus::unsatisfiable);
}

TEST_CASE("K2 with singleton lists") {
  const Graph k2(2, {{0, 1}});
  const SolveResult r = solve_list_colouring(k2, ListAssignment({{1}, {2}}));
  REQUIRE(r.status == SolveStatus::coloured);
  CHECK(r.colouring[0] == 1);
  CHECK(r.colouring[1] == 2);
}

TEST_CASE("malformed list assignments are rejected") {
  const Graph k2(2, {{0, 1}});
  CHECK_THROWS(solve_list_colouring(k2, ListAssignment(std::vector<std::vector<Colour>>{{1}})));
}

TEST_CASE("incidence chromatic number of cycles, trees and K4") {
  const int expected[] = {3, 4, 4, 3, 4, 4, 3, 4, 4, 3};
  for (int n = 3; n <= 12; ++n)
    CHECK(incidence_chromatic_number(gen_basic(Family::cycle, n).graph).value == expected[n - 3]);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const Graph t = random_tree(2 + i, rng);
    CHECK(incidence_chromatic_number(t).value == t.max_degree() + 1);
  }
  const Graph k4 = gen_basic(Family::complete, 4).graph;
  const ChiResult r = incidence_chromatic_number(k4);
  REQUIRE(r.status == SolveStatus::coloured);
  CHECK(r.value == kChiK4);
}

TEST_CASE("the frozen K4 value agrees with naive enumeration") {
  const Graph k4 = gen_basic(Family::complete, 4).graph;
  CHECK_FALSE(oracle::enumerate_colouring(k4, oracle::uniform_lists(k4, kChiK4 - 1)));
  CHECK(oracle::enumerate_colouring(k4, oracle::uniform_lists(k4, kChiK4)));
}

TEST_CASE("property: solver agrees with naive enumeration on small graphs") {
  const auto classes = oracle::graph_classes(4);
  Rng rng(77);
  for (const Graph& g : classes) {
    for (int p = 1; p <= 5; ++p) {
      const auto lists = oracle::uniform_lists(g, p);
      const bool naive = oracle::enumerate_colouring(g, lists).has_value();
      const SolveResult r = solve_list_colouring(g, ListAssignment(lists));
      CHECK((r.status == SolveStatus::coloured) == naive);
      if (r.status == SolveStatus::coloured) CHECK(validate_colouring(g, ListAssignment(lists), r.colouring).ok());
    }
    // Random lists exercise the non-uniform case too.
    for (int t = 0; t < 3; ++t) {
      std::vector<std::vector<Colour>> lists;
      for (int i = 0; i < g.incidence_count(); ++i) lists.push_back(oracle::random_list(rng, 2, 4));
      const bool naive = oracle::enumerate_colouring(g, lists).has_value();
      for (VariableOrder order : {VariableOrder::static_order, VariableOrder::most_constrained}) {
        SolverConfig cfg;
        cfg.order = order;
        CHECK((solve_list_colouring(g, ListAssignment(lists), cfg).status == SolveStatus::coloured) == naive);
      }
    }
  }
}

TEST_CASE("node budget yields unknown") {
  const Graph k4 = gen_basic(Family::complete, 4).graph;
  SolverConfig cfg;
  cfg.node_budget = 1;
  CHECK(solve_list_colouring(k4, ListAssignment::uniform(12, 3), cfg).status == SolveStatus::unknown);
  const ChiResult r = incidence_chromatic_number(gen_basic(Family::cycle, 10).graph, cfg);
  CHECK(r.status == SolveStatus::unknown);
  CHECK(r.lower <= r.upper);
}

TEST_CASE("exhaustive choosability") {
  const Graph k2(2, {{0, 1}});
  CHECK(check_choosability_exhaustive(k2, 2, 4).status == ChoosabilityStatus::choosable);
  const Graph c3 = gen_basic(Family::cycle, 3).graph;
  const ChoosabilityResult r = check_choosability_exhaustive(c3, 2, 4);
  REQUIRE(r.status == ChoosabilityStatus::counterexample);
  REQUIRE(r.counterexample);
  CHECK(solve_list_colouring(c3, *r.counterexample).status == SolveStatus::unsatisfiable);
  const Graph p3 = gen_basic(Family::path, 3).graph;
  CHECK(check_choosability_exhaustive(p3, 3, 6).status == ChoosabilityStatus::choosable);
  CHECK_THROWS_AS(check_choosability_exhaustive(k2, 3, 2), std::invalid_argument);
  CHECK(check_choosability_exhaustive(c3, 3, 8, 10).status == ChoosabilityStatus::unknown);
}

TEST_CASE("property: degeneracy order") {
  Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(3 + i % 12, 1, 3, rng);
    const DegeneracyOrder o = degeneracy_order(g);
    REQUIRE(static_cast<int>(o.sequence.size()) == g.order());
    std::vector<int> pos(g.order());
    for (int k = 0; k < g.order(); ++k) pos[o.sequence[k]] = k;
    int worst = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      int later = 0;
      for (Vertex u : g.neighbours(v)) later += pos[u] > pos[v];
      worst = std::max(worst, later);
    }
    CHECK(worst == o.d);
  }
}

TEST_CASE("greedy on degenerate incidence graphs") {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(2 + i % 10, rng);
    const GreedyResult r = greedy_degenerate(t, ListAssignment::uniform(t.incidence_count(), t.max_degree() + 1));
    CHECK(r.success);
    CHECK(validate_colouring(t, r.colouring).ok());
    CHECK(r.degeneracy <= t.max_degree());
  }
  const Graph c4 = gen_basic(Family::cycle, 4).graph;
  const GreedyResult bad = greedy_degenerate(c4, ListAssignment::uniform(8, 2));
  CHECK_FALSE(bad.success);
  CHECK(bad.stuck.has_value());
}
