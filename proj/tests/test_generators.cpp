#include "doctest.h"
#include "incol/generators.hpp"
#include "incol/rng.hpp"
#include "incol/solver.hpp"
#include "oracles.hpp"

using namespace incol;

TEST_CASE("basic families") {
  CHECK(gen_basic(Family::path, 4).graph.size() == 3);
  CHECK(gen_basic(Family::cycle, 5).graph.size() == 5);
  const Graph s = gen_basic(Family::star, 4).graph;
  CHECK(s.degree(0) == 4);
  const Graph w = gen_basic(Family::wheel, 5).graph;
  CHECK(w.order() == 6);
  CHECK(w.degree(5) == 5);
  CHECK(gen_basic(Family::complete, 4).graph.size() == 6);
  CHECK_THROWS_AS(gen_basic(Family::cycle, 2), std::invalid_argument);
}

TEST_CASE("grid order and size") {
  const Graph g = gen_grid(5, 4).graph;
  CHECK(g.order() == 20);
  CHECK(g.size() == 2 * 5 * 4 - 5 - 4);
  CHECK(gen_grid(3, 2).graph.max_degree() == 3);
  CHECK_THROWS_AS(gen_grid(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen_grid(4, 1), std::invalid_argument);
}

TEST_CASE("Halin graph from a spider with two branch vertices") {
  const Graph tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  const Generated h = gen_halin(tree, planar_leaf_order(tree, 0));
  CHECK(h.graph.max_degree() == 3);
  const auto& spec = std::get<HalinSpec>(h.spec);
  CHECK(spec.leaf_order.size() == 4);
  for (Vertex v = 0; v < h.graph.order(); ++v) CHECK(h.graph.degree(v) == 3);
  CHECK_THROWS_AS(gen_halin(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), {0, 3}), std::invalid_argument);
}

TEST_CASE("random Halin graphs respect the degree cap") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Generated h = gen_halin_random(2 + static_cast<int>(s % 5), 4, s);
    CHECK(h.graph.max_degree() <= 4);
    const auto& spec = std::get<HalinSpec>(h.spec);
    CHECK(is_tree(spec.tree));
    CHECK(spec.leaf_order.size() == spec.attachment.size());
  }
}

TEST_CASE("Hamiltonian cubic graphs") {
  const Generated k33 = gen_ham_cubic(6, {{0, 3}, {1, 4}, {2, 5}});
  for (const Edge& e : k33.graph.edges()) CHECK((e.u % 2) != (e.v % 2));
  CHECK_THROWS_AS(gen_ham_cubic(6, {{0, 1}, {2, 4}, {3, 5}}), std::invalid_argument);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Generated g = gen_ham_cubic_random(12, s);
    for (Vertex v = 0; v < 12; ++v) CHECK(g.graph.degree(v) == 3);
  }
}

TEST_CASE("corona layout") {
  const Generated c = gen_corona(4, 3);
  CHECK(c.graph.order() == 16);
  CHECK(c.graph.size() == 16);
  const auto& s = std::get<CoronaSpec>(c.spec);
  CHECK(c.graph.has_edge(s.cycle(0), s.pendant(0, 3)));
  CHECK(c.graph.degree(s.cycle(2)) == 5);
}

TEST_CASE("cactus construction and the block checker") {
  const Generated two = gen_cactus(8, {{0, 1, 2}, {5, 6, 7}}, {{2, 3}, {3, 4}, {4, 5}});
  CHECK(std::get<CactusSpec>(two.spec).cycles.size() == 2);
  CHECK(oracle::is_cactus(two.graph));
  CHECK(oracle::is_cactus(gen_cactus_random(20, 1).graph));
  for (std::uint64_t s = 2; s < 40; ++s) {
    const Generated g = gen_cactus_random(5 + static_cast<int>(s % 15), s);
    CHECK(oracle::is_cactus(g.graph));
    CHECK(is_connected(g.graph));
  }
  CHECK_FALSE(oracle::is_cactus(gen_basic(Family::complete, 4).graph));
  CHECK_THROWS_AS(gen_cactus(4, {{0, 1, 2}}, {{0, 3}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_cactus(5, {{0, 1, 2}, {2, 3, 4}}, {}), std::invalid_argument);
}

TEST_CASE("cycle powers") {
  const Graph g = gen_cycle_power(8, 2).graph;
  for (Vertex v = 0; v < 8; ++v) CHECK(g.degree(v) == 4);
}

TEST_CASE("random generators are deterministic per seed") {
  Rng a(17), b(17);
  CHECK(random_tree(12, a) == random_tree(12, b));
  CHECK(random_graph(10, 1, 3, a) == random_graph(10, 1, 3, b));
  CHECK(gen_cactus_random(10, 3).graph == gen_cactus_random(10, 3).graph);
  CHECK(gen_ham_cubic_random(10, 3).graph == gen_ham_cubic_random(10, 3).graph);
}

TEST_CASE("random trees and degenerate graphs") {
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const Graph t = random_tree(2 + i % 10, rng);
    CHECK(is_tree(t));
    const Graph d = random_degenerate(4 + i % 10, 2, rng);
    CHECK(degeneracy_order(d).d <= 2);
  }
}

TEST_CASE("family tags round trip") {
  for (Family f : {Family::path, Family::cycle, Family::star, Family::wheel, Family::complete, Family::grid,
                   Family::tree, Family::halin, Family::corona, Family::cactus, Family::ham_cubic,
                   Family::cycle_power})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("torus"), std::invalid_argument);
}
