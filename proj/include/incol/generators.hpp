#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "incol/graph.hpp"
#include "incol/rng.hpp"

namespace incol {

enum class Family { path, cycle, star, wheel, complete, grid, tree, halin, corona, cactus, ham_cubic, cycle_power };

std::string to_string(Family f);
Family family_from_string(const std::string& tag);

// Path, Cycle, Star, Wheel, Complete. Star centre is 0, wheel hub is n.
struct BasicSpec {
  Family family = Family::path;
  int n = 0;
};

// v_{i,j} (1-based) has id (i-1)*n + (j-1).
struct GridSpec {
  int m = 0;
  int n = 0;

  Vertex at(int i, int j) const { return (i - 1) * n + (j - 1); }
};

struct TreeSpec {
  Graph tree;
};

struct HalinSpec {
  Graph tree;
  std::vector<Vertex> leaf_order;  // cyclic order of the outer cycle
  std::vector<Vertex> attachment;  // attachment[i] = t_i, the tree neighbour of leaf_order[i]
};

// Cycle vertex v_i has id i; pendant v_i^j has id n + i*p + (j-1).
struct CoronaSpec {
  int n = 0;
  int p = 0;

  Vertex cycle(int i) const { return ((i % n) + n) % n; }
  Vertex pendant(int i, int j) const { return n + cycle(i) * p + (j - 1); }
};

struct CactusSpec {
  int n = 0;
  std::vector<std::vector<Vertex>> cycles;  // vertex sequences, each closed implicitly
  std::vector<Edge> bridges;                // edges on no cycle
  std::vector<bool> maximal;                // cycle holds a vertex of maximum degree
};

// Hamilton cycle 0,1,...,n-1; partner[v] is the matched vertex of v.
struct HamCubicSpec {
  int n = 0;
  std::vector<Vertex> partner;
};

struct CyclePowerSpec {
  int n = 0;
  int power = 1;
};

using FamilySpec =
    std::variant<BasicSpec, GridSpec, TreeSpec, HalinSpec, CoronaSpec, CactusSpec, HamCubicSpec, CyclePowerSpec>;

Family family_of(const FamilySpec& spec);

struct Generated {
  Graph graph;
  FamilySpec spec;
};

Generated gen_basic(Family family, int n);
Generated gen_grid(int m, int n);
Generated gen_tree(const Graph& tree);
Generated gen_halin(const Graph& tree, std::vector<Vertex> leaf_order);
Generated gen_corona(int n, int p);
Generated gen_ham_cubic(int n, const std::vector<Edge>& matching);
Generated gen_ham_cubic_random(int n, std::uint64_t seed);
Generated gen_cactus(int n, std::vector<std::vector<Vertex>> cycles, const std::vector<Edge>& other_edges);
Generated gen_cactus_random(int size, std::uint64_t seed, int max_cycle_length = 6);
Generated gen_cycle_power(int n, int power);

Graph graph_of(const FamilySpec& spec);

Graph random_tree(int n, Rng& rng);
Graph random_graph(int n, int edge_numerator, int edge_denominator, Rng& rng);
Graph random_degenerate(int n, int d, Rng& rng);

// Leaves in depth-first order from root; a valid planar cyclic order.
std::vector<Vertex> planar_leaf_order(const Graph& tree, Vertex root);

// Plane tree with internal nodes of degree 3..max_degree, closed into a Halin graph.
Generated gen_halin_random(int internal_nodes, int max_degree, std::uint64_t seed);

}  // namespace incol
