#include "incol/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace incol {

namespace {

const char* const kFamilyNames[] = {"path",  "cycle", "star",   "wheel",  "complete",  "grid",
                                    "tree",  "halin", "corona", "cactus", "ham_cubic", "cycle_power"};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& order) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) edges.push_back(canonical(order[i], order[(i + 1) % order.size()]));
  return edges;
}

}  // namespace

std::string to_string(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_string(const std::string& tag) {
  for (int i = 0; i < 12; ++i)
    if (tag == kFamilyNames[i]) return static_cast<Family>(i);
  throw std::invalid_argument("unknown family '" + tag + "'");
}

Family family_of(const FamilySpec& spec) {
  struct Visitor {
    Family operator()(const BasicSpec& s) const { return s.family; }
    Family operator()(const GridSpec&) const { return Family::grid; }
    Family operator()(const TreeSpec&) const { return Family::tree; }
    Family operator()(const HalinSpec&) const { return Family::halin; }
    Family operator()(const CoronaSpec&) const { return Family::corona; }
    Family operator()(const CactusSpec&) const { return Family::cactus; }
    Family operator()(const HamCubicSpec&) const { return Family::ham_cubic; }
    Family operator()(const CyclePowerSpec&) const { return Family::cycle_power; }
  };
  return std::visit(Visitor{}, spec);
}

Generated gen_basic(Family family, int n) {
  std::vector<Edge> edges;
  int order = n;
  switch (family) {
    case Family::path:
      require(n >= 1, "path needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.push_back(canonical(i, (i + 1) % n));
      break;
    case Family::star:
      require(n >= 1, "star needs n >= 1");
      order = n + 1;
      for (int i = 1; i <= n; ++i) edges.push_back({0, i});
      break;
    case Family::wheel:
      require(n >= 3, "wheel needs n >= 3");
      order = n + 1;
      for (int i = 0; i < n; ++i) {
        edges.push_back(canonical(i, (i + 1) % n));
        edges.push_back({i, n});
      }
      break;
    case Family::complete:
      require(n >= 1, "complete graph needs n >= 1");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
    default:
      throw std::invalid_argument("gen_basic: unsupported family " + to_string(family));
  }
  return {Graph(order, std::move(edges)), BasicSpec{family, n}};
}

Generated gen_grid(int m, int n) {
  require(n >= 2, "grid needs n >= 2");
  require(m >= n, "grid needs m >= n (transpose the input)");
  GridSpec spec{m, n};
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < n) edges.push_back({spec.at(i, j), spec.at(i, j + 1)});
      if (i < m) edges.push_back({spec.at(i, j), spec.at(i + 1, j)});
    }
  return {Graph(m * n, std::move(edges)), spec};
}

Generated gen_tree(const Graph& tree) {
  require(is_tree(tree), "not a tree");
  return {tree, TreeSpec{tree}};
}

Generated gen_halin(const Graph& tree, std::vector<Vertex> leaf_order) {
  require(tree.order() >= 4, "Halin tree needs at least 4 vertices");
  require(is_tree(tree), "Halin base graph is not a tree");
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < tree.order(); ++v) {
    require(tree.degree(v) != 2, "Halin tree has a degree-2 vertex " + std::to_string(v));
    if (tree.degree(v) == 1) leaves.push_back(v);
  }
  auto sorted = leaf_order;
  std::sort(sorted.begin(), sorted.end());
  require(sorted == leaves, "leaf order is not a permutation of the leaves");
  std::vector<Edge> edges = tree.edges();
  for (const auto& e : cycle_edges(leaf_order)) edges.push_back(e);
  HalinSpec spec{tree, leaf_order, {}};
  for (Vertex v : leaf_order) spec.attachment.push_back(tree.neighbours(v)[0]);
  return {Graph(tree.order(), std::move(edges)), std::move(spec)};
}

Generated gen_corona(int n, int p) {
  require(n >= 3, "corona needs n >= 3");
  require(p >= 1, "corona needs p >= 1");
  CoronaSpec spec{n, p};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(canonical(i, (i + 1) % n));
    for (int j = 1; j <= p; ++j) edges.push_back({i, spec.pendant(i, j)});
  }
  return {Graph(n * (p + 1), std::move(edges)), spec};
}

Generated gen_ham_cubic(int n, const std::vector<Edge>& matching) {
  require(n >= 4 && n % 2 == 0, "Hamiltonian cubic graph needs even n >= 4");
  HamCubicSpec spec{n, std::vector<Vertex>(n, -1)};
  for (const auto& e : matching) {
    require(e.u >= 0 && e.v >= 0 && e.u < n && e.v < n && e.u != e.v, "matching pair out of range");
    require(spec.partner[e.u] < 0 && spec.partner[e.v] < 0, "matching is not a matching");
    int gap = std::abs(e.u - e.v);
    require(gap != 1 && gap != n - 1, "matching pair is a cycle edge");
    spec.partner[e.u] = e.v;
    spec.partner[e.v] = e.u;
  }
  require(std::none_of(spec.partner.begin(), spec.partner.end(), [](Vertex v) { return v < 0; }),
          "matching is not perfect");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Edge> edges = cycle_edges(order);
  for (const auto& e : matching) edges.push_back(canonical(e.u, e.v));
  return {Graph(n, std::move(edges)), std::move(spec)};
}

Generated gen_ham_cubic_random(int n, std::uint64_t seed) {
  require(n >= 4 && n % 2 == 0, "Hamiltonian cubic graph needs even n >= 4");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    rng.shuffle(perm);
    std::vector<Edge> matching;
    bool ok = true;
    for (int i = 0; i < n && ok; i += 2) {
      int gap = std::abs(perm[i] - perm[i + 1]);
      ok = gap != 1 && gap != n - 1;
      matching.push_back(canonical(perm[i], perm[i + 1]));
    }
    if (ok) {
      std::sort(matching.begin(), matching.end());
      return gen_ham_cubic(n, matching);
    }
  }
  throw std::runtime_error("no admissible matching found");
}

Generated gen_cactus(int n, std::vector<std::vector<Vertex>> cycles, const std::vector<Edge>& other_edges) {
  std::vector<int> owner(n, -1);
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    require(cycles[c].size() >= 3, "cactus cycle shorter than 3");
    for (Vertex v : cycles[c]) {
      require(v >= 0 && v < n, "cactus cycle vertex out of range");
      require(owner[v] < 0, "vertex " + std::to_string(v) + " lies on two cycles");
      owner[v] = static_cast<int>(c);
    }
    for (const auto& e : cycle_edges(cycles[c])) edges.push_back(e);
  }
  for (const auto& e : other_edges) edges.push_back(canonical(e.u, e.v));
  Graph g(n, edges);

  // Vertex-disjoint listed cycles plus cyclomatic number equal to their count
  // means the listed cycles are all the cycles.
  std::vector<int> comp(n, -1);
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbours(v))
        if (comp[u] < 0) {
          comp[u] = components;
          stack.push_back(u);
        }
    }
    ++components;
  }
  require(g.size() - n + components == static_cast<int>(cycles.size()), "graph has cycles beyond the listed ones");

  CactusSpec spec{n, std::move(cycles), {}, {}};
  for (const auto& e : other_edges) spec.bridges.push_back(canonical(e.u, e.v));
  std::sort(spec.bridges.begin(), spec.bridges.end());
  for (const auto& cyc : spec.cycles)
    spec.maximal.push_back(
        std::any_of(cyc.begin(), cyc.end(), [&](Vertex v) { return g.degree(v) == g.max_degree(); }));
  return {std::move(g), std::move(spec)};
}

Generated gen_cactus_random(int size, std::uint64_t seed, int max_cycle_length) {
  require(size >= 2, "random cactus needs size >= 2");
  require(max_cycle_length >= 3, "cycle length bound below 3");
  Rng rng(seed);
  Graph skeleton = random_tree(size, rng);
  std::vector<bool> expand(size);
  for (int i = 0; i < size; ++i) expand[i] = rng.chance(1, 2);
  expand[rng.below(size)] = true;

  // Node i becomes either one vertex or a cycle; its tree edges hook onto random cycle vertices.
  std::vector<std::vector<Vertex>> members(size);
  std::vector<std::vector<Vertex>> cycles;
  int next = 0;
  for (int i = 0; i < size; ++i) {
    int len = expand[i] ? rng.uniform(3, max_cycle_length) : 1;
    for (int t = 0; t < len; ++t) members[i].push_back(next++);
    if (len > 1) cycles.push_back(members[i]);
  }
  std::vector<Edge> bridges;
  for (const auto& e : skeleton.edges()) {
    Vertex a = members[e.u][rng.below(members[e.u].size())];
    Vertex b = members[e.v][rng.below(members[e.v].size())];
    bridges.push_back(canonical(a, b));
  }
  return gen_cactus(next, std::move(cycles), bridges);
}

Generated gen_cycle_power(int n, int power) {
  require(n >= 3, "cycle power needs n >= 3");
  require(power >= 1, "cycle power needs power >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::min(j - i, n - (j - i)) <= power) edges.push_back({i, j});
  return {Graph(n, std::move(edges)), CyclePowerSpec{n, power}};
}

Graph graph_of(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const BasicSpec& s) const { return gen_basic(s.family, s.n).graph; }
    Graph operator()(const GridSpec& s) const { return gen_grid(s.m, s.n).graph; }
    Graph operator()(const TreeSpec& s) const { return s.tree; }
    Graph operator()(const HalinSpec& s) const { return gen_halin(s.tree, s.leaf_order).graph; }
    Graph operator()(const CoronaSpec& s) const { return gen_corona(s.n, s.p).graph; }
    Graph operator()(const CactusSpec& s) const { return gen_cactus(s.n, s.cycles, s.bridges).graph; }
    Graph operator()(const HamCubicSpec& s) const {
      std::vector<Edge> matching;
      for (Vertex v = 0; v < s.n; ++v)
        if (v < s.partner.at(v)) matching.push_back({v, s.partner[v]});
      return gen_ham_cubic(s.n, matching).graph;
    }
    Graph operator()(const CyclePowerSpec& s) const { return gen_cycle_power(s.n, s.power).graph; }
  };
  return std::visit(Visitor{}, spec);
}

Graph random_tree(int n, Rng& rng) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  // Pruefer decoding.
  std::vector<int> code(n - 2);
  for (auto& x : code) x = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int x : code) ++degree[x];
  std::vector<Edge> edges;
  for (int x : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(canonical(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  edges.push_back(canonical(rest[0], rest[1]));
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, int edge_numerator, int edge_denominator, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(edge_numerator, edge_denominator)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph random_degenerate(int n, int d, Rng& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::vector<Vertex> earlier(v);
    std::iota(earlier.begin(), earlier.end(), 0);
    rng.shuffle(earlier);
    int k = std::min(v, rng.uniform(1, d));
    for (int t = 0; t < k; ++t) edges.push_back({earlier[t], v});
  }
  return Graph(n, std::move(edges));
}

std::vector<Vertex> planar_leaf_order(const Graph& tree, Vertex root) {
  std::vector<Vertex> order;
  std::vector<std::pair<Vertex, Vertex>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    if (tree.degree(v) == 1) order.push_back(v);
    auto nb = tree.neighbours(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (*it != parent) stack.push_back({*it, v});
  }
  return order;
}

Generated gen_halin_random(int internal_nodes, int max_degree, std::uint64_t seed) {
  require(internal_nodes >= 1, "Halin tree needs an internal node");
  require(max_degree >= 3, "Halin tree needs max degree >= 3");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> open;  // current leaves other than the root
  int next = 1;
  int root_children = rng.uniform(3, max_degree);
  for (int c = 0; c < root_children; ++c) {
    edges.push_back({0, next});
    open.push_back(next++);
  }
  for (int made = 1; made < internal_nodes; ++made) {
    std::size_t pick = rng.below(open.size());
    Vertex v = open[pick];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    int children = rng.uniform(2, max_degree - 1);
    for (int c = 0; c < children; ++c) {
      edges.push_back({v, next});
      open.push_back(next++);
    }
  }
  Graph tree(next, std::move(edges));
  return gen_halin(tree, planar_leaf_order(tree, 0));
}

}  // namespace incol
