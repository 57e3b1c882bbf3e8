#pragma once
// Independent reference implementations used to check the library. Each one
// works from the definitions directly and shares no code with src/.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "incol/constructive.hpp"
#include "incol/graph.hpp"
#include "incol/rng.hpp"

namespace oracle {

using incol::Colour;
using incol::Edge;
using incol::Graph;
using incol::Vertex;

// (v, e) as the vertex and the edge's two ends, sorted.
struct Inc {
  Vertex v;
  Vertex a, b;
};

inline std::vector<Inc> incidences(const Graph& g) {
  std::vector<Inc> out;
  for (const Edge& e : g.edges()) {
    out.push_back({e.u, e.u, e.v});
    out.push_back({e.v, e.u, e.v});
  }
  std::sort(out.begin(), out.end(), [](const Inc& x, const Inc& y) {
    const Vertex ox = x.v == x.a ? x.b : x.a, oy = y.v == y.a ? y.b : y.a;
    return std::pair(x.v, ox) < std::pair(y.v, oy);
  });
  return out;
}

inline bool same_edge(Vertex a1, Vertex b1, Vertex a2, Vertex b2) { return a1 == a2 && b1 == b2; }

// v = w, or e = f, or the edge vw is e or f.
inline bool adjacent(const Inc& x, const Inc& y) {
  if (x.v == y.v && same_edge(x.a, x.b, y.a, y.b)) return false;
  if (x.v == y.v) return true;
  if (same_edge(x.a, x.b, y.a, y.b)) return true;
  const Vertex lo = std::min(x.v, y.v), hi = std::max(x.v, y.v);
  return same_edge(lo, hi, x.a, x.b) || same_edge(lo, hi, y.a, y.b);
}

inline std::vector<std::pair<int, int>> conflict_pairs(const Graph& g) {
  const auto inc = incidences(g);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(inc.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(inc.size()); ++j)
      if (adjacent(inc[i], inc[j])) out.push_back({i, j});
  return out;
}

// Plain odometer over every tuple in the product of the lists.
inline std::optional<std::vector<Colour>> enumerate_colouring(const Graph& g,
                                                               const std::vector<std::vector<Colour>>& lists) {
  const auto pairs = conflict_pairs(g);
  const std::size_t m = lists.size();
  if (m == 0) return std::vector<Colour>{};
  for (const auto& l : lists)
    if (l.empty()) return std::nullopt;
  std::vector<std::size_t> digit(m, 0);
  std::vector<Colour> c(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) c[i] = lists[i][digit[i]];
    bool ok = true;
    for (auto [i, j] : pairs)
      if (c[i] == c[j]) {
        ok = false;
        break;
      }
    if (ok) return c;
    std::size_t pos = 0;
    while (pos < m && ++digit[pos] == lists[pos].size()) digit[pos++] = 0;
    if (pos == m) return std::nullopt;
  }
}

inline std::vector<std::vector<Colour>> uniform_lists(const Graph& g, int p) {
  std::vector<Colour> l(p);
  std::iota(l.begin(), l.end(), 1);
  return std::vector<std::vector<Colour>>(2 * g.size(), l);
}

inline int chi(const Graph& g) {
  if (g.size() == 0) return 0;
  for (int p = 1;; ++p)
    if (enumerate_colouring(g, uniform_lists(g, p))) return p;
}

// Pairwise scan of a colouring against the definition of adjacency.
inline bool proper(const Graph& g, const std::vector<Colour>& c) {
  for (auto [i, j] : conflict_pairs(g))
    if (c[i] == c[j]) return false;
  return true;
}

// Every block is a bridge or a cycle; found with DFS low-links.
inline bool is_cactus(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
  for (int i = 0; i < g.size(); ++i) {
    adj[g.edges()[i].u].push_back({g.edges()[i].v, i});
    adj[g.edges()[i].v].push_back({g.edges()[i].u, i});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> stack;
  int timer = 0;
  bool ok = true;
  std::function<void(Vertex, int)> dfs = [&](Vertex v, int via) {
    disc[v] = low[v] = timer++;
    for (auto [w, id] : adj[v]) {
      if (id == via) continue;
      if (disc[w] < 0) {
        stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::set<Vertex> verts;
          int edges = 0;
          while (true) {
            const int e = stack.back();
            stack.pop_back();
            ++edges;
            verts.insert(g.edges()[e].u);
            verts.insert(g.edges()[e].v);
            if (e == id) break;
          }
          if (edges > 1 && edges != static_cast<int>(verts.size())) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(id);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return ok;
}

// Smallest relabelled edge list over all vertex permutations (small graphs only).
inline std::vector<Edge> canonical_form(int n, const std::vector<Edge>& edges) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> mapped;
    for (const Edge& e : edges) mapped.push_back(incol::canonical(perm[e.u], perm[e.v]));
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped, first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Connected graphs with 1..max_edges edges, one per isomorphism class.
inline std::vector<Graph> connected_classes(int max_edges) {
  std::set<std::pair<int, std::vector<Edge>>> seen;
  std::vector<std::pair<int, std::vector<Edge>>> frontier{{2, {{0, 1}}}};
  seen.insert(frontier[0]);
  for (int m = 2; m <= max_edges; ++m) {
    std::vector<std::pair<int, std::vector<Edge>>> next;
    for (const auto& [n, edges] : frontier) {
      std::vector<Edge> options;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) options.push_back({a, b});
        options.push_back({a, n});
      }
      for (const Edge& e : options) {
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        const int n2 = std::max(n, e.v + 1);
        auto grown = edges;
        grown.push_back(e);
        auto key = std::pair(n2, canonical_form(n2, grown));
        if (seen.insert(key).second) next.push_back(key);
      }
    }
    frontier = next;
  }
  std::vector<Graph> out;
  for (const auto& [n, edges] : seen) out.emplace_back(n, edges);
  return out;
}

// Disjoint unions of connected classes with at most max_edges edges in total.
inline std::vector<Graph> graph_classes(int max_edges) {
  const auto parts = connected_classes(max_edges);
  std::vector<Graph> out;
  std::vector<int> pick;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int budget) {
    if (!pick.empty()) {
      int n = 0;
      std::vector<Edge> edges;
      for (int i : pick) {
        for (const Edge& e : parts[i].edges()) edges.push_back({e.u + n, e.v + n});
        n += parts[i].order();
      }
      out.emplace_back(n, edges);
    }
    for (std::size_t i = from; i < parts.size(); ++i)
      if (parts[i].size() <= budget) {
        pick.push_back(static_cast<int>(i));
        grow(i, budget - parts[i].size());
        pick.pop_back();
      }
  };
  grow(0, max_edges);
  return out;
}

// Hits counted with set semantics, as in "|L ∩ {x, y, z}|".
inline int hits(const std::vector<Colour>& l, std::initializer_list<Colour> xs) {
  std::set<Colour> s(xs);
  int h = 0;
  for (Colour x : s) h += std::count(l.begin(), l.end(), x) > 0;
  return h;
}

inline bool in(const std::vector<Colour>& l, Colour x) { return std::find(l.begin(), l.end(), x) != l.end(); }

// The four choices around an interior grid square, from the lemma's statement.
inline bool grid_ok(const incol::GridLemmaInput& x, Colour a, Colour b, Colour c, Colour d) {
  const std::set<Colour> alphas{x.alpha1, x.alpha1p, x.alpha2, x.alpha2p};
  const std::set<Colour> c_out{x.alpha1, x.alpha2, x.beta4};
  const std::set<Colour> d_out{x.beta1, x.beta2, x.beta3, x.beta4};
  return in(x.l_ux, a) && !alphas.count(a) && in(x.l_uu2, b) && !alphas.count(b) && in(x.l_xu, c) &&
         !c_out.count(c) && in(x.l_xw, d) && !d_out.count(d) && std::set<Colour>{a, b, c}.size() == 3 &&
         std::set<Colour>{a, c, d}.size() == 3;
}

inline bool grid_exists(const incol::GridLemmaInput& x) {
  for (Colour a : x.l_ux)
    for (Colour b : x.l_uu2)
      for (Colour c : x.l_xu)
        for (Colour d : x.l_xw)
          if (grid_ok(x, a, b, c, d)) return true;
  return false;
}

inline std::vector<Colour> random_list(incol::Rng& rng, int k, int universe) {
  std::vector<Colour> all(universe);
  std::iota(all.begin(), all.end(), 1);
  rng.shuffle(all);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace oracle
