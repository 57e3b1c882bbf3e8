#include <algorithm>
#include <deque>

#include "incol/solver.hpp"
#include "procedures.hpp"

namespace incol {

namespace detail {

namespace {

using Order = std::vector<std::pair<int, int>>;

// Incidence orders on labels 0..3, each pair (i,j) meaning (v_i, v_i v_j).
const Order kCaseOneAB = {{3, 1}, {3, 2}, {2, 3}, {1, 3}, {2, 1}, {1, 2}, {0, 3}, {0, 2}, {0, 1}};
const Order kCaseOneBC = {{0, 2}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}, {0, 3}, {0, 1}};
const Order kCaseTwoA = {{1, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 1}, {3, 0}, {0, 3}, {0, 2}, {0, 1}};
const Order kCaseTwoASwapped = {{1, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 1}, {3, 0}, {0, 2}, {0, 3}, {0, 1}};
const Order kCaseTwoB = {{3, 1}, {3, 2}, {2, 3}, {2, 0}, {2, 1}, {1, 3}, {1, 0}, {0, 1}};

int hits(const std::vector<Colour>& l, Colour x, Colour y) { return contains(l, x) + (x != y && contains(l, y)); }

}  // namespace

void colour_k4(Builder& b, std::array<Vertex, 4> vertices) {
  std::sort(vertices.begin(), vertices.end());
  do {
    std::array<Vertex, 4> v = vertices;
    auto inc = [&](int i, int j) { return b.id(v[i], v[j]); };
    auto run = [&](const Order& order, Rule rule) {
      for (auto [i, j] : order) b.greedy(inc(i, j), rule);
    };
    auto claim = claim_k4_choose(b.list(inc(1, 0)), b.list(inc(2, 0)), b.list(inc(3, 0)), b.list(inc(0, 1)));
    if (!claim) continue;
    auto [a, bb, c] = *claim;
    const auto& target = b.list(inc(0, 1));

    if (a == bb || a == c || bb == c) {
      if (a != bb && a == c) {
        std::swap(v[2], v[3]);
        std::swap(bb, c);
      }
      b.fix(inc(1, 0), a, Rule::halin_k4_claim);
      b.fix(inc(2, 0), bb, Rule::halin_k4_claim);
      b.fix(inc(3, 0), c, Rule::halin_k4_claim);
      run(a == bb ? kCaseOneAB : kCaseOneBC, Rule::halin_k4_case_1);
      return;
    }
    if (contains(target, a)) continue;  // not reachable by relabelling from here
    if (contains(target, bb)) {
      std::swap(v[2], v[3]);
      std::swap(bb, c);
    }
    const auto& l02 = b.list(inc(0, 2));
    const auto& l03 = b.list(inc(0, 3));
    if (hits(l02, a, bb) <= 1 || hits(l03, a, bb) <= 1) {
      b.fix(inc(1, 0), a, Rule::halin_k4_claim);
      b.fix(inc(2, 0), bb, Rule::halin_k4_claim);
      run(hits(l02, a, bb) <= 1 ? kCaseTwoA : kCaseTwoASwapped, Rule::halin_k4_case_2a);
      return;
    }
    b.fix(inc(3, 0), c, Rule::halin_k4_claim);
    b.fix(inc(0, 2), a, Rule::halin_k4_case_2b);
    b.fix(inc(0, 3), bb, Rule::halin_k4_case_2b);
    const auto& l10 = b.list(inc(1, 0));
    const auto& l12 = b.list(inc(1, 2));
    Colour d = l12.front();
    if (contains(l10, bb)) {
      if (contains(l12, bb)) d = bb;
      else d = minus(l12, l10).front();
    }
    b.fix(inc(1, 2), d, Rule::halin_k4_case_2b);
    run(kCaseTwoB, Rule::halin_k4_case_2b);
    return;
  } while (std::next_permutation(vertices.begin(), vertices.end()));

  // No labelling reaches a covered case: every edge's two incidences share one
  // list and the lists at each vertex are pairwise disjoint, so the only
  // interacting pairs are the two incidences of an edge.
  for (Vertex x : vertices)
    for (Vertex y : vertices)
      if (x != y) b.greedy(b.id(x, y), Rule::halin_k4_edge_lists);
}

}  // namespace detail

namespace {

bool is_star(const Graph& tree) {
  int internal = 0;
  for (Vertex v = 0; v < tree.order(); ++v) internal += tree.degree(v) > 1;
  return internal == 1;
}

void wheel_like(detail::Builder& b, const HalinSpec& spec) {
  const Graph& tree = spec.tree;
  const Incidence first = tree.incidence(0);
  b.greedy(b.id(first.vertex, first.other), Rule::halin_wheel_tree);
  b.greedy(b.id(first.other, first.vertex), Rule::halin_wheel_tree);
  detail::tree_top_down(b, tree, first.other, first.vertex, Rule::halin_wheel_tree);
  detail::tree_top_down(b, tree, first.vertex, first.other, Rule::halin_wheel_tree);
  if (!b.ok()) return;

  // Each cycle incidence keeps at least four colours; the cycle is list-coloured exactly.
  const int k = static_cast<int>(spec.leaf_order.size());
  const Graph cycle = gen_basic(Family::cycle, k).graph;
  std::vector<IncidenceId> to_g(cycle.incidence_count());
  std::vector<std::vector<Colour>> residual(cycle.incidence_count());
  for (IncidenceId i = 0; i < cycle.incidence_count(); ++i) {
    const Incidence& inc = cycle.incidence(i);
    to_g[i] = b.id(spec.leaf_order[inc.vertex], spec.leaf_order[inc.other]);
    residual[i] = b.available(to_g[i]);
    if (residual[i].empty()) {
      b.fail(to_g[i], Rule::halin_wheel_cycle);
      return;
    }
  }
  SolveResult r = solve_list_colouring(cycle, ListAssignment(residual));
  if (r.status != SolveStatus::coloured) {
    b.fail(to_g[0], Rule::halin_wheel_cycle);
    return;
  }
  for (IncidenceId i = 0; i < cycle.incidence_count(); ++i) b.fix(to_g[i], r.colouring[i], Rule::halin_wheel_cycle);
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to) {
  std::vector<Vertex> parent(tree.order(), -1);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : tree.neighbours(x))
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

void non_wheel(detail::Builder& b, const HalinSpec& spec) {
  const Graph& tree = spec.tree;
  const int k = static_cast<int>(spec.leaf_order.size());
  const auto& t = spec.attachment;
  auto at = [&](int i) { return ((i % k) + k) % k; };

  // Prefer t_{k-1} = t_0 != t_1 = t_2; any i with t_{i-1} != t_i works.
  int r = -1;
  for (int i = 0; i < k && r < 0; ++i)
    if (t[at(i - 1)] == t[at(i)] && t[at(i)] != t[at(i + 1)] && t[at(i + 1)] == t[at(i + 2)]) r = i;
  for (int i = 0; i < k && r < 0; ++i)
    if (t[at(i)] != t[at(i + 1)]) r = i;
  auto V = [&](int i) { return spec.leaf_order[at(r + i)]; };
  auto T = [&](int i) { return t[at(r + i)]; };
  auto id = [&](Vertex x, Vertex y) { return b.id(x, y); };

  HalinClaimInput in;
  in.a = b.list(id(V(k - 1), T(k - 1)));
  in.b = b.list(id(V(0), T(0)));
  in.c = b.list(id(V(0), V(1)));
  in.d = b.list(id(T(1), V(1)));
  in.e = b.list(id(V(2), V(1)));
  in.l_last_first = b.list(id(V(k - 1), V(0)));
  in.l_first_last = b.list(id(V(0), V(k - 1)));
  in.l_second_first = b.list(id(V(1), V(0)));
  auto claim = claim_halin_choose(in);
  if (!claim) {
    b.fail(id(V(0), V(1)), Rule::halin_claim);
    return;
  }
  b.fix(id(V(k - 1), T(k - 1)), claim->a, Rule::halin_claim);
  b.fix(id(V(0), T(0)), claim->b, Rule::halin_claim);
  b.fix(id(V(0), V(1)), claim->c, Rule::halin_claim);
  b.fix(id(T(1), V(1)), claim->d, Rule::halin_claim);
  b.fix(id(V(2), V(1)), claim->e, Rule::halin_claim);

  const std::vector<Vertex> path = tree_path(tree, T(0), T(1));
  const std::size_t last = path.size() - 1;
  auto rest_internal = [&](Vertex x) {
    for (Vertex y : tree.neighbours(x)) b.greedy(id(x, y), Rule::halin_path);
  };
  b.greedy(id(path[0], V(0)), Rule::halin_path);
  b.greedy(id(path[0], path[1]), Rule::halin_path);
  rest_internal(path[0]);
  for (std::size_t j = 1; j < last; ++j) {
    b.greedy(id(path[j], path[j - 1]), Rule::halin_path);
    b.greedy(id(path[j], path[j + 1]), Rule::halin_path);
    rest_internal(path[j]);
  }
  b.greedy(id(path[last], path[last - 1]), Rule::halin_path);
  b.greedy(id(V(1), T(1)), Rule::halin_path);
  if (T(2) == T(1)) b.greedy(id(T(1), V(2)), Rule::halin_path);
  rest_internal(path[last]);
  for (Vertex x : path)
    for (Vertex y : tree.neighbours(x)) b.greedy(id(y, x), Rule::halin_path);
  for (std::size_t j = 0; j <= last; ++j)
    for (Vertex y : tree.neighbours(path[j]))
      if (std::find(path.begin(), path.end(), y) == path.end())
        detail::tree_top_down(b, tree, path[j], y, Rule::halin_subtree);

  b.greedy(id(V(1), V(2)), Rule::halin_cycle);
  for (int i = 2; i <= k - 2; ++i) {
    b.greedy(id(V(i), V(i + 1)), Rule::halin_cycle);
    b.greedy(id(V(i + 1), V(i)), Rule::halin_cycle);
  }
  b.greedy(id(V(k - 1), V(0)), Rule::halin_closure);
  b.greedy(id(V(0), V(k - 1)), Rule::halin_closure);
  b.greedy(id(V(1), V(0)), Rule::halin_closure);
}

}  // namespace

int halin_bound(const Generated& halin) {
  const auto* spec = std::get_if<HalinSpec>(&halin.spec);
  if (!spec) throw std::invalid_argument("not a Halin spec");
  const int delta = halin.graph.max_degree();
  const bool w4 = is_star(spec->tree) && spec->leaf_order.size() == 4;
  if (delta <= 4 && !w4) return 6;
  if (delta <= 5) return 7;
  return delta + 1;
}

ConstructiveReport colour_halin(const Graph& g, const HalinSpec& spec, const ListAssignment& lists) {
  Generated expected = gen_halin(spec.tree, spec.leaf_order);
  if (!(expected.graph == g)) throw std::invalid_argument("graph does not match the Halin spec");
  const int bound = halin_bound(expected);
  detail::require_list_size(lists, g, bound);
  const HalinSpec& s = std::get<HalinSpec>(expected.spec);
  detail::Builder b(g, lists, detail::trim_lists(lists, bound));
  const bool star = is_star(s.tree);
  if (star && s.leaf_order.size() == 3) detail::colour_k4(b, {0, 1, 2, 3});
  else if (g.max_degree() >= 5 || star) wheel_like(b, s);
  else non_wheel(b, s);
  return std::move(b).finish();
}

}  // namespace incol
