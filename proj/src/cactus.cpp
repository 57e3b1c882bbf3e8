#include <algorithm>
#include <deque>

#include "procedures.hpp"

namespace incol {

namespace {

struct Census {
  int delta = 0;
  bool any_maximal = false;
  int maximal_triangles = 0;
  std::vector<bool> maximal;
};

Census census(const Graph& g, const CactusSpec& spec) {
  Census c;
  c.delta = g.max_degree();
  for (const auto& cyc : spec.cycles) {
    bool m = std::any_of(cyc.begin(), cyc.end(), [&](Vertex v) { return g.degree(v) == c.delta; });
    c.maximal.push_back(m);
    c.any_maximal |= m;
    c.maximal_triangles += m && cyc.size() == 3;
  }
  return c;
}

void require_proper_cactus(const Graph& g, const CactusSpec& spec) {
  if (!(gen_cactus(spec.n, spec.cycles, spec.bridges).graph == g))
    throw std::invalid_argument("graph does not match the cactus spec");
  if (spec.cycles.empty()) throw std::invalid_argument("cactus is a forest");
  if (spec.cycles.size() == 1 && spec.bridges.empty() &&
      static_cast<int>(spec.cycles[0].size()) == g.order())
    throw std::invalid_argument("cactus is a single cycle");
}

// Walks the tree M of cycles and normal vertices, colouring each cycle's
// closed neighbourhood as part of a generalized corona with its parent edge
// pre-coloured.
class CactusColourer {
 public:
  CactusColourer(detail::Builder& b, const CactusSpec& spec, const ListAssignment& original, Colour fresh)
      : b_(b), g_(b.graph()), spec_(spec), original_(original), fresh_(fresh), cycle_of_(g_.order(), -1) {
    for (std::size_t i = 0; i < spec.cycles.size(); ++i)
      for (Vertex v : spec.cycles[i]) cycle_of_[v] = static_cast<int>(i);
  }

  void run(const std::vector<bool>& maximal) {
    std::vector<char> cycle_done(spec_.cycles.size(), 0), vertex_done(g_.order(), 0);
    auto component_root = [&](int from_cycle) { return Node{from_cycle, -1, -1, -1}; };
    std::vector<int> roots;
    for (std::size_t i = 0; i < spec_.cycles.size(); ++i)
      if (maximal[i] && spec_.cycles[i].size() == 3) roots.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < spec_.cycles.size(); ++i) roots.push_back(static_cast<int>(i));

    auto bfs = [&](Node start) {
      std::deque<Node> queue{start};
      if (start.cycle >= 0) cycle_done[start.cycle] = 1;
      else vertex_done[start.vertex] = 1;
      while (!queue.empty() && b_.ok()) {
        Node node = queue.front();
        queue.pop_front();
        std::vector<Vertex> members;
        if (node.cycle >= 0) {
          colour_cycle(node);
          members = spec_.cycles[node.cycle];
        } else {
          colour_normal(node.vertex);
          members = {node.vertex};
        }
        for (Vertex x : members)
          for (Vertex y : g_.neighbours(x)) {
            const int cy = cycle_of_[y];
            if (cy >= 0 && cy == node.cycle) continue;
            if (cy >= 0 && !cycle_done[cy]) {
              cycle_done[cy] = 1;
              queue.push_back({cy, -1, y, x});
            } else if (cy < 0 && !vertex_done[y]) {
              vertex_done[y] = 1;
              queue.push_back({-1, y, -1, -1});
            }
          }
      }
    };
    for (int r : roots)
      if (!cycle_done[r]) bfs(component_root(r));
    for (Vertex v = 0; v < g_.order(); ++v)
      if (cycle_of_[v] < 0 && !vertex_done[v]) bfs({-1, v, -1, -1});
  }

 private:
  struct Node {
    int cycle;        // cycle index, or -1 for a normal vertex
    Vertex vertex;    // the normal vertex
    Vertex attach;    // cycle vertex joined to the parent, -1 at a root
    Vertex parent;    // the parent's end of that edge
  };

  void colour_normal(Vertex v) {
    for (Vertex u : g_.neighbours(v)) b_.greedy(b_.id(v, u), Rule::cactus_normal);
    for (Vertex u : g_.neighbours(v)) b_.greedy(b_.id(u, v), Rule::cactus_normal);
  }

  void colour_cycle(const Node& node) {
    if (!b_.ok()) return;
    const auto& cyc = spec_.cycles[node.cycle];
    const int n = static_cast<int>(cyc.size());
    const int r = node.attach < 0 ? 0 : static_cast<int>(std::find(cyc.begin(), cyc.end(), node.attach) - cyc.begin());
    std::vector<Vertex> on(n);
    for (int i = 0; i < n; ++i) on[i] = cyc[(r + i) % n];

    int p = 1;
    std::vector<std::vector<Vertex>> pendants(n);
    for (int i = 0; i < n; ++i) {
      if (i == 0 && node.parent >= 0) pendants[0].push_back(node.parent);
      for (Vertex y : g_.neighbours(on[i]))
        if (cycle_of_[y] != node.cycle && y != node.parent) pendants[i].push_back(y);
      p = std::max(p, static_cast<int>(pendants[i].size()));
    }
    const CoronaSpec spec{n, p};
    const Graph h = gen_corona(n, p).graph;
    const bool pre = node.parent >= 0;
    const int k = corona_bound(n, p, pre);

    // Real corona vertices map to G; virtual pendants get -1.
    std::vector<Vertex> to_g(h.order(), -1);
    for (int i = 0; i < n; ++i) {
      to_g[spec.cycle(i)] = on[i];
      for (std::size_t j = 0; j < pendants[i].size(); ++j) to_g[spec.pendant(i, static_cast<int>(j) + 1)] = pendants[i][j];
    }
    std::vector<IncidenceId> real(h.incidence_count(), -1);
    std::vector<std::vector<Colour>> lists(h.incidence_count()), working(h.incidence_count());
    std::vector<Colour> virtual_list(k);
    for (int t = 0; t < k; ++t) virtual_list[t] = fresh_ + t;
    const IncidenceId ia = h.incidence_id(spec.cycle(0), spec.pendant(0, 1));
    const IncidenceId ib = h.incidence_id(spec.pendant(0, 1), spec.cycle(0));
    for (IncidenceId i = 0; i < h.incidence_count(); ++i) {
      const Incidence& inc = h.incidence(i);
      if (to_g[inc.vertex] < 0 || to_g[inc.other] < 0) {
        lists[i] = working[i] = virtual_list;
        continue;
      }
      real[i] = b_.id(to_g[inc.vertex], to_g[inc.other]);
      if (pre && (i == ia || i == ib)) {
        lists[i] = working[i] = original_.lists()[real[i]];
      } else {
        lists[i] = b_.list(real[i]);
        working[i] = lists[i];
        if (static_cast<int>(working[i].size()) > k) working[i].resize(k);
      }
    }
    std::optional<CoronaPrecolouring> precolour;
    if (pre) precolour = CoronaPrecolouring{b_.at(real[ia]), b_.at(real[ib])};
    const ListAssignment la(lists);
    ConstructiveReport rep = detail::corona_procedure(spec, h, la, std::move(working), precolour);
    if (rep.used_fallback) b_.note_fallback();
    if (!rep.success) {
      IncidenceId at = rep.stuck && real[*rep.stuck] >= 0 ? real[*rep.stuck] : b_.id(on[0], on[1]);
      b_.fail(at, rep.stuck_rule.value_or(Rule::corona_cycle));
      return;
    }
    for (const TraceStep& s : rep.trace)
      if (real[s.incidence] >= 0 && !b_.coloured(real[s.incidence])) b_.fix(real[s.incidence], s.colour, s.rule);
  }

  detail::Builder& b_;
  const Graph& g_;
  const CactusSpec& spec_;
  const ListAssignment& original_;
  Colour fresh_;
  std::vector<int> cycle_of_;
};

}  // namespace

int cactus_bound(const Graph& g, const CactusSpec& spec) {
  const Census c = census(g, spec);
  if (c.delta <= 3) return c.delta + 2;
  if (c.delta == 4) return c.any_maximal ? 6 : 5;
  return std::max(c.delta + 1, c.maximal_triangles <= 1 ? 7 : 8);
}

ConstructiveReport colour_cactus(const Graph& g, const CactusSpec& spec, const ListAssignment& lists) {
  require_proper_cactus(g, spec);
  const int bound = cactus_bound(g, spec);
  detail::require_list_size(lists, g, bound);
  detail::Builder b(g, lists, detail::trim_lists(lists, bound));
  CactusColourer(b, spec, lists, lists.max_colour() + 1).run(census(g, spec).maximal);
  return std::move(b).finish();
}

}  // namespace incol
