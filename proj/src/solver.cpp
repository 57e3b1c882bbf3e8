#include "incol/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace incol {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetHit {};

class Search {
 public:
  Search(const Graph& h, const ListAssignment& lists, const SolverConfig& cfg) : h_(h), cfg_(cfg) {
    const int n = h.order();
    for (const auto& l : lists.lists()) palette_.insert(palette_.end(), l.begin(), l.end());
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    const int u = static_cast<int>(palette_.size());
    options_.resize(n);
    in_list_.assign(static_cast<std::size_t>(n) * u, 0);
    blocked_.assign(static_cast<std::size_t>(n) * u, 0);
    available_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Colour c : lists[v]) {
        int ci = static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
        options_[v].push_back(ci);
        in_list_[index(v, ci)] = 1;
      }
      available_[v] = static_cast<int>(options_[v].size());
    }
    assigned_.assign(n, -1);
    if (cfg_.timeout) deadline_ = Clock::now() + *cfg_.timeout;
  }

  SolveResult run() {
    SolveResult result;
    try {
      bool found = dfs(0);
      result.status = found ? SolveStatus::coloured : SolveStatus::unsatisfiable;
    } catch (const BudgetHit&) {
      result.status = SolveStatus::unknown;
    }
    result.nodes = nodes_;
    if (result.status == SolveStatus::coloured) {
      std::vector<Colour> colours(h_.order());
      for (Vertex v = 0; v < h_.order(); ++v) colours[v] = palette_[assigned_[v]];
      result.colouring = IncidenceColouring(std::move(colours));
    }
    return result;
  }

 private:
  std::size_t index(Vertex v, int ci) const { return static_cast<std::size_t>(v) * palette_.size() + ci; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < h_.order(); ++v) {
      if (assigned_[v] >= 0) continue;
      if (cfg_.order == VariableOrder::static_order) return v;
      if (best < 0 || available_[v] < available_[best]) best = v;
    }
    return best;
  }

  // Returns false if some uncoloured neighbour ran out of colours.
  bool place(Vertex v, int ci) {
    assigned_[v] = ci;
    bool alive = true;
    for (Vertex u : h_.neighbours(v)) {
      if (blocked_[index(u, ci)]++ == 0 && in_list_[index(u, ci)]) {
        --available_[u];
        if (assigned_[u] < 0 && available_[u] == 0) alive = false;
      }
    }
    return alive;
  }

  void unplace(Vertex v, int ci) {
    for (Vertex u : h_.neighbours(v))
      if (--blocked_[index(u, ci)] == 0 && in_list_[index(u, ci)]) ++available_[u];
    assigned_[v] = -1;
  }

  void tick() {
    ++nodes_;
    if (cfg_.node_budget && nodes_ > *cfg_.node_budget) throw BudgetHit{};
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) throw BudgetHit{};
  }

  bool dfs(int depth) {
    if (depth == h_.order()) return true;
    Vertex v = pick();
    for (int ci : options_[v]) {
      if (blocked_[index(v, ci)]) continue;
      tick();
      bool alive = place(v, ci);
      if (alive && dfs(depth + 1)) return true;
      unplace(v, ci);
    }
    return false;
  }

  const Graph& h_;
  const SolverConfig& cfg_;
  std::vector<Colour> palette_;
  std::vector<std::vector<int>> options_;
  std::vector<char> in_list_;
  std::vector<int> blocked_;
  std::vector<int> available_;
  std::vector<int> assigned_;
  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace

SolveResult solve_vertex_list_colouring(const Graph& h, const ListAssignment& vertex_lists, const SolverConfig& cfg) {
  if (vertex_lists.size() != h.order()) throw std::invalid_argument("lists do not cover the vertices");
  return Search(h, vertex_lists, cfg).run();
}

SolveResult solve_list_colouring(const Graph& g, const ListAssignment& lists, const SolverConfig& cfg) {
  if (lists.size() != g.incidence_count()) throw std::invalid_argument("lists do not cover the incidences");
  return solve_vertex_list_colouring(incidence_graph(g), lists, cfg);
}

ChiResult incidence_chromatic_number(const Graph& g, const SolverConfig& cfg) {
  ChiResult out;
  if (g.size() == 0) {
    out.status = SolveStatus::coloured;
    return out;
  }
  const int delta = g.max_degree();
  out.lower = delta + 1;
  out.upper = delta >= 2 ? 3 * delta - 2 : 2;
  const Graph h = incidence_graph(g);
  for (int p = out.lower; p <= out.upper; ++p) {
    SolveResult r = solve_vertex_list_colouring(h, ListAssignment::uniform(h.order(), p), cfg);
    if (r.status == SolveStatus::coloured) {
      out.status = SolveStatus::coloured;
      out.value = out.upper = p;
      return out;
    }
    if (r.status == SolveStatus::unknown) {
      out.lower = p;
      return out;
    }
    out.lower = p + 1;
  }
  throw std::logic_error("incidence chromatic number exceeds 3*Delta-2");
}

ChoosabilityResult check_choosability_exhaustive(const Graph& g, int k, int universe, std::uint64_t assignment_budget,
                                                 const SolverConfig& cfg) {
  const int m = g.incidence_count();
  if (k < 1 || universe < k) throw std::invalid_argument("universe must be at least k >= 1");
  if (m > 0 && static_cast<long>(universe) > static_cast<long>(k) * m)
    throw std::invalid_argument("universe larger than k * incidences");
  ChoosabilityResult result;
  if (m == 0) {
    result.status = ChoosabilityStatus::choosable;
    return result;
  }
  const Graph h = incidence_graph(g);
  std::vector<std::vector<Colour>> lists(m);
  bool unknown_seen = false;

  // A list reuses some previously introduced colours and introduces new ones in order.
  std::function<bool(int, int)> extend = [&](int pos, int used) -> bool {
    if (pos == m) {
      if (++result.assignments_checked > assignment_budget) throw BudgetHit{};
      ListAssignment la(lists);
      SolveResult r = solve_vertex_list_colouring(h, la, cfg);
      if (r.status == SolveStatus::unsatisfiable) {
        result.status = ChoosabilityStatus::counterexample;
        result.counterexample = la;
        return true;
      }
      if (r.status == SolveStatus::unknown) unknown_seen = true;
      return false;
    }
    for (int fresh = 0; fresh <= k && used + fresh <= universe; ++fresh) {
      const int reuse = k - fresh;
      if (reuse > used) continue;
      std::vector<int> pick(reuse);
      std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
        if (idx == reuse) {
          auto& l = lists[pos];
          l.assign(pick.begin(), pick.end());
          for (int t = 1; t <= fresh; ++t) l.push_back(used + t);
          return extend(pos + 1, used + fresh);
        }
        for (int c = from; c <= used - (reuse - idx) + 1; ++c) {
          pick[idx] = c;
          if (choose(idx + 1, c + 1)) return true;
        }
        return false;
      };
      if (choose(0, 1)) return true;
    }
    return false;
  };

  for (int c = 1; c <= k; ++c) lists[0].push_back(c);
  try {
    if (!extend(1, k)) result.status = unknown_seen ? ChoosabilityStatus::unknown : ChoosabilityStatus::choosable;
  } catch (const BudgetHit&) {
    result.status = ChoosabilityStatus::unknown;
  }
  if (result.counterexample) {
    SolveResult check = solve_list_colouring(g, *result.counterexample);
    if (check.status != SolveStatus::unsatisfiable) throw std::logic_error("counterexample failed re-check");
  }
  return result;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.order();
  DegeneracyOrder out;
  std::vector<int> deg(n);
  int maxd = 0;
  for (Vertex v = 0; v < n; ++v) maxd = std::max(maxd, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> bucket(maxd + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  int low = 0;
  while (static_cast<int>(out.sequence.size()) < n) {
    low = std::max(0, low - 1);
    while (bucket[low].empty()) ++low;
    Vertex v = bucket[low].back();
    bucket[low].pop_back();
    if (removed[v] || deg[v] != low) continue;
    removed[v] = 1;
    out.sequence.push_back(v);
    out.d = std::max(out.d, low);
    for (Vertex u : g.neighbours(v))
      if (!removed[u]) bucket[--deg[u]].push_back(u);
  }
  return out;
}

GreedyResult greedy_degenerate(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.incidence_count()) throw std::invalid_argument("lists do not cover the incidences");
  const Graph h = incidence_graph(g);
  DegeneracyOrder order = degeneracy_order(h);
  GreedyResult out;
  out.degeneracy = order.d;
  out.colouring = IncidenceColouring(h.order());
  for (auto it = order.sequence.rbegin(); it != order.sequence.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Colour> used;
    for (Vertex u : h.neighbours(v))
      if (out.colouring.is_coloured(u)) used.push_back(out.colouring[u]);
    std::sort(used.begin(), used.end());
    Colour pick = kNoColour;
    for (Colour c : lists[v])
      if (!std::binary_search(used.begin(), used.end(), c)) {
        pick = c;
        break;
      }
    if (pick == kNoColour) {
      out.stuck = v;
      return out;
    }
    out.colouring.set(v, pick);
  }
  out.success = true;
  return out;
}

}  // namespace incol
