#include "procedures.hpp"

namespace incol {

namespace {

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({i * cols + j, i * cols + j + 1});
      if (i + 1 < rows) edges.push_back({i * cols + j, (i + 1) * cols + j});
    }
  return Graph(rows * cols, std::move(edges));
}

class GridColourer {
 public:
  GridColourer(detail::Builder& b, int m, int n) : b_(b), m_(m), n_(n) {}

  void run() {
    if (n_ == 2) ladder();
    else five_steps();
  }

 private:
  Vertex v(int i, int j) const { return (i - 1) * n_ + (j - 1); }
  IncidenceId inc(int i, int j, int k, int l) const { return b_.id(v(i, j), v(k, l)); }
  void greedy(int i, int j, int k, int l, Rule r) { b_.greedy(inc(i, j, k, l), r); }

  void all_internal(int i, int j, Rule r) {
    for (Vertex u : b_.graph().neighbours(v(i, j))) b_.greedy(b_.id(v(i, j), u), r);
  }

  void ladder() {
    for (auto [a, c] : {std::pair{v(1, 1), v(1, 2)}, {v(1, 1), v(2, 1)}, {v(1, 2), v(2, 2)}, {v(2, 1), v(2, 2)}}) {
      b_.greedy(b_.id(a, c), Rule::grid_ladder_first_square);
      b_.greedy(b_.id(c, a), Rule::grid_ladder_first_square);
    }
    for (int i = 2; i <= m_ - 1; ++i) {
      const Rule r = Rule::grid_ladder_square;
      greedy(i, 1, i + 1, 1, r);
      greedy(i + 1, 1, i, 1, r);
      greedy(i, 2, i + 1, 2, r);
      greedy(i + 1, 2, i, 2, r);
      greedy(i + 1, 1, i + 1, 2, r);
      greedy(i + 1, 2, i + 1, 1, r);
    }
  }

  void five_steps() {
    for (int j = 1; j <= n_; ++j) all_internal(1, j, Rule::grid_step_1);
    for (int i = 2; i <= m_; ++i) all_internal(i, 1, Rule::grid_step_1);

    for (int j = 2; j <= n_; ++j) {
      greedy(2, j, 2, j - 1, Rule::grid_step_2);
      greedy(2, j, 1, j, Rule::grid_step_2);
      greedy(2, j, 3, j, Rule::grid_step_2);
      if (j < n_) greedy(2, j, 2, j + 1, Rule::grid_step_2);
    }

    // Row 2 is complete after step 2, so interior rows start at 3.
    for (int i = 3; i <= m_ - 1; ++i) {
      greedy(i, 2, i - 1, 2, Rule::grid_step_3a);
      greedy(i, 2, i, 1, Rule::grid_step_3a);
      for (int j = 2; j <= n_ - 2; ++j) lemma_step(i, j);
      greedy(i, n_ - 1, i, n_, Rule::grid_step_3c);
      greedy(i, n_ - 1, i + 1, n_ - 1, Rule::grid_step_3c);
    }

    for (int i = 3; i <= m_ - 1; ++i) {
      greedy(i, n_, i, n_ - 1, Rule::grid_step_4);
      greedy(i, n_, i - 1, n_, Rule::grid_step_4);
      greedy(i, n_, i + 1, n_, Rule::grid_step_4);
    }

    for (int j = 2; j <= n_; ++j) {
      greedy(m_, j, m_ - 1, j, Rule::grid_step_5);
      greedy(m_, j, m_, j - 1, Rule::grid_step_5);
      if (j < n_) greedy(m_, j, m_, j + 1, Rule::grid_step_5);
    }
  }

  // u = v_{i,j}, x = v_{i,j+1}; the other eight vertices of the lemma's
  // configuration sit left of u, right of x, below u, and in the two rows above.
  void lemma_step(int i, int j) {
    if (!b_.ok()) return;
    const Vertex u = v(i, j), x = v(i, j + 1), u1 = v(i, j - 1), u2 = v(i + 1, j);
    const Vertex up = v(i - 1, j), w = v(i - 1, j + 1), w1 = v(i - 2, j + 1), w2 = v(i - 1, j + 2);
    auto col = [&](Vertex a, Vertex c) { return b_.at(b_.id(a, c)); };
    GridLemmaInput in;
    in.l_ux = b_.list(b_.id(u, x));
    in.l_uu2 = b_.list(b_.id(u, u2));
    in.l_xu = b_.list(b_.id(x, u));
    in.l_xw = b_.list(b_.id(x, w));
    in.alpha1 = col(u, u1);
    in.alpha1p = col(u1, u);
    in.alpha2 = col(u, up);
    in.alpha2p = col(up, u);
    in.beta1 = col(w, up);
    in.beta2 = col(w, w1);
    in.beta3 = col(w, w2);
    in.beta4 = col(w, x);
    for (Colour c : {in.alpha1, in.alpha1p, in.alpha2, in.alpha2p, in.beta1, in.beta2, in.beta3, in.beta4})
      if (c == kNoColour) {
        b_.fail(b_.id(u, x), Rule::grid_step_3b);
        return;
      }
    auto choice = grid_lemma_choose(in);
    if (!choice) {
      b_.fail(b_.id(u, x), Rule::grid_step_3b);
      return;
    }
    b_.fix(b_.id(u, x), choice->a, Rule::grid_step_3b);
    b_.fix(b_.id(u, u2), choice->b, Rule::grid_step_3b);
    b_.fix(b_.id(x, u), choice->c, Rule::grid_step_3b);
    b_.fix(b_.id(x, w), choice->d, Rule::grid_step_3b);
  }

  detail::Builder& b_;
  int m_, n_;
};

}  // namespace

ConstructiveReport colour_grid(int m, int n, const ListAssignment& lists) {
  if (m < 2 || n < 2) throw std::invalid_argument("grid needs both dimensions >= 2");
  const int bound = std::min(m, n) == 2 ? 5 : 6;
  const Graph g = grid_graph(m, n);
  detail::require_list_size(lists, g, bound);
  if (m >= n) {
    detail::Builder b(g, lists, detail::trim_lists(lists, bound));
    GridColourer(b, m, n).run();
    return std::move(b).finish();
  }

  // Transpose: caller vertex (i,j) is (j,i) in the internal n-by-m grid.
  const Graph h = grid_graph(n, m);
  auto to_internal = [&](Vertex x) { return (x % n) * m + x / n; };
  std::vector<IncidenceId> map(g.incidence_count());
  std::vector<std::vector<Colour>> moved(g.incidence_count());
  for (IncidenceId id = 0; id < g.incidence_count(); ++id) {
    const Incidence& inc = g.incidence(id);
    map[id] = h.incidence_id(to_internal(inc.vertex), to_internal(inc.other));
    moved[map[id]] = lists.lists()[id];
  }
  const ListAssignment internal_lists(std::move(moved));
  detail::Builder b(h, internal_lists, detail::trim_lists(internal_lists, bound));
  GridColourer(b, n, m).run();
  ConstructiveReport inner = std::move(b).finish();

  std::vector<IncidenceId> back(g.incidence_count());
  for (IncidenceId id = 0; id < g.incidence_count(); ++id) back[map[id]] = id;
  ConstructiveReport out;
  out.success = inner.success;
  out.used_fallback = inner.used_fallback;
  out.colouring = IncidenceColouring(g.incidence_count());
  for (IncidenceId id = 0; id < g.incidence_count(); ++id) out.colouring.set(id, inner.colouring[map[id]]);
  for (const auto& s : inner.trace) out.trace.push_back({back[s.incidence], s.colour, s.rule});
  if (inner.stuck) out.stuck = back[*inner.stuck];
  out.stuck_rule = inner.stuck_rule;
  return out;
}

}  // namespace incol
