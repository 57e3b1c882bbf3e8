#include <algorithm>
#include <deque>
#include <set>

#include "procedures.hpp"

namespace incol {

namespace detail {

void tree_top_down(Builder& b, const Graph& tree, Vertex parent, Vertex start, Rule rule) {
  std::deque<std::pair<Vertex, Vertex>> queue{{parent, start}};
  while (!queue.empty() && b.ok()) {
    auto [p, w] = queue.front();
    queue.pop_front();
    for (Vertex c : tree.neighbours(w))
      if (c != p) b.greedy(b.id(w, c), rule);
    for (Vertex c : tree.neighbours(w))
      if (c != p) b.greedy(b.id(c, w), rule);
    for (Vertex c : tree.neighbours(w))
      if (c != p) queue.push_back({w, c});
  }
}

}  // namespace detail

ConstructiveReport colour_tree(const Graph& t, const ListAssignment& lists, const std::vector<PrecolouredIncidence>& pre) {
  if (!is_tree(t)) throw std::invalid_argument("colour_tree: input is not a tree");
  // The induction needs at least one spare colour even with nothing pre-coloured.
  const int k = std::max<int>(1, static_cast<int>(pre.size()));
  detail::require_list_size(lists, t, t.max_degree() + k);

  std::set<IncidenceId> fixed;
  for (const auto& p : pre) {
    const Incidence& inc = t.incidence(p.incidence);
    if (!lists.contains(p.incidence, p.colour))
      throw std::invalid_argument("pre-coloured colour not in the incidence's list");
    if (!fixed.insert(p.incidence).second) throw std::invalid_argument("incidence pre-coloured twice");
    for (const auto& q : pre)
      if (q.incidence != p.incidence && q.colour == p.colour && incidence_adjacent(inc, t.incidence(q.incidence)))
        throw std::invalid_argument("adjacent pre-coloured incidences share a colour");
  }

  auto working = detail::trim_lists(lists, t.max_degree() + k);
  for (const auto& p : pre) working[p.incidence] = lists.lists()[p.incidence];
  detail::Builder b(t, lists, std::move(working));
  if (t.incidence_count() == 0) return std::move(b).finish();

  // Every pre-colour after the first leaves the other lists; then only the
  // first pre-coloured incidence constrains the base case.
  for (std::size_t j = 1; j < pre.size(); ++j)
    for (IncidenceId i = 0; i < t.incidence_count(); ++i)
      if (!fixed.count(i)) b.drop(i, pre[j].colour);
  for (const auto& p : pre) b.fix(p.incidence, p.colour, Rule::tree_precoloured);

  const IncidenceId base = pre.empty() ? 0 : pre.front().incidence;
  const Incidence x1y1 = t.incidence(base);
  b.greedy(base, Rule::tree_base_edge);
  b.greedy(t.incidence_id(x1y1.other, x1y1.vertex), Rule::tree_base_edge);
  detail::tree_top_down(b, t, x1y1.other, x1y1.vertex, Rule::tree_top_down);
  detail::tree_top_down(b, t, x1y1.vertex, x1y1.other, Rule::tree_top_down);
  return std::move(b).finish();
}

}  // namespace incol
