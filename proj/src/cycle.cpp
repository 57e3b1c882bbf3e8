#include "incol/solver.hpp"
#include "procedures.hpp"

namespace incol {

int cycle_bound(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  return n % 3 == 0 ? 3 : 4;
}

// No constructive argument is known here; the exact solver is guaranteed to
// succeed at this list size.
ConstructiveReport colour_cycle(int n, const ListAssignment& lists) {
  const int bound = cycle_bound(n);
  const Graph g = gen_basic(Family::cycle, n).graph;
  detail::require_list_size(lists, g, bound);
  detail::Builder b(g, lists, detail::trim_lists(lists, bound));
  SolveResult r = solve_list_colouring(g, ListAssignment(detail::trim_lists(lists, bound)));
  if (r.status != SolveStatus::coloured) b.fail(0, Rule::cycle_exact);
  else
    for (IncidenceId i = 0; i < g.incidence_count(); ++i) b.fix(i, r.colouring[i], Rule::cycle_exact);
  return std::move(b).finish();
}

}  // namespace incol
