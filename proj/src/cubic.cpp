#include <algorithm>

#include "procedures.hpp"

namespace incol {

ConstructiveReport colour_hamiltonian_cubic(const Graph& g, const HamCubicSpec& spec, const ListAssignment& lists) {
  if (!(graph_of(spec) == g)) throw std::invalid_argument("graph does not match the Hamiltonian cubic spec");
  detail::require_list_size(lists, g, 6);
  detail::Builder b(g, lists, detail::trim_lists(lists, 6));
  const int n = spec.n;
  if (n == 4) {
    detail::colour_k4(b, {0, 1, 2, 3});
    return std::move(b).finish();
  }

  // Relabel along the Hamilton cycle so that v0 is not matched to v2.
  const int r = spec.partner[0] != 2 ? 0 : 2;
  auto V = [&](int i) { return static_cast<Vertex>((((r + i) % n) + n) % n); };
  auto index = [&](Vertex x) { return ((x - r) % n + n) % n; };
  auto id = [&](int i, int j) { return b.id(V(i), V(j)); };
  const int s = index(spec.partner[V(0)]);
  const int t = index(spec.partner[V(1)]);

  HamClaimInput in;
  in.a = b.list(id(1, t));
  in.b = b.list(id(s, 0));
  in.c = b.list(id(2, 1));
  in.d = b.list(id(0, s));
  in.e = b.list(id(t, 1));
  in.l01 = b.list(id(0, 1));
  in.l10 = b.list(id(1, 0));
  auto claim = claim_ham_choose(in);
  if (!claim) {
    b.fail(id(0, 1), Rule::ham_claim);
    return std::move(b).finish();
  }
  b.fix(id(1, t), claim->a, Rule::ham_claim);
  b.fix(id(s, 0), claim->b, Rule::ham_claim);
  b.fix(id(2, 1), claim->c, Rule::ham_claim);
  b.fix(id(0, s), claim->d, Rule::ham_claim);
  b.fix(id(t, 1), claim->e, Rule::ham_claim);

  // Matching edges, each with at most two coloured neighbours when reached.
  std::vector<std::pair<int, int>> matching;
  for (int i = 0; i < n; ++i) {
    const int j = index(spec.partner[V(i)]);
    if (i < j) matching.push_back({i, j});
  }
  for (auto [i, j] : matching) {
    b.greedy(id(i, j), Rule::ham_matching);
    b.greedy(id(j, i), Rule::ham_matching);
  }

  b.greedy(id(1, 2), Rule::ham_cycle);
  for (int i = 2; i <= n - 1; ++i) {
    b.greedy(id(i, i + 1), Rule::ham_cycle);
    b.greedy(id(i + 1, i), Rule::ham_cycle);
  }
  b.greedy(id(0, 1), Rule::ham_closure);
  b.greedy(id(1, 0), Rule::ham_closure);
  return std::move(b).finish();
}

}  // namespace incol
