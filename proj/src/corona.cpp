#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "procedures.hpp"

namespace incol {

namespace detail {

namespace {

class CoronaColourer {
 public:
  CoronaColourer(Builder& b, const CoronaSpec& s, const std::optional<CoronaPrecolouring>& pre)
      : b_(b), s_(s), pre_(pre) {}

  void run() {
    // Small p fixes the first pendant edge even without a pre-colouring.
    if (pre_ || s_.p <= 2) {
      const Colour a = pre_ ? pre_->a : b_.list(pend(0, 1)).front();
      const Colour b = pre_ ? pre_->b : minus(b_.list(back(0, 1)), {a}).front();
      b_.fix(pend(0, 1), a, Rule::corona_precoloured);
      b_.fix(back(0, 1), b, Rule::corona_precoloured);
    }
    if (s_.p <= 2) small();
    else large();
    internals();
    for (int i = 0; i < s_.n; ++i)
      for (int j = 1; j <= s_.p; ++j) b_.greedy(back(i, j), Rule::corona_external);
  }

 private:
  IncidenceId cyc(int i, int j) const { return b_.id(s_.cycle(i), s_.cycle(j)); }
  IncidenceId pend(int i, int j) const { return b_.id(s_.cycle(i), s_.pendant(i, j)); }
  IncidenceId back(int i, int j) const { return b_.id(s_.pendant(i, j), s_.cycle(i)); }
  IncidenceId left(int i) const { return cyc(i - 1, i); }
  IncidenceId right(int i) const { return cyc(i + 1, i); }
  const std::vector<Colour>& last_pendant(int i) const { return b_.list(pend(i, s_.p)); }

  void small() {
    const int n = s_.n;
    const Colour a = b_.at(pend(0, 1)), b = b_.at(back(0, 1));
    if (s_.p == 2) {
      // (v0,v0v0^2) must see at most two of a, b and the colour chosen here.
      const auto& lc = b_.list(left(0));
      const auto& lp = last_pendant(0);
      Colour c;
      if (!contains(lp, a) || !contains(lp, b)) c = minus(lc, {a}).front();
      else if (contains(lc, b)) c = b;
      else c = pick(minus(lc, lp), left(0));
      b_.fix(left(0), c, Rule::corona_select);
    }
    b_.greedy(left(0), Rule::corona_cycle);
    b_.greedy(cyc(0, n - 1), Rule::corona_cycle);
    for (int i = 0; i + 1 < n; ++i) {
      b_.greedy(cyc(i, i + 1), Rule::corona_cycle);
      b_.greedy(cyc(i + 1, i), Rule::corona_cycle);
    }
  }

  Colour pick(const std::vector<Colour>& from, IncidenceId id) {
    if (!from.empty()) return from.front();
    b_.note_fallback();
    auto avail = b_.available(id);
    return avail.empty() ? b_.list(id).front() : avail.front();
  }

  // Colours one or both external cycle incidences of v_i with one colour so
  // that (v_i, v_i v_i^p) loses at most one option to them.
  void select(int i) {
    if (!b_.ok()) return;
    const auto l = b_.available(left(i));
    const auto r = b_.available(right(i));
    const auto& lp = last_pendant(i);
    if (auto both = intersect(l, r); !both.empty()) {
      b_.fix(left(i), both.front(), Rule::corona_select);
      b_.fix(right(i), both.front(), Rule::corona_select);
    } else if (auto lo = minus(l, lp); !lo.empty()) {
      b_.fix(left(i), lo.front(), Rule::corona_select);
    } else if (auto ro = minus(r, lp); !ro.empty()) {
      b_.fix(right(i), ro.front(), Rule::corona_select);
    } else {
      b_.note_fallback();
      b_.greedy(right(i), Rule::corona_fallback);
    }
  }

  void large() {
    const int n = s_.n;
    if (!pre_) {
      for (int i = 0; i < n; ++i) select(i);
    } else {
      const Colour a = pre_->a, b = pre_->b;
      const auto& lp0 = last_pendant(0);
      const auto& l1 = b_.list(right(0));
      const auto& ln = b_.list(left(0));
      Colour c, d;
      if (contains(lp0, a) + contains(lp0, b) <= 1) {
        auto common = minus(intersect(ln, l1), {a});
        if (!common.empty()) {
          c = d = common.front();
        } else {
          auto c_out = minus(minus(l1, {a}), lp0);
          c = c_out.empty() ? minus(l1, {a}).front() : c_out.front();
          auto d_any = minus(ln, {a});
          auto d_out = minus(d_any, lp0);
          d = contains(lp0, c) && !d_out.empty() ? d_out.front() : d_any.front();
        }
      } else {
        c = contains(l1, b) ? b : pick(minus(l1, lp0), right(0));
        d = contains(ln, b) ? b : pick(minus(ln, lp0), left(0));
      }
      b_.fix(right(0), c, Rule::corona_select);
      b_.fix(left(0), d, Rule::corona_select);
      select(1);
      // With d outside the last pendant list of v_{n-1}, one external colour suffices.
      if (contains(last_pendant(n - 1), d)) select(n - 1);
      else b_.greedy(right(n - 1), Rule::corona_select);
      for (int i = 2; i <= n - 2; ++i) select(i);
    }
    for (int i = 0; i < n; ++i) {
      b_.greedy(cyc(i, i + 1), Rule::corona_cycle);
      b_.greedy(cyc(i + 1, i), Rule::corona_cycle);
    }
  }

  void internals() {
    if (s_.p == 2) b_.greedy(pend(0, 2), Rule::corona_internal);
    if (pre_ && s_.p >= 3) v0_pendants();
    for (int i = 0; i < s_.n; ++i)
      for (int j = 1; j <= s_.p; ++j) b_.greedy(pend(i, j), Rule::corona_internal);
  }

  // With (v0^1,v0^1v0) pre-coloured, (v0,v0v0^{p-1}) can see p+3 distinct
  // colours in the proof's order. Those incidences only constrain each other
  // at this point (pendant externals keep a spare colour), so a system of
  // distinct representatives over their residual lists finishes the job.
  void v0_pendants() {
    std::vector<IncidenceId> ids;
    for (int j = 2; j <= s_.p; ++j) ids.push_back(pend(0, j));
    for (std::size_t t = 0; t < ids.size(); ++t) {
      if (!b_.ok()) return;
      if (b_.available(ids[t]).empty()) {
        for (std::size_t u = 0; u < t; ++u) b_.unfix(ids[u]);
        match(ids);
        return;
      }
      b_.greedy(ids[t], Rule::corona_internal);
    }
  }

  void match(const std::vector<IncidenceId>& ids) {
    b_.note_fallback();
    const std::size_t m = ids.size();
    std::vector<std::vector<Colour>> options(m);
    for (std::size_t t = 0; t < m; ++t) options[t] = b_.available(ids[t]);
    std::map<Colour, std::size_t> owner;
    std::set<Colour> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t t) {
      for (Colour c : options[t]) {
        if (!seen.insert(c).second) continue;
        auto it = owner.find(c);
        if (it == owner.end() || augment(it->second)) {
          owner[c] = t;
          return true;
        }
      }
      return false;
    };
    for (std::size_t t = 0; t < m; ++t) {
      seen.clear();
      if (!augment(t)) {
        b_.fail(ids[t], Rule::corona_fallback);
        return;
      }
    }
    for (auto [c, t] : owner) b_.fix(ids[t], c, Rule::corona_fallback);
  }

  Builder& b_;
  const CoronaSpec& s_;
  const std::optional<CoronaPrecolouring>& pre_;
};

}  // namespace

ConstructiveReport corona_procedure(const CoronaSpec& spec, const Graph& g, const ListAssignment& lists,
                                    std::vector<std::vector<Colour>> working,
                                    const std::optional<CoronaPrecolouring>& pre) {
  Builder b(g, lists, std::move(working));
  CoronaColourer(b, spec, pre).run();
  return std::move(b).finish();
}

}  // namespace detail

int corona_bound(int n, int p, bool precoloured) {
  if (n < 3 || p < 1) throw std::invalid_argument("corona needs n >= 3 and p >= 1");
  if (p <= 2) return p + 4;
  return std::max(p + 3, precoloured && n == 3 ? 8 : 7);
}

ConstructiveReport colour_corona(const CoronaSpec& spec, const ListAssignment& lists,
                                 const std::optional<CoronaPrecolouring>& pre) {
  const int bound = corona_bound(spec.n, spec.p, pre.has_value());
  const Graph g = gen_corona(spec.n, spec.p).graph;
  detail::require_list_size(lists, g, bound);
  auto working = detail::trim_lists(lists, bound);
  if (pre) {
    const IncidenceId ia = g.incidence_id(spec.cycle(0), spec.pendant(0, 1));
    const IncidenceId ib = g.incidence_id(spec.pendant(0, 1), spec.cycle(0));
    if (pre->a == pre->b || !lists.contains(ia, pre->a) || !lists.contains(ib, pre->b))
      throw std::invalid_argument("pre-colouring must use distinct colours from the two lists");
    working[ia] = lists.lists()[ia];
    working[ib] = lists.lists()[ib];
  }
  return detail::corona_procedure(spec, g, lists, std::move(working), pre);
}

}  // namespace incol
