#include <algorithm>
#include <stdexcept>

#include "builder.hpp"

namespace incol {

using detail::contains;
using detail::intersect;
using detail::minus;

namespace {

const char* const kRuleNames[] = {
    "tree-precoloured",   "tree-base-edge",     "tree-top-down",      "grid-ladder-first-square",
    "grid-ladder-square", "grid-step-1",        "grid-step-2",        "grid-step-3a",
    "grid-step-3b",       "grid-step-3c",       "grid-step-4",        "grid-step-5",
    "halin-k4-claim",     "halin-k4-case-1",    "halin-k4-case-2a",   "halin-k4-case-2b",
    "halin-k4-edge-lists", "halin-wheel-tree",  "halin-wheel-cycle",  "halin-claim",
    "halin-path",         "halin-subtree",      "halin-cycle",        "halin-closure",
    "corona-precoloured", "corona-select",      "corona-cycle",       "corona-internal",
    "corona-external",    "corona-fallback",    "cactus-normal",      "ham-claim",
    "ham-matching",       "ham-cycle",          "ham-closure",        "cycle-exact",
};
constexpr int kRuleCount = static_cast<int>(sizeof(kRuleNames) / sizeof(kRuleNames[0]));
static_assert(kRuleCount == static_cast<int>(Rule::cycle_exact) + 1);

std::vector<Colour> normalised(std::vector<Colour> v, std::size_t min_size, const char* what) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() < min_size) throw std::invalid_argument(std::string(what) + ": list smaller than required");
  return v;
}

std::optional<Colour> smallest(const std::vector<Colour>& v) {
  if (v.empty()) return std::nullopt;
  return v.front();
}

int hits(const std::vector<Colour>& list, std::initializer_list<Colour> colours) {
  std::vector<Colour> distinct(colours);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return static_cast<int>(std::count_if(distinct.begin(), distinct.end(), [&](Colour c) { return contains(list, c); }));
}

}  // namespace

std::string to_string(Rule r) { return kRuleNames[static_cast<int>(r)]; }

Rule rule_from_string(const std::string& tag) {
  for (int i = 0; i < kRuleCount; ++i)
    if (tag == kRuleNames[i]) return static_cast<Rule>(i);
  throw std::invalid_argument("unknown rule tag '" + tag + "'");
}

std::optional<IncidenceColouring> replay_trace(const Graph& g, const std::vector<TraceStep>& trace) {
  IncidenceColouring c(g.incidence_count());
  for (const auto& step : trace) {
    for (IncidenceId j : incidence_neighbourhood(g, step.incidence))
      if (c[j] == step.colour) return std::nullopt;
    c.set(step.incidence, step.colour);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Interior grid rows: u = v_{i,j}, x = v_{i,j+1}, u'' below u, w above x.

bool grid_lemma_valid(const GridLemmaInput& in, Colour a, Colour b, Colour c, Colour d) {
  auto ux = normalised(in.l_ux, 0, "l_ux"), uu2 = normalised(in.l_uu2, 0, "l_uu2");
  auto xu = normalised(in.l_xu, 0, "l_xu"), xw = normalised(in.l_xw, 0, "l_xw");
  auto alphas = {in.alpha1, in.alpha1p, in.alpha2, in.alpha2p};
  auto outside = [](Colour x, std::initializer_list<Colour> s) { return std::find(s.begin(), s.end(), x) == s.end(); };
  return contains(ux, a) && outside(a, alphas) && contains(uu2, b) && outside(b, alphas) && contains(xu, c) &&
         outside(c, {in.alpha1, in.alpha2, in.beta4}) && contains(xw, d) &&
         outside(d, {in.beta1, in.beta2, in.beta3, in.beta4}) && a != b && b != c && a != c && a != d && c != d;
}

std::optional<GridLemmaChoice> grid_lemma_choose(const GridLemmaInput& in) {
  const auto ux = normalised(in.l_ux, 6, "grid lemma");
  const auto uu2 = normalised(in.l_uu2, 6, "grid lemma");
  const auto xu = normalised(in.l_xu, 6, "grid lemma");
  const auto xw = normalised(in.l_xw, 6, "grid lemma");
  const std::vector<Colour> alphas = {in.alpha1, in.alpha1p, in.alpha2, in.alpha2p};
  const std::vector<Colour> betas = {in.beta1, in.beta2, in.beta3, in.beta4};
  const auto ux_free = minus(ux, alphas);
  const auto uu2_free = minus(uu2, alphas);
  const auto xu_free = minus(xu, {in.alpha1, in.alpha2, in.beta4});
  const auto xw_free = minus(xw, betas);

  auto done = [&](Colour a, Colour b, Colour c, Colour d, const char* branch) -> std::optional<GridLemmaChoice> {
    if (!grid_lemma_valid(in, a, b, c, d)) return std::nullopt;
    return GridLemmaChoice{a, b, c, d, branch};
  };

  // Either the c-list or the d-list loses at most three colours to the context.
  if (hits(xu, {in.alpha1, in.alpha2, in.beta4}) <= 2) {
    auto a = smallest(ux_free);
    if (!a) return std::nullopt;
    auto b = smallest(minus(uu2_free, {*a}));
    if (!b) return std::nullopt;
    auto d = smallest(minus(xw_free, {*a}));
    if (!d) return std::nullopt;
    auto c = smallest(minus(xu_free, {*a, *b, *d}));
    if (!c) return std::nullopt;
    return done(*a, *b, *c, *d, "c-list-slack");
  }
  if (hits(xw, {in.beta1, in.beta2, in.beta3, in.beta4}) <= 3) {
    auto a = smallest(ux_free);
    if (!a) return std::nullopt;
    auto b = smallest(minus(uu2_free, {*a}));
    if (!b) return std::nullopt;
    auto c = smallest(minus(xu_free, {*a, *b}));
    if (!c) return std::nullopt;
    auto d = smallest(minus(xw_free, {*a, *c}));
    if (!d) return std::nullopt;
    return done(*a, *b, *c, *d, "d-list-slack");
  }
  // Both lists contain every context colour they exclude.
  if (contains(ux_free, in.beta4)) {
    Colour a = in.beta4;
    auto b = smallest(minus(uu2_free, {a}));
    if (!b) return std::nullopt;
    auto c = smallest(minus(xu_free, {*b}));
    if (!c) return std::nullopt;
    auto d = smallest(minus(xw_free, {*c}));
    if (!d) return std::nullopt;
    return done(a, *b, *c, *d, "case-1");
  }
  if (contains(uu2_free, in.beta4)) {
    Colour b = in.beta4;
    auto a = smallest(minus(ux_free, {b}));
    if (!a) return std::nullopt;
    auto d = smallest(minus(xw_free, {*a}));
    if (!d) return std::nullopt;
    auto c = smallest(minus(xu_free, {*a, *d}));
    if (!c) return std::nullopt;
    return done(*a, b, *c, *d, "case-2");
  }
  if (ux_free.size() < 2 || uu2_free.size() < 2) return std::nullopt;
  const Colour e1 = ux_free[0], e2 = ux_free[1], e3 = uu2_free[0], e4 = uu2_free[1];
  std::vector<Colour> mus;
  for (Colour x : {e1, e2})
    if (x == e3 || x == e4) mus.push_back(x);
  if (mus.empty()) {
    for (Colour d : xw_free)
      for (Colour c : xu_free) {
        if (c == d) continue;
        if ((c == e1 && d == e2) || (c == e2 && d == e1)) continue;
        Colour a = (e1 != c && e1 != d) ? e1 : e2;
        Colour b = (e3 != c) ? e3 : e4;
        return done(a, b, c, d, "case-3a");
      }
    return std::nullopt;
  }
  const Colour mu = *std::min_element(mus.begin(), mus.end());
  const Colour other_b = (e3 == mu) ? e4 : e3;
  const Colour other_a = (e1 == mu) ? e2 : e1;
  if (!contains(xu, mu)) {
    auto d = smallest(minus(xw_free, {mu}));
    if (!d) return std::nullopt;
    auto c = smallest(minus(xu_free, {other_b, *d}));
    if (!c) return std::nullopt;
    return done(mu, other_b, *c, *d, "case-3b-i");
  }
  if (!contains(xw, mu)) {
    auto c = smallest(minus(xu_free, {mu, other_b}));
    if (!c) return std::nullopt;
    auto d = smallest(minus(xw_free, {*c}));
    if (!d) return std::nullopt;
    return done(mu, other_b, *c, *d, "case-3b-i");
  }
  if (std::find(betas.begin(), betas.end(), mu) == betas.end()) {
    auto c = smallest(minus(xu_free, {other_a, mu}));
    if (!c) return std::nullopt;
    return done(other_a, mu, *c, mu, "case-3b-ii");
  }
  auto c = smallest(minus(xu_free, {mu, other_b}));
  if (!c) return std::nullopt;
  auto d = smallest(minus(xw_free, {*c}));
  if (!d) return std::nullopt;
  return done(mu, other_b, *c, *d, "case-3b-ii");
}

// ---------------------------------------------------------------------------
// Shared first half of the Halin and Hamiltonian claims: pick c, d, e from
// C, D, E so that at most one of them lies in `guard`.

namespace {

struct Triple {
  Colour c, d, e;
};

std::optional<Triple> choose_cde(const std::vector<Colour>& cl, const std::vector<Colour>& dl,
                                 const std::vector<Colour>& el, const std::vector<Colour>& guard) {
  auto pick_avoiding = [&](const std::vector<Colour>& l, Colour gamma) -> std::optional<Colour> {
    if (!contains(guard, gamma)) return smallest(l);
    return smallest(minus(l, guard));
  };
  auto cde = intersect(intersect(cl, dl), el);
  if (!cde.empty()) return Triple{cde[0], cde[0], cde[0]};
  if (auto cd = intersect(cl, dl); !cd.empty()) {
    auto e = pick_avoiding(el, cd[0]);
    if (!e) return std::nullopt;
    return Triple{cd[0], cd[0], *e};
  }
  if (auto ce = intersect(cl, el); !ce.empty()) {
    auto d = pick_avoiding(dl, ce[0]);
    if (!d) return std::nullopt;
    return Triple{ce[0], *d, ce[0]};
  }
  if (auto de = intersect(dl, el); !de.empty()) {
    auto c = pick_avoiding(cl, de[0]);
    if (!c) return std::nullopt;
    return Triple{*c, de[0], de[0]};
  }
  // Pairwise disjoint: at most one of the three lists is contained in the guard.
  auto outside_first = [&](const std::vector<Colour>& l) {
    auto out = minus(l, guard);
    return out.empty() ? l.front() : out.front();
  };
  return Triple{outside_first(cl), outside_first(dl), outside_first(el)};
}

}  // namespace

bool halin_claim_valid(const HalinClaimInput& in, const HalinClaimChoice& x) {
  auto a = normalised(in.a, 1, "A"), b = normalised(in.b, 1, "B"), c = normalised(in.c, 1, "C");
  auto d = normalised(in.d, 1, "D"), e = normalised(in.e, 1, "E");
  auto l1 = normalised(in.l_last_first, 1, "L"), l0 = normalised(in.l_first_last, 1, "L");
  auto l10 = normalised(in.l_second_first, 1, "L");
  return contains(a, x.a) && contains(b, x.b) && contains(c, x.c) && contains(d, x.d) && contains(e, x.e) &&
         x.b != x.c && hits(l1, {x.a, x.b, x.c}) <= 2 && hits(l0, {x.a, x.b, x.c}) <= 2 &&
         hits(l10, {x.c, x.d, x.e}) <= 1;
}

std::optional<HalinClaimChoice> claim_halin_choose(const HalinClaimInput& in) {
  const auto al = normalised(in.a, 6, "claim"), bl = normalised(in.b, 6, "claim");
  const auto cl = normalised(in.c, 6, "claim"), dl = normalised(in.d, 6, "claim");
  const auto el = normalised(in.e, 6, "claim");
  const auto l1 = normalised(in.l_last_first, 6, "claim");
  const auto l0 = normalised(in.l_first_last, 6, "claim");
  const auto l10 = normalised(in.l_second_first, 6, "claim");
  for (const auto* l : {&al, &bl, &cl, &dl, &el, &l1, &l0})
    if (l->size() != l10.size()) throw std::invalid_argument("claim: lists must have equal size");

  auto cde = choose_cde(cl, dl, el, l10);
  if (!cde) return std::nullopt;
  const Colour c = cde->c;
  std::optional<Colour> a, b;

  // Makes |L ∩ {a,b,c}| <= 2 for a list L holding c, when neither a nor b is set yet.
  auto settle_fresh = [&](const std::vector<Colour>& l) -> bool {
    if (auto ab = intersect(al, bl); ab.size() >= 2) {
      a = b = minus(ab, {c}).front();
      return true;
    }
    if (auto out = minus(al, l); !out.empty()) {
      a = out.front();
      return true;
    }
    auto out = minus(minus(bl, l), {c});
    if (out.empty()) return false;
    b = out.front();
    return true;
  };

  if (contains(l0, c) && !settle_fresh(l0)) return std::nullopt;
  if (contains(l1, c)) {
    if (!a && !b) {
      if (!settle_fresh(l1)) return std::nullopt;
    } else if (a && !b) {
      if (contains(bl, *a) && *a != c) b = a;
      else if (contains(l1, *a)) {
        auto out = minus(minus(bl, l1), {c});
        if (out.empty()) return std::nullopt;
        b = out.front();
      }
    } else if (b && !a) {
      if (contains(al, *b)) a = b;
      else if (contains(l1, *b)) {
        auto out = minus(al, l1);
        if (out.empty()) return std::nullopt;
        a = out.front();
      }
    }
  }
  if (!a) a = al.front();
  if (!b) {
    auto rest = minus(bl, {c});
    if (rest.empty()) return std::nullopt;
    b = rest.front();
  }
  HalinClaimChoice x{*a, *b, c, cde->d, cde->e};
  if (!halin_claim_valid(in, x)) return std::nullopt;
  return x;
}

bool k4_claim_valid(const std::vector<Colour>& a, const std::vector<Colour>& b, const std::vector<Colour>& c,
                    const std::vector<Colour>& target, const K4ClaimChoice& x) {
  auto al = normalised(a, 1, "A"), bl = normalised(b, 1, "B"), cl = normalised(c, 1, "C");
  auto t = normalised(target, 1, "target");
  return contains(al, x.a) && contains(bl, x.b) && contains(cl, x.c) && hits(t, {x.a, x.b, x.c}) <= 1;
}

std::optional<K4ClaimChoice> claim_k4_choose(const std::vector<Colour>& a, const std::vector<Colour>& b,
                                             const std::vector<Colour>& c, const std::vector<Colour>& target) {
  const auto al = normalised(a, 6, "claim"), bl = normalised(b, 6, "claim"), cl = normalised(c, 6, "claim");
  const auto t = normalised(target, 6, "claim");
  if (al.size() != 6 || bl.size() != 6 || cl.size() != 6 || t.size() != 6)
    throw std::invalid_argument("claim: lists must have exactly 6 colours");
  auto abc = choose_cde(al, bl, cl, t);
  if (!abc) return std::nullopt;
  K4ClaimChoice x{abc->c, abc->d, abc->e};
  if (!k4_claim_valid(a, b, c, target, x)) return std::nullopt;
  return x;
}

bool ham_claim_valid(const HamClaimInput& in, const HamClaimChoice& x) {
  auto a = normalised(in.a, 1, "A"), b = normalised(in.b, 1, "B"), c = normalised(in.c, 1, "C");
  auto d = normalised(in.d, 1, "D"), e = normalised(in.e, 1, "E");
  auto l01 = normalised(in.l01, 1, "L"), l10 = normalised(in.l10, 1, "L");
  return contains(a, x.a) && contains(b, x.b) && contains(c, x.c) && contains(d, x.d) && contains(e, x.e) &&
         x.a != x.c && x.a != x.e && x.b != x.d && hits(l10, {x.c, x.d, x.e}) <= 1 && hits(l01, {x.a, x.b}) <= 1;
}

std::optional<HamClaimChoice> claim_ham_choose(const HamClaimInput& in) {
  const auto al = normalised(in.a, 6, "claim"), bl = normalised(in.b, 6, "claim");
  const auto cl = normalised(in.c, 6, "claim"), dl = normalised(in.d, 6, "claim");
  const auto el = normalised(in.e, 6, "claim");
  const auto l01 = normalised(in.l01, 6, "claim"), l10 = normalised(in.l10, 6, "claim");
  for (const auto* l : {&al, &bl, &cl, &dl, &el, &l01, &l10})
    if (l->size() != 6) throw std::invalid_argument("claim: lists must have exactly 6 colours");
  auto cde = choose_cde(cl, dl, el, l10);
  if (!cde) return std::nullopt;
  const auto a_free = minus(al, {cde->e, cde->c});
  const auto b_free = minus(bl, {cde->d});
  if (a_free.empty() || b_free.empty()) return std::nullopt;
  Colour a, b;
  if (auto ab = intersect(a_free, b_free); !ab.empty()) {
    a = b = ab.front();
  } else if (auto out = minus(b_free, l01); !out.empty()) {
    b = out.front();
    a = a_free.front();
  } else {
    auto out_a = minus(a_free, l01);
    if (out_a.empty()) return std::nullopt;
    a = out_a.front();
    b = b_free.front();
  }
  HamClaimChoice x{a, b, cde->c, cde->d, cde->e};
  if (!ham_claim_valid(in, x)) return std::nullopt;
  return x;
}

}  // namespace incol
