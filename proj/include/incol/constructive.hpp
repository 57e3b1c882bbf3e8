#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incol/generators.hpp"
#include "incol/graph.hpp"

namespace incol {

// Stable rule tags; the string forms are part of the trace file format.
enum class Rule {
  tree_precoloured,
  tree_base_edge,
  tree_top_down,
  grid_ladder_first_square,
  grid_ladder_square,
  grid_step_1,
  grid_step_2,
  grid_step_3a,
  grid_step_3b,
  grid_step_3c,
  grid_step_4,
  grid_step_5,
  halin_k4_claim,
  halin_k4_case_1,
  halin_k4_case_2a,
  halin_k4_case_2b,
  halin_k4_edge_lists,
  halin_wheel_tree,
  halin_wheel_cycle,
  halin_claim,
  halin_path,
  halin_subtree,
  halin_cycle,
  halin_closure,
  corona_precoloured,
  corona_select,
  corona_cycle,
  corona_internal,
  corona_external,
  corona_fallback,
  cactus_normal,
  ham_claim,
  ham_matching,
  ham_cycle,
  ham_closure,
  cycle_exact,
};

std::string to_string(Rule r);
Rule rule_from_string(const std::string& tag);

struct TraceStep {
  IncidenceId incidence = 0;
  Colour colour = kNoColour;
  Rule rule = Rule::tree_top_down;

  bool operator==(const TraceStep&) const = default;
};

struct ConstructiveReport {
  bool success = false;
  IncidenceColouring colouring;
  std::vector<TraceStep> trace;
  std::optional<IncidenceId> stuck;  // set on failure
  std::optional<Rule> stuck_rule;
  bool used_fallback = false;  // a selection step had no choice matching the proof

  bool operator==(const ConstructiveReport&) const = default;
};

struct PrecolouredIncidence {
  IncidenceId incidence = 0;
  Colour colour = kNoColour;
};

// Re-applies the trace in order, checking each colour against earlier ones.
// Returns the rebuilt colouring, or nullopt if a step conflicts.
std::optional<IncidenceColouring> replay_trace(const Graph& g, const std::vector<TraceStep>& trace);

ConstructiveReport colour_tree(const Graph& t, const ListAssignment& lists,
                               const std::vector<PrecolouredIncidence>& pre = {});

// Context of the four incidences picked together in an interior grid row.
struct GridLemmaInput {
  std::vector<Colour> l_ux, l_uu2, l_xu, l_xw;
  Colour alpha1, alpha1p, alpha2, alpha2p;
  Colour beta1, beta2, beta3, beta4;
};

struct GridLemmaChoice {
  Colour a, b, c, d;
  std::string branch;
};

bool grid_lemma_valid(const GridLemmaInput& in, Colour a, Colour b, Colour c, Colour d);
std::optional<GridLemmaChoice> grid_lemma_choose(const GridLemmaInput& in);

ConstructiveReport colour_grid(int m, int n, const ListAssignment& lists);

// Lists around the leaf edge v0v1 of a Halin graph: A = (v_{k-1},v_{k-1}t_{k-1}),
// B = (v0,v0t0), C = (v0,v0v1), D = (t1,t1v1), E = (v2,v2v1).
struct HalinClaimInput {
  std::vector<Colour> a, b, c, d, e;
  std::vector<Colour> l_last_first;  // (v_{k-1},v_{k-1}v0)
  std::vector<Colour> l_first_last;  // (v0,v0v_{k-1})
  std::vector<Colour> l_second_first;  // (v1,v1v0)
};

struct HalinClaimChoice {
  Colour a, b, c, d, e;
};

bool halin_claim_valid(const HalinClaimInput& in, const HalinClaimChoice& x);
std::optional<HalinClaimChoice> claim_halin_choose(const HalinClaimInput& in);

struct K4ClaimChoice {
  Colour a, b, c;
};

bool k4_claim_valid(const std::vector<Colour>& a, const std::vector<Colour>& b, const std::vector<Colour>& c,
                    const std::vector<Colour>& target, const K4ClaimChoice& x);
std::optional<K4ClaimChoice> claim_k4_choose(const std::vector<Colour>& a, const std::vector<Colour>& b,
                                             const std::vector<Colour>& c, const std::vector<Colour>& target);

// Lists around v0v1 of a Hamiltonian cubic graph (v_s, v_t matched to v0, v1):
// A = (v1,v1vt), B = (vs,vsv0), C = (v2,v2v1), D = (v0,v0vs), E = (vt,vtv1).
struct HamClaimInput {
  std::vector<Colour> a, b, c, d, e;
  std::vector<Colour> l01;  // (v0,v0v1)
  std::vector<Colour> l10;  // (v1,v1v0)
};

struct HamClaimChoice {
  Colour a, b, c, d, e;
};

bool ham_claim_valid(const HamClaimInput& in, const HamClaimChoice& x);
std::optional<HamClaimChoice> claim_ham_choose(const HamClaimInput& in);

int halin_bound(const Generated& halin);
ConstructiveReport colour_halin(const Graph& g, const HalinSpec& spec, const ListAssignment& lists);

struct CoronaPrecolouring {
  Colour a = kNoColour;  // on (v0, v0 v0^1)
  Colour b = kNoColour;  // on (v0^1, v0^1 v0)
};

int corona_bound(int n, int p, bool precoloured);
ConstructiveReport colour_corona(const CoronaSpec& spec, const ListAssignment& lists,
                                 const std::optional<CoronaPrecolouring>& pre = std::nullopt);

int cactus_bound(const Graph& g, const CactusSpec& spec);
ConstructiveReport colour_cactus(const Graph& g, const CactusSpec& spec, const ListAssignment& lists);

ConstructiveReport colour_hamiltonian_cubic(const Graph& g, const HamCubicSpec& spec, const ListAssignment& lists);

int cycle_bound(int n);
ConstructiveReport colour_cycle(int n, const ListAssignment& lists);

// List size the relevant theorem guarantees for a generated instance (tree,
// path, star, cycle, wheel, grid, Halin, corona, cactus, Hamiltonian cubic).
int theorem_bound(const Generated& instance, bool precoloured = false);

// Runs the constructive procedure matching the instance's family.
ConstructiveReport construct(const Generated& instance, const ListAssignment& lists,
                             const std::optional<CoronaPrecolouring>& pre = std::nullopt);

}  // namespace incol
