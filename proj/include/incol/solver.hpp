#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "incol/graph.hpp"

namespace incol {

enum class VariableOrder { static_order, most_constrained };

struct SolverConfig {
  VariableOrder order = VariableOrder::most_constrained;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> timeout;
};

enum class SolveStatus { coloured, unsatisfiable, unknown };

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  IncidenceColouring colouring;  // total when status == coloured
  std::uint64_t nodes = 0;
};

// List-colours the vertices of an arbitrary graph (used on incidence graphs).
SolveResult solve_vertex_list_colouring(const Graph& h, const ListAssignment& vertex_lists,
                                        const SolverConfig& cfg = {});

SolveResult solve_list_colouring(const Graph& g, const ListAssignment& lists, const SolverConfig& cfg = {});

struct ChiResult {
  SolveStatus status = SolveStatus::unknown;  // coloured means exact value known
  int value = 0;                              // exact when known
  int lower = 0;                              // best bracket otherwise
  int upper = 0;
};

ChiResult incidence_chromatic_number(const Graph& g, const SolverConfig& cfg = {});

enum class ChoosabilityStatus { choosable, counterexample, unknown };

struct ChoosabilityResult {
  ChoosabilityStatus status = ChoosabilityStatus::unknown;
  std::optional<ListAssignment> counterexample;
  std::uint64_t assignments_checked = 0;
};

// Every canonical k-list assignment over {1..universe}; throws std::invalid_argument
// when universe < k or universe > k * incidence_count.
ChoosabilityResult check_choosability_exhaustive(const Graph& g, int k, int universe,
                                                 std::uint64_t assignment_budget = 1'000'000,
                                                 const SolverConfig& cfg = {});

struct DegeneracyOrder {
  std::vector<Vertex> sequence;  // removal order: each vertex has <= d neighbours later
  int d = 0;
};

DegeneracyOrder degeneracy_order(const Graph& g);

struct GreedyResult {
  bool success = false;
  IncidenceColouring colouring;
  std::optional<IncidenceId> stuck;
  int degeneracy = 0;
};

GreedyResult greedy_degenerate(const Graph& g, const ListAssignment& lists);

}  // namespace incol
