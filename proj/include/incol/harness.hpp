#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incol/constructive.hpp"
#include "incol/json_io.hpp"
#include "incol/solver.hpp"

namespace incol {

// Each incidence gets a uniform k-subset of {1..universe}, drawn in id order.
ListAssignment random_list_assignment(const Graph& g, int k, int universe, std::uint64_t seed);

// Distinct a, b from the lists of the corona's first pendant edge.
CoronaPrecolouring random_precolouring(const CoronaSpec& spec, const Graph& g, const ListAssignment& lists,
                                       std::uint64_t seed);

struct NamedInstance {
  std::string name;
  Generated instance;
};

// The parameter grid the fuzz command runs for a family by default.
std::vector<NamedInstance> sample_instances(Family family, std::uint64_t seed);

// One instance from key=value parameters (n, m, p, size, degree, power).
Generated instance_from_params(Family family, const std::map<std::string, int>& params, std::uint64_t seed);

struct FuzzCampaign {
  std::vector<NamedInstance> instances;
  std::optional<int> k;         // unset: the theorem bound of each instance
  std::optional<int> universe;  // unset: 3k
  int trials = 200;
  std::uint64_t seed = 1;
  bool precoloured = false;  // coronae only
  int workers = 1;
};

struct FailureBundle {
  std::string instance_name;
  int instance_index = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  Generated instance;
  ListAssignment lists;
  std::optional<CoronaPrecolouring> pre;
  std::optional<IncidenceId> stuck;
  std::optional<Rule> stuck_rule;
  std::string error;  // exception text or validation verdict
};

struct InstanceReport {
  std::string name;
  int k = 0;
  int universe = 0;
  int trials = 0;
  int successes = 0;
  int failures = 0;
  int fallbacks = 0;  // successes that needed a step outside the proof's choices
  double seconds = 0;
  std::vector<FailureBundle> bundles;
};

struct CampaignReport {
  std::vector<InstanceReport> instances;
  double wall_seconds = 0;

  int total_trials() const;
  int total_failures() const;
};

CampaignReport run_campaign(const FuzzCampaign& campaign);

// Runs one trial exactly as the campaign does; nullopt when it passes.
std::optional<FailureBundle> run_trial(const NamedInstance& instance, int instance_index, int trial, int k,
                                       int universe, std::uint64_t master_seed, bool precoloured,
                                       bool* used_fallback = nullptr);

// Re-runs the constructive procedure on the bundle's stored inputs.
ConstructiveReport replay(const FailureBundle& bundle);

Json to_json(const FailureBundle& bundle);
FailureBundle bundle_from_json(const Json& j);
Json to_json(const CampaignReport& report);
std::string summary(const CampaignReport& report);

struct ChiCase {
  std::string name;
  Graph graph;
  int expected = 0;
};

struct ChiRow {
  std::string name;
  int expected = 0;
  ChiResult result;

  bool unknown() const { return result.status != SolveStatus::coloured; }
  bool match() const { return !unknown() && result.value == expected; }
};

// Cycles C3..C12, stars S2..S5 and K4 with their stored values.
std::vector<ChiCase> default_chi_suite();
std::vector<ChiRow> regression_chi(const std::vector<ChiCase>& suite, const SolverConfig& cfg = {});

// Exact incidence chromatic number of K4, frozen from the solver.
inline constexpr int kChiK4 = 4;

}  // namespace incol
