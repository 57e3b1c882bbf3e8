#include <cmath>

#include "doctest.h"
#include "incol/dot.hpp"
#include "incol/harness.hpp"
#include "incol/json_io.hpp"
#include "oracles.hpp"

using namespace incol;

namespace {

// Exact per-subset probability of a uniform 2-subset of {1..4}, and the
// accepted deviation in standard deviations.
constexpr double kSubsetProbability = 1.0 / 6.0;
constexpr double kSigmaTolerance = 5.0;

FuzzCampaign grid_below_bound(int workers) {
  FuzzCampaign c;
  c.instances = {{"grid-4x2", gen_grid(4, 2)}, {"grid-5x2", gen_grid(5, 2)}};
  c.k = 4;
  c.trials = 60;
  c.seed = 13;
  c.workers = workers;
  return c;
}

Json without_times(Json j) {
  j.erase("wall_seconds");
  for (auto& inst : j["instances"]) inst.erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("list sampler basics") {
  const Graph c3 = gen_basic(Family::cycle, 3).graph;
  const ListAssignment forced = random_list_assignment(c3, 3, 3, 5);
  for (const auto& l : forced.lists()) CHECK(l == std::vector<Colour>{1, 2, 3});
  CHECK(random_list_assignment(c3, 3, 9, 0) == random_list_assignment(c3, 3, 9, 0));
  CHECK_FALSE(random_list_assignment(c3, 3, 9, 0) == random_list_assignment(c3, 3, 9, 1));
  CHECK_THROWS_AS(random_list_assignment(c3, 4, 3, 0), std::invalid_argument);
  const ListAssignment drawn = random_list_assignment(c3, 4, 12, 2);
  for (const auto& l : drawn.lists()) {
    CHECK(l.size() == 4);
    CHECK(std::set<Colour>(l.begin(), l.end()).size() == 4);
    for (Colour c : l) CHECK((c >= 1 && c <= 12));
  }
}

TEST_CASE("list sampler is uniform over 2-subsets of {1..4}") {
  const Graph k2(2, {{0, 1}});
  constexpr int kDraws = 10000;
  std::map<std::vector<Colour>, int> freq;
  for (int s = 0; s < kDraws; ++s) {
    auto l = random_list_assignment(k2, 2, 4, static_cast<std::uint64_t>(s)).lists()[0];
    std::sort(l.begin(), l.end());
    ++freq[l];
  }
  CHECK(freq.size() == 6);
  const double mean = kDraws * kSubsetProbability;
  const double sigma = std::sqrt(kDraws * kSubsetProbability * (1 - kSubsetProbability));
  for (const auto& [subset, count] : freq) CHECK(std::abs(count - mean) <= kSigmaTolerance * sigma);
}

TEST_CASE("campaigns at the bound report no failures") {
  FuzzCampaign c;
  c.instances = {{"grid-4x2", gen_grid(4, 2)}, {"grid-8x2", gen_grid(8, 2)}};
  c.trials = 50;
  const CampaignReport r = run_campaign(c);
  CHECK(r.total_trials() == 100);
  CHECK(r.total_failures() == 0);
  CHECK(r.instances[0].k == 5);
  CHECK(r.instances[0].universe == 15);
}

TEST_CASE("campaigns below the bound record failures with replayable bundles") {
  const CampaignReport r = run_campaign(grid_below_bound(1));
  REQUIRE(r.total_failures() > 0);
  for (const auto& inst : r.instances)
    for (const FailureBundle& b : inst.bundles) {
      const FailureBundle round = bundle_from_json(to_json(b));
      CHECK(round.lists == b.lists);
      CHECK(round.instance.graph == b.instance.graph);
      CHECK(round.error == b.error);
      if (b.error.rfind("exception: ", 0) == 0) {
        // Precondition failures replay as the same exception.
        CHECK_THROWS_WITH(replay(b), b.error.substr(11).c_str());
        CHECK_THROWS_WITH(replay(round), b.error.substr(11).c_str());
        continue;
      }
      const ConstructiveReport again = replay(b);
      CHECK_FALSE(again.success);
      CHECK(again.stuck == b.stuck);
      CHECK(again.stuck_rule == b.stuck_rule);
      CHECK(replay(round) == again);
    }
}

TEST_CASE("campaign results do not depend on the worker count") {
  const Json one = without_times(to_json(run_campaign(grid_below_bound(1))));
  const Json four = without_times(to_json(run_campaign(grid_below_bound(4))));
  const Json seven = without_times(to_json(run_campaign(grid_below_bound(7))));
  CHECK(one == four);
  CHECK(one == seven);
}

TEST_CASE("trial seeds are derived from the master seed") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}

TEST_CASE("pre-coloured campaigns respect the pre-colouring") {
  FuzzCampaign c;
  c.instances = {{"corona-3-3", gen_corona(3, 3)}, {"corona-5-4", gen_corona(5, 4)}};
  c.trials = 100;
  c.precoloured = true;
  const CampaignReport r = run_campaign(c);
  CHECK(r.total_failures() == 0);
  CHECK(r.instances[0].k == 8);
  const Generated g = gen_corona(4, 3);
  const ListAssignment l = random_list_assignment(g.graph, 7, 21, 4);
  const CoronaPrecolouring pre = random_precolouring(std::get<CoronaSpec>(g.spec), g.graph, l, 4);
  CHECK(pre.a != pre.b);
}

TEST_CASE("regression table") {
  const auto rows = regression_chi(default_chi_suite());
  REQUIRE(rows.size() == 15);
  for (const auto& row : rows) CHECK(row.match());
  SolverConfig tight;
  tight.node_budget = 1;
  const auto starved = regression_chi({{"C10", gen_basic(Family::cycle, 10).graph, 4}}, tight);
  CHECK(starved[0].unknown());
  const auto wrong = regression_chi({{"C4", gen_basic(Family::cycle, 4).graph, 3}});
  CHECK_FALSE(wrong[0].match());
  CHECK_FALSE(wrong[0].unknown());
}

TEST_CASE("summary text names each instance") {
  FuzzCampaign c;
  c.instances = {{"grid-3x2", gen_grid(3, 2)}};
  c.trials = 5;
  const std::string s = summary(run_campaign(c));
  CHECK(s.find("grid-3x2") != std::string::npos);
}

TEST_CASE("JSON round trips") {
  for (Family f : {Family::grid, Family::halin, Family::corona, Family::cactus, Family::ham_cubic, Family::tree}) {
    const Generated g = sample_instances(f, 2).back().instance;
    const Generated back = instance_from_json(to_json(g));
    CHECK(back.graph == g.graph);
    CHECK(family_of(back.spec) == f);
    const ListAssignment l = random_list_assignment(g.graph, 3, 9, 1);
    CHECK(lists_from_json(g.graph, to_json(g.graph, l)) == l);
  }
  const Graph c5 = gen_basic(Family::cycle, 5).graph;
  CHECK(graph_from_json(to_json(c5)) == c5);
  CHECK(any_graph_from_json(to_json(gen_basic(Family::cycle, 5))) == c5);
  const ConstructiveReport r = colour_cycle(5, ListAssignment::uniform(10, 4));
  CHECK(colouring_from_json(c5, to_json(c5, r.colouring)) == r.colouring);
  CHECK(trace_from_json(c5, to_json(c5, r.trace)) == r.trace);
  const CoronaPrecolouring pre{3, 5};
  const CoronaPrecolouring pre2 = precolouring_from_json(to_json(pre));
  CHECK(pre2.a == 3);
  CHECK(pre2.b == 5);
}

TEST_CASE("malformed JSON inputs are rejected") {
  const Graph c3 = gen_basic(Family::cycle, 3).graph;
  CHECK_THROWS(graph_from_json(Json{{"n", 3}, {"edges", {{0, 7}}}}));
  CHECK_THROWS(lists_from_json(c3, Json{{"incidences", {{0, 2}}}, {"lists", {{1, 2}}}}));
  CHECK_THROWS(instance_from_json(Json{{"graph", to_json(c3)}, {"spec", {{"family", "grid"}, {"m", 3}, {"n", 3}}}}));
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("DOT export") {
  const Graph c3 = gen_basic(Family::cycle, 3).graph;
  const ConstructiveReport r = colour_cycle(3, ListAssignment::uniform(6, 3));
  const std::string plain = export_dot(c3, nullptr);
  CHECK(plain.find("graph") != std::string::npos);
  const std::string annotated = export_dot(c3, &r.colouring);
  CHECK(annotated.find("--") != std::string::npos);
  const std::string ig = export_dot(c3, &r.colouring, DotStyle::incidence_graph);
  CHECK(std::count(ig.begin(), ig.end(), '\n') > 6);
}
