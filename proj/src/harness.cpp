#include "incol/harness.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

namespace incol {

namespace {

using Clock = std::chrono::steady_clock;

Generated halin_from_tree(int n, const std::vector<Edge>& edges, Vertex root) {
  Graph tree(n, edges);
  return gen_halin(tree, planar_leaf_order(tree, root));
}

Generated ham_from_matching(int n, const std::vector<Edge>& matching) { return gen_ham_cubic(n, matching); }

IncidenceId first_pendant_internal(const CoronaSpec& s, const Graph& g) {
  return g.incidence_id(s.cycle(0), s.pendant(0, 1));
}

}  // namespace

ListAssignment random_list_assignment(const Graph& g, int k, int universe, std::uint64_t seed) {
  if (k < 1 || universe < k) throw std::invalid_argument("need universe >= k >= 1");
  Rng rng(seed);
  std::vector<Colour> pool(universe);
  std::vector<std::vector<Colour>> lists(g.incidence_count());
  for (auto& l : lists) {
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(universe - i)]);
    l.assign(pool.begin(), pool.begin() + k);
  }
  return ListAssignment(std::move(lists));
}

CoronaPrecolouring random_precolouring(const CoronaSpec& spec, const Graph& g, const ListAssignment& lists,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const IncidenceId ia = first_pendant_internal(spec, g);
  const IncidenceId ib = g.incidence_id(spec.pendant(0, 1), spec.cycle(0));
  const auto la = lists[ia];
  const Colour a = la[rng.below(la.size())];
  std::vector<Colour> rest;
  for (Colour c : lists[ib])
    if (c != a) rest.push_back(c);
  return {a, rest[rng.below(rest.size())]};
}

std::vector<NamedInstance> sample_instances(Family family, std::uint64_t seed) {
  std::vector<NamedInstance> out;
  auto add = [&](std::string name, Generated g) { out.push_back({std::move(name), std::move(g)}); };
  const std::string tag = to_string(family);
  switch (family) {
    case Family::path:
    case Family::cycle:
      for (int n = family == Family::path ? 2 : 3; n <= 12; ++n) add(tag + "-" + std::to_string(n), gen_basic(family, n));
      break;
    case Family::star:
      for (int n = 1; n <= 8; ++n) add(tag + "-" + std::to_string(n), gen_basic(family, n));
      break;
    case Family::wheel:
      for (int n = 3; n <= 8; ++n) add(tag + "-" + std::to_string(n), gen_basic(family, n));
      break;
    case Family::complete:
      for (int n = 2; n <= 4; ++n) add(tag + "-" + std::to_string(n), gen_basic(family, n));
      break;
    case Family::tree:
      for (int i = 0; i < 20; ++i) {
        Rng rng(derive_seed(seed, 100, i));
        add("tree-" + std::to_string(i), gen_tree(random_tree(2 + i % 12, rng)));
      }
      break;
    case Family::grid:
      for (int m = 2; m <= 10; ++m) add("grid-" + std::to_string(m) + "x2", gen_grid(m, 2));
      for (int n = 3; n <= 7; ++n)
        for (int m = n; m <= 7; ++m) add("grid-" + std::to_string(m) + "x" + std::to_string(n), gen_grid(m, n));
      break;
    case Family::halin:
      add("halin-prism", halin_from_tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}, 0));
      add("halin-caterpillar-3",
          halin_from_tree(8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}}, 0));
      add("halin-double-4", halin_from_tree(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}}, 0));
      add("halin-mixed-3-4",
          halin_from_tree(10, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {2, 9}}, 0));
      add("halin-delta-5", halin_from_tree(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 7}, {1, 8}}, 0));
      add("halin-delta-6",
          halin_from_tree(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 7}, {1, 8}, {1, 9}}, 0));
      for (int n = 4; n <= 8; ++n) add("wheel-" + std::to_string(n), halin_from_tree(n + 1, [n] {
                                         std::vector<Edge> e;
                                         for (int i = 1; i <= n; ++i) e.push_back({0, i});
                                         return e;
                                       }(), 0));
      for (int i = 0; i < 6; ++i)
        add("halin-random-" + std::to_string(i), gen_halin_random(2 + i, 4, derive_seed(seed, 200, i)));
      break;
    case Family::corona:
      for (int n = 3; n <= 5; ++n)
        for (int p = 1; p <= 5; ++p)
          add("corona-" + std::to_string(n) + "-" + std::to_string(p), gen_corona(n, p));
      break;
    case Family::cactus:
      add("cactus-delta3", gen_cactus(6, {{0, 1, 2}, {3, 4, 5}}, {{2, 3}}));
      add("cactus-delta4-plain", gen_cactus(10, {{0, 1, 2}, {7, 8, 9}}, {{0, 3}, {3, 4}, {3, 5}, {3, 7}, {5, 6}}));
      add("cactus-delta4-maximal", gen_cactus(8, {{0, 1, 2}, {5, 6, 7}}, {{0, 3}, {0, 4}, {1, 5}}));
      add("cactus-delta5-one-triangle",
          gen_cactus(10, {{0, 1, 2, 3}, {7, 8, 9}}, {{0, 4}, {0, 5}, {0, 6}, {1, 7}}));
      add("cactus-delta7-two-triangles",
          gen_cactus(14, {{0, 1, 2}, {7, 8, 9}},
                     {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {7, 10}, {7, 11}, {7, 12}, {7, 13}}));
      add("cactus-delta5-two-triangles",
          gen_cactus(10, {{0, 1, 2}, {5, 6, 7}}, {{0, 3}, {0, 4}, {0, 5}, {5, 8}, {5, 9}}));
      for (int i = 0; i < 20; ++i)
        add("cactus-random-" + std::to_string(i), gen_cactus_random(6 + i, derive_seed(seed, 300, i)));
      break;
    case Family::ham_cubic:
      add("k4", ham_from_matching(4, {{0, 2}, {1, 3}}));
      add("k33", ham_from_matching(6, {{0, 3}, {1, 4}, {2, 5}}));
      add("q3", ham_from_matching(8, {{0, 3}, {1, 6}, {2, 5}, {4, 7}}));
      for (int i = 0; i < 20; ++i) {
        const int n = 6 + 2 * (i % 8);
        add("ham-random-" + std::to_string(i), gen_ham_cubic_random(n, derive_seed(seed, 400, i)));
      }
      break;
    case Family::cycle_power:
      throw std::invalid_argument("no constructive procedure for cycle powers");
  }
  return out;
}

Generated instance_from_params(Family family, const std::map<std::string, int>& params, std::uint64_t seed) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter " + key);
    return it->second;
  };
  auto get_or = [&](const std::string& key, int fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  switch (family) {
    case Family::grid: {
      const int m = get("m"), n = get("n");
      return gen_grid(std::max(m, n), std::min(m, n));
    }
    case Family::tree: {
      Rng rng(seed);
      return gen_tree(random_tree(get("n"), rng));
    }
    case Family::halin:
      return gen_halin_random(get("size"), get_or("degree", 4), seed);
    case Family::corona:
      return gen_corona(get("n"), get("p"));
    case Family::cactus:
      return gen_cactus_random(get("size"), seed, get_or("cycle", 6));
    case Family::ham_cubic:
      return gen_ham_cubic_random(get("n"), seed);
    case Family::cycle_power:
      return gen_cycle_power(get("n"), get("power"));
    default:
      return gen_basic(family, get("n"));
  }
}

std::optional<FailureBundle> run_trial(const NamedInstance& named, int instance_index, int trial, int k, int universe,
                                       std::uint64_t master_seed, bool precoloured, bool* used_fallback) {
  FailureBundle bundle;
  bundle.instance_name = named.name;
  bundle.instance_index = instance_index;
  bundle.trial = trial;
  bundle.seed = derive_seed(master_seed, instance_index, trial);
  bundle.instance = named.instance;
  const Graph& g = named.instance.graph;
  bundle.lists = random_list_assignment(g, k, universe, bundle.seed);
  if (precoloured)
    bundle.pre = random_precolouring(std::get<CoronaSpec>(named.instance.spec), g, bundle.lists, splitmix64(bundle.seed));
  try {
    ConstructiveReport r = construct(named.instance, bundle.lists, bundle.pre);
    if (used_fallback) *used_fallback = r.used_fallback;
    bundle.stuck = r.stuck;
    bundle.stuck_rule = r.stuck_rule;
    if (!r.success) {
      bundle.error = "procedure stuck";
      return bundle;
    }
    ColouringVerdict v = validate_colouring(g, bundle.lists, r.colouring);
    if (!v.ok()) {
      bundle.error = "output failed validation";
      return bundle;
    }
    auto replayed = replay_trace(g, r.trace);
    if (!replayed || !(*replayed == r.colouring)) {
      bundle.error = "trace replay does not reproduce the colouring";
      return bundle;
    }
    if (bundle.pre) {
      const auto& s = std::get<CoronaSpec>(named.instance.spec);
      if (r.colouring[first_pendant_internal(s, g)] != bundle.pre->a ||
          r.colouring[g.incidence_id(s.pendant(0, 1), s.cycle(0))] != bundle.pre->b) {
        bundle.error = "pre-colouring not respected";
        return bundle;
      }
    }
  } catch (const std::exception& e) {
    bundle.error = std::string("exception: ") + e.what();
    return bundle;
  }
  return std::nullopt;
}

int CampaignReport::total_trials() const {
  int t = 0;
  for (const auto& i : instances) t += i.trials;
  return t;
}

int CampaignReport::total_failures() const {
  int t = 0;
  for (const auto& i : instances) t += i.failures;
  return t;
}

CampaignReport run_campaign(const FuzzCampaign& c) {
  if (c.trials < 0) throw std::invalid_argument("trials must be non-negative");
  const auto start = Clock::now();
  CampaignReport report;
  struct Slot {
    std::optional<FailureBundle> failure;
    bool fallback = false;
    double seconds = 0;
  };
  const int count = static_cast<int>(c.instances.size());
  std::vector<int> ks(count), universes(count);
  for (int i = 0; i < count; ++i) {
    ks[i] = c.k ? *c.k : theorem_bound(c.instances[i].instance, c.precoloured);
    universes[i] = c.universe ? *c.universe : 3 * ks[i];
    if (universes[i] < ks[i]) throw std::invalid_argument("universe smaller than k");
    if (c.precoloured && family_of(c.instances[i].instance.spec) != Family::corona)
      throw std::invalid_argument("pre-coloured campaigns need corona instances");
  }
  const std::size_t tasks = static_cast<std::size_t>(count) * c.trials;
  std::vector<Slot> slots(tasks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t; (t = next++) < tasks;) {
      const int i = static_cast<int>(t / c.trials), trial = static_cast<int>(t % c.trials);
      const auto t0 = Clock::now();
      slots[t].failure = run_trial(c.instances[i], i, trial, ks[i], universes[i], c.seed, c.precoloured, &slots[t].fallback);
      slots[t].seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  const int workers = std::max(1, c.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  for (int i = 0; i < count; ++i) {
    InstanceReport r;
    r.name = c.instances[i].name;
    r.k = ks[i];
    r.universe = universes[i];
    r.trials = c.trials;
    for (int trial = 0; trial < c.trials; ++trial) {
      Slot& s = slots[static_cast<std::size_t>(i) * c.trials + trial];
      r.seconds += s.seconds;
      if (s.failure) {
        ++r.failures;
        r.bundles.push_back(std::move(*s.failure));
      } else {
        ++r.successes;
        r.fallbacks += s.fallback;
      }
    }
    report.instances.push_back(std::move(r));
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ConstructiveReport replay(const FailureBundle& bundle) { return construct(bundle.instance, bundle.lists, bundle.pre); }

Json to_json(const FailureBundle& b) {
  const Graph& g = b.instance.graph;
  Json j{{"instance_name", b.instance_name}, {"instance_index", b.instance_index},
         {"trial", b.trial},                 {"seed", b.seed},
         {"instance", to_json(b.instance)},  {"lists", to_json(g, b.lists)},
         {"error", b.error}};
  if (b.pre) j["pre"] = to_json(*b.pre);
  if (b.stuck) j["stuck"] = {g.incidence(*b.stuck).vertex, g.incidence(*b.stuck).other};
  if (b.stuck_rule) j["stuck_rule"] = to_string(*b.stuck_rule);
  return j;
}

FailureBundle bundle_from_json(const Json& j) {
  FailureBundle b;
  b.instance_name = j.at("instance_name").get<std::string>();
  b.instance_index = j.at("instance_index").get<int>();
  b.trial = j.at("trial").get<int>();
  b.seed = j.at("seed").get<std::uint64_t>();
  b.instance = instance_from_json(j.at("instance"));
  b.lists = lists_from_json(b.instance.graph, j.at("lists"));
  if (j.contains("pre")) b.pre = precolouring_from_json(j.at("pre"));
  if (j.contains("stuck")) b.stuck = b.instance.graph.incidence_id(j["stuck"][0].get<int>(), j["stuck"][1].get<int>());
  if (j.contains("stuck_rule")) b.stuck_rule = rule_from_string(j.at("stuck_rule").get<std::string>());
  b.error = j.value("error", "");
  return b;
}

Json to_json(const CampaignReport& report) {
  Json inst = Json::array();
  for (const auto& r : report.instances) {
    Json failures = Json::array();
    for (const auto& b : r.bundles) failures.push_back(to_json(b));
    inst.push_back({{"name", r.name},
                    {"k", r.k},
                    {"universe", r.universe},
                    {"trials", r.trials},
                    {"successes", r.successes},
                    {"failures", r.failures},
                    {"fallbacks", r.fallbacks},
                    {"seconds", r.seconds},
                    {"failure_bundles", failures}});
  }
  return {{"instances", inst},
          {"total_trials", report.total_trials()},
          {"total_failures", report.total_failures()},
          {"wall_seconds", report.wall_seconds}};
}

std::string summary(const CampaignReport& report) {
  std::ostringstream out;
  for (const auto& r : report.instances) {
    out << r.name << ": k=" << r.k << " universe=" << r.universe << " trials=" << r.trials
        << " failures=" << r.failures;
    if (r.fallbacks) out << " fallbacks=" << r.fallbacks;
    out << '\n';
  }
  out << "total: " << report.total_trials() << " trials, " << report.total_failures() << " failures, "
      << report.wall_seconds << " s\n";
  return out.str();
}

std::vector<ChiCase> default_chi_suite() {
  std::vector<ChiCase> suite;
  for (int n = 3; n <= 12; ++n)
    suite.push_back({"C" + std::to_string(n), gen_basic(Family::cycle, n).graph, n % 3 == 0 ? 3 : 4});
  for (int n = 2; n <= 5; ++n) suite.push_back({"S" + std::to_string(n), gen_basic(Family::star, n).graph, n + 1});
  suite.push_back({"K4", gen_basic(Family::complete, 4).graph, kChiK4});
  return suite;
}

std::vector<ChiRow> regression_chi(const std::vector<ChiCase>& suite, const SolverConfig& cfg) {
  std::vector<ChiRow> rows;
  for (const auto& c : suite) rows.push_back({c.name, c.expected, incidence_chromatic_number(c.graph, cfg)});
  return rows;
}

}  // namespace incol
