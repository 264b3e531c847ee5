#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>

namespace assocnb::testing {

std::vector<WordList> textbook_transactions() {
  return {
      {"I1", "I2", "I5"}, {"I2", "I4"},       {"I2", "I3"},
      {"I1", "I2", "I4"}, {"I1", "I3"},       {"I2", "I3"},
      {"I1", "I3"},       {"I1", "I2", "I3", "I5"}, {"I1", "I2", "I3"},
  };
}

std::vector<WordList> text_transactions() {
  return {
      {"algorithm", "network", "graph", "multicast", "processor", "system", "parallel"},
      {"cluster", "network", "design", "message", "processor", "system", "framework"},
      {"algorithm", "software", "graph", "method", "session", "analysis", "parallel"},
      {"switch", "load", "design", "power", "path", "system", "timing"},
      {"cable", "load", "energy", "power", "current", "motor", "signal"},
  };
}

std::string control_abstract() {
  return "This paper discusses feedback control problems like regularization, "
         "noninteraction and linearization, for affine nonlinear singular systems. "
         "First, based on the constrained dynamic algorithm in affine nonlinear "
         "systems, an algorithm is introduced. By using such an algorithm, sufficient "
         "and necessary conditions are derived for the solvability of regularization "
         "problem. Then, another algorithm is proposed, based on which a sequence of "
         "integers can be defined for the system. It is shown that under some mild "
         "conditions, the dynamic part of singular systems can be linearized by using "
         "a regular feedback. Finally, an example is provided to illustrate the main "
         "results.";
}

std::string spanner_abstract() {
  return "Given a connected graph G = (V, E) with n vertices and m edges, the "
         "distance between two vertices in G is the weight of the shortest path "
         "between them. A subgraph G_0 is a t-spanner (an approximate t-spanner) of "
         "G if, for every u, v in V, the distance between u and v in G_0 is at most "
         "t (f(t)) times longer than the distance in G, where f(t) is a polynomial "
         "function of variable t and t <= f(t) < n. In this paper parallel "
         "algorithms for finding approximate t-spanners on both unweighted graphs "
         "and weighted graphs are given. If G is an unweighted graph, our algorithm "
         "requires O(n^2 log n) time and M(n) processors, and the spanner generated "
         "has size of O(n^(1+1/t)) and factor of O(t^(1+1/t)); otherwise our "
         "algorithm requires O(n^2 log n) time and O(n^2) processors.";
}

std::vector<KnownSet> known_sets() {
  return {
      // word-set table
      {{"graph", "algorithm"}, kCs, 5},
      {{"technology", "processor", "system"}, kCs, 4},
      {{"design", "system"}, kCs, 4},
      {{"message-passing", "system"}, kCs, 4},
      {{"oscillation", "system", "power", "model"}, kEe, 3},
      {{"distribution", "load", "feeder", "system"}, kEe, 3},
      {{"multicast", "message-passing", "system"}, kCs, 3},
      {{"destination", "multicast", "approach"}, kCs, 3},
      {{"system", "result", "model"}, kEe, 3},
      {{"power", "control", "system"}, kEe, 3},
      {{"problem", "graph", "algorithm"}, kCs, 3},
      {{"message", "communication", "system"}, kCs, 3},
      {{"stability", "system", "power"}, kEe, 3},
      {{"multidestination", "message-passing", "system"}, kCs, 3},
      {{"customer", "feeder"}, kEe, 3},
      {{"instability", "experiment"}, kMe, 3},
      {{"virtual", "routing"}, kCs, 3},
      {{"device", "power"}, kEe, 3},
      {{"block", "power"}, kEe, 3},
      {{"voltage", "power"}, kEe, 3},
      {{"shear", "stress"}, kMe, 3},
      {{"generator", "test"}, kEe, 3},
      {{"current", "signal"}, kEe, 3},
      {{"stability", "control", "system", "power", "model", "strategy", "device",
        "oscillation"},
       kEe, 2},
      {{"change", "distribution", "system", "load", "customer", "temperature", "feeder"},
       kEe, 2},
      {{"pinout", "framework", "processor", "technology", "system", "design"}, kCs, 2},
      {{"approach", "message-passing", "multicast", "destination", "system"}, kCs, 2},
      {{"broadcast", "message", "multicast", "approach", "destination"}, kCs, 2},
      {{"distribution", "power", "system", "load", "feeder"}, kEe, 2},
      {{"multidestination", "communication", "message", "system", "message-passing"},
       kCs, 2},
      {{"power", "damping", "model", "oscillation", "system"}, kEe, 2},
      {{"irregular", "multicast", "algorithm", "system"}, kCs, 2},
      {{"algorithm", "message-passing", "multicast", "system"}, kCs, 2},
      {{"effect", "system", "power", "load"}, kEe, 2},
      {{"multicast", "network", "message", "algorithm"}, kCs, 2},
      {{"shear", "experiment", "rate", "stress"}, kMe, 2},
      {{"sequential", "generator", "circuit", "test"}, kEe, 2},
      // only seen in the worked matching examples; counts read off the
      // probabilities they are printed with (0.019 -> 2, 0.02 -> 2)
      {{"dynamic", "system", "interaction"}, kEe, 2},
      {{"multidestination", "based", "multicast", "system"}, kCs, 2},
      {{"using", "parameter", "system"}, kEe, 2},
      {{"condition", "algorithm"}, kCs, 2},
      {{"time", "bound", "algorithm"}, kCs, 2},
  };
}

Model table_model() {
  const std::map<std::string, std::size_t> totals = {{kCs, 43}, {kEe, 47}, {kMe, 17}};
  const std::map<std::string, std::string> prefix = {{kCs, "cs"}, {kEe, "ee"}, {kMe, "me"}};

  std::map<std::string, CategoryStats> stats;
  std::map<WordList, std::string> attribution;
  for (const auto& [name, _] : totals) stats[name].category = name;

  auto add = [&](WordList items, const std::string& category, std::size_t n_k) {
    normalize(items);
    stats[category].occurrence[items] = n_k;
    ++stats[category].n_wordsets;
    attribution[items] = category;
  };

  for (const auto& set : known_sets()) add(set.items, set.category, set.n_k);
  for (const auto& [category, total] : totals) {
    for (std::size_t i = 1; stats[category].n_wordsets < total; ++i) {
      char a[48];
      char b[48];
      std::snprintf(a, sizeof a, "%s-filler-%02zu-a", prefix.at(category).c_str(), i);
      std::snprintf(b, sizeof b, "%s-filler-%02zu-b", prefix.at(category).c_str(), i);
      add({a, b}, category, 2);
    }
  }

  std::vector<CategoryStats> categories;
  std::map<std::string, std::size_t> counts;
  for (auto& [name, s] : stats) {
    counts[name] = s.n_wordsets;
    categories.push_back(std::move(s));
  }
  return Model(std::move(categories), std::move(attribution), wordset_priors(counts));
}

std::string source_dir() { return ASSOCNB_SOURCE_DIR; }

std::string test_data_dir() { return source_dir() + "/tests/data"; }

ScratchDir::ScratchDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  const auto name = "assocnb-test-" + std::to_string(rd()) + "-" + std::to_string(counter++);
  path_ = std::filesystem::temp_directory_path() / name;
  std::filesystem::create_directories(path_);
}

ScratchDir::~ScratchDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::filesystem::path ScratchDir::write(const std::string& relative,
                                        const std::string& text) const {
  const auto target = path_ / relative;
  std::filesystem::create_directories(target.parent_path());
  std::ofstream(target, std::ios::binary) << text;
  return target;
}

}  // namespace assocnb::testing
