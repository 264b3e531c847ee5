#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "assocnb/errors.hpp"
#include "assocnb/model.hpp"
#include "assocnb/store.hpp"
#include "fixtures.hpp"

namespace assocnb {
namespace {

using testing::kCs;
using testing::kEe;
using testing::kMe;

Transaction labeled(std::string category, WordList words) {
  normalize(words);
  Transaction t;
  t.doc_id = category + "/" + join_words(words);
  t.category = std::move(category);
  t.words = std::move(words);
  t.counts.assign(t.words.size(), 2);
  return t;
}

// Ten transactions per category drawn from a small per-category pool plus a
// shared pool, so some word sets are mined in more than one category.
std::vector<Transaction> synthetic_corpus(unsigned seed) {
  const std::map<std::string, WordList> pools = {
      {"alpha", {"a1", "a2", "a3", "a4", "a5"}},
      {"beta", {"b1", "b2", "b3", "b4", "b5"}},
      {"gamma", {"c1", "c2", "c3", "c4", "c5"}},
  };
  const WordList shared = {"s1", "s2", "s3"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pct(0, 99);
  std::vector<Transaction> corpus;
  for (const auto& [category, pool] : pools) {
    for (int i = 0; i < 10; ++i) {
      WordList words;
      for (const auto& w : pool) {
        if (pct(rng) < 55) words.push_back(w);
      }
      for (const auto& w : shared) {
        if (pct(rng) < 45) words.push_back(w);
      }
      if (words.size() < 2) words = {pool[0], pool[1]};
      corpus.push_back(labeled(category, words));
    }
  }
  return corpus;
}

std::size_t count_containing(const std::vector<WordList>& rows, const WordList& items) {
  std::size_t n = 0;
  for (const auto& r : rows) {
    const std::set<std::string> row(r.begin(), r.end());
    bool all = true;
    for (const auto& it : items) all = all && row.contains(it);
    n += all ? 1 : 0;
  }
  return n;
}

// Recomputes the whole model by hand: subset enumeration per category for the
// frequent sets, maximal filter, attribution, then (n_k + 1) / (n + |V|).
struct HandModel {
  std::map<std::string, std::size_t> n;
  std::map<WordList, std::string> owner;
  std::map<std::string, std::map<WordList, std::size_t>> n_k;
  std::size_t vocab = 0;

  double conditional(const WordList& items, const std::string& category) const {
    const auto& counts = n_k.at(category);
    const auto it = counts.find(items);
    const double k = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    return (k + 1.0) / static_cast<double>(n.at(category) + vocab);
  }
};

HandModel hand_model(const std::vector<Transaction>& corpus, double min_sup) {
  std::map<std::string, std::vector<WordList>> rows;
  for (const auto& t : corpus) rows[*t.category].push_back(t.words);

  std::set<WordList> vocabulary;
  for (const auto& [category, db] : rows) {
    const auto threshold = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::floor(min_sup * static_cast<double>(db.size()) + 1e-9)));
    std::set<std::string> universe_set;
    for (const auto& r : db) universe_set.insert(r.begin(), r.end());
    const std::vector<std::string> universe(universe_set.begin(), universe_set.end());
    std::vector<WordList> frequent;
    for (unsigned mask = 1; mask < (1u << universe.size()); ++mask) {
      WordList items;
      for (std::size_t i = 0; i < universe.size(); ++i) {
        if (mask & (1u << i)) items.push_back(universe[i]);
      }
      if (count_containing(db, items) >= threshold) frequent.push_back(items);
    }
    for (const auto& f : frequent) {
      if (f.size() < 2) continue;
      bool maximal = true;
      for (const auto& g : frequent) {
        if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          maximal = false;
        }
      }
      if (maximal) vocabulary.insert(f);
    }
  }

  HandModel m;
  m.vocab = vocabulary.size();
  for (const auto& v : vocabulary) {
    std::string best;
    std::size_t best_n = 0;
    for (const auto& [category, db] : rows) {
      const auto c = count_containing(db, v);
      if (c > 0) m.n_k[category][v] = c;
      if (best.empty() || c > best_n) {
        best = category;
        best_n = c;
      }
    }
    m.owner[v] = best;
    ++m.n[best];
  }
  for (const auto& [category, _] : rows) {
    m.n.try_emplace(category, 0);
    m.n_k.try_emplace(category);
  }
  return m;
}

TEST(Train, ConditionalsMatchHandComputation) {
  for (const unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto corpus = synthetic_corpus(seed);
    ASSERT_EQ(corpus.size(), 30u);
    const auto hand = hand_model(corpus, 0.2);
    const auto model = train(corpus, {.min_sup = 0.2});

    EXPECT_EQ(model.vocabulary_size(), hand.vocab);
    std::size_t total = 0;
    for (const auto& category : model.category_names()) {
      EXPECT_EQ(model.stats(category).n_wordsets, hand.n.at(category));
      total += model.stats(category).n_wordsets;
      for (const auto& v : model.vocabulary()) {
        EXPECT_DOUBLE_EQ(model.conditional(v, category), hand.conditional(v, category))
            << join_words(v) << " in " << category << " seed " << seed;
      }
      EXPECT_EQ(model.prior(category),
                canonical_prior(static_cast<double>(hand.n.at(category)) /
                                static_cast<double>(hand.vocab)));
    }
    EXPECT_EQ(total, model.vocabulary_size());
    EXPECT_EQ(model.attribution(), hand.owner);
  }
}

TEST(Train, CrossCategorySetsGoToLargestCountThenFirstName) {
  std::vector<Transaction> corpus;
  for (int i = 0; i < 3; ++i) corpus.push_back(labeled("b", {"x", "y"}));
  for (int i = 0; i < 2; ++i) corpus.push_back(labeled("a", {"x", "y"}));
  for (int i = 0; i < 2; ++i) corpus.push_back(labeled("a", {"p", "q"}));
  for (int i = 0; i < 2; ++i) corpus.push_back(labeled("c", {"p", "q"}));
  for (int i = 0; i < 2; ++i) corpus.push_back(labeled("c", {"r", "s"}));
  const auto model = train(corpus, {.min_sup = 0.1});
  EXPECT_EQ(model.attributed_category({"x", "y"}), "b");
  EXPECT_EQ(model.attributed_category({"p", "q"}), "a");  // tie 2:2
  EXPECT_EQ(model.attributed_category({"r", "s"}), "c");
  // True counts stay visible to every category.
  EXPECT_EQ(model.occurrences({"x", "y"}, "a"), 2u);
  EXPECT_EQ(model.occurrences({"p", "q"}, "c"), 2u);
  EXPECT_EQ(model.stats("a").n_wordsets, 1u);
}

TEST(Train, CategoryWithoutWordSetsFailsLoudly) {
  std::vector<Transaction> corpus = {labeled("a", {"x", "y"}), labeled("a", {"x", "y"}),
                                     labeled("b", {"p", "q"}), labeled("b", {"r", "s"})};
  try {
    train(corpus, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_features);
  }
}

TEST(Train, RejectsBadCorpora) {
  EXPECT_THROW(train(std::vector<Transaction>{}, {}), Error);
  std::vector<Transaction> one = {labeled("a", {"x", "y"}), labeled("a", {"x", "y"})};
  EXPECT_THROW(train(one, {}), Error);
  auto unlabeled = one;
  unlabeled.push_back(labeled("b", {"x", "y"}));
  unlabeled.back().category.reset();
  EXPECT_THROW(train(unlabeled, {}), Error);
}

TEST(Train, PriorsUnchangedByDuplicatingCorpus) {
  for (const unsigned seed : {11u, 12u, 13u}) {
    const auto corpus = synthetic_corpus(seed);
    auto doubled = corpus;
    doubled.insert(doubled.end(), corpus.begin(), corpus.end());
    const auto a = train(corpus, {.min_sup = 0.2});
    const auto b = train(doubled, {.min_sup = 0.2});
    EXPECT_EQ(a.priors(), b.priors());
    EXPECT_EQ(a.vocabulary(), b.vocabulary());
  }
}

TEST(Train, Deterministic) {
  const auto corpus = synthetic_corpus(21);
  EXPECT_EQ(serialize_model(train(corpus, {.min_sup = 0.2})),
            serialize_model(train(corpus, {.min_sup = 0.2})));
}

TEST(Train, DocumentPriorSwitch) {
  std::vector<Transaction> corpus;
  for (int i = 0; i < 3; ++i) corpus.push_back(labeled("a", {"x", "y"}));
  for (int i = 0; i < 2; ++i) corpus.push_back(labeled("a", {"u", "v"}));
  for (int i = 0; i < 5; ++i) corpus.push_back(labeled("b", {"p", "q"}));
  const auto training =
      train_detailed(corpus, {.min_sup = 0.2, .prior_source = PriorSource::documents});
  EXPECT_DOUBLE_EQ(training.model.prior("a"), 0.5);
  EXPECT_NEAR(training.wordset_priors.at("a"), 2.0 / 3.0, 1e-9);
  EXPECT_EQ(training.model.params()->prior_source, PriorSource::documents);
}

TEST(Conditional, SmoothingFloorAndMonotone) {
  const auto model = testing::table_model();
  for (const auto& category : model.category_names()) {
    const double floor =
        1.0 / static_cast<double>(model.stats(category).n_wordsets + model.vocabulary_size());
    EXPECT_DOUBLE_EQ(model.conditional({"never", "seen"}, category), floor);
    std::map<std::size_t, double> by_count;
    for (const auto& v : model.vocabulary()) {
      const double p = model.conditional(v, category);
      EXPECT_GT(p, 0.0);
      EXPECT_LT(p, 1.0);
      by_count[model.occurrences(v, category)] = p;
    }
    double last = 0.0;
    for (const auto& [_, p] : by_count) {
      EXPECT_GT(p, last);
      last = p;
    }
  }
  EXPECT_THROW(model.conditional({"graph", "algorithm"}, "Biology"), Error);
  EXPECT_THROW(model.prior("Biology"), Error);
}

TEST(TableModel, ShapeAndPriors) {
  const auto model = testing::table_model();
  EXPECT_EQ(model.vocabulary_size(), 107u);
  EXPECT_EQ(model.stats(kCs).n_wordsets, 43u);
  EXPECT_EQ(model.stats(kEe).n_wordsets, 47u);
  EXPECT_EQ(model.stats(kMe).n_wordsets, 17u);
  EXPECT_NEAR(model.prior(kCs), 43.0 / 107.0, 1e-9);
  EXPECT_NEAR(model.prior(kEe), 47.0 / 107.0, 1e-9);
  EXPECT_NEAR(model.prior(kMe), 17.0 / 107.0, 1e-9);
  EXPECT_NEAR(model.prior(kCs), 0.402, 0.0005);
  double sum = 0.0;
  for (const auto& [_, p] : model.priors()) sum += p;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(TableModel, WorkedConditionals) {
  const auto model = testing::table_model();
  EXPECT_DOUBLE_EQ(model.conditional({"algorithm", "graph"}, kCs), 6.0 / 150.0);
  EXPECT_DOUBLE_EQ(model.conditional({"model", "oscillation", "power", "system"}, kEe),
                   4.0 / 154.0);
  EXPECT_DOUBLE_EQ(model.conditional({"experiment", "instability"}, kMe), 4.0 / 124.0);
}

TEST(Priors, Helpers) {
  const auto equal = wordset_priors({{"a", 5}, {"b", 5}});
  EXPECT_DOUBLE_EQ(equal.at("a"), 0.5);
  const auto thirds = document_priors({{"a", 1}, {"b", 1}, {"c", 1}});
  EXPECT_NEAR(thirds.at("c"), 1.0 / 3.0, 1e-9);
  EXPECT_EQ(format_prior(43.0 / 107.0), "0.4018691589");
  EXPECT_EQ(format_prior(0.5), "0.5000000000");
  EXPECT_EQ(format_prior(0.0), "0");
  EXPECT_EQ(canonical_prior(canonical_prior(1.0 / 3.0)), canonical_prior(1.0 / 3.0));
}

TEST(ModelInvariants, ConstructorRejectsInconsistentInput) {
  auto stats = [](std::string name, std::size_t n, std::map<WordList, std::size_t> occ) {
    return CategoryStats{std::move(name), n, std::move(occ)};
  };
  const std::map<WordList, std::string> attribution = {{{"a", "b"}, "x"}, {{"c", "d"}, "y"}};
  const std::map<std::string, double> priors = {{"x", 0.5}, {"y", 0.5}};
  EXPECT_NO_THROW(Model({stats("x", 1, {{{"a", "b"}, 2}}), stats("y", 1, {{{"c", "d"}, 1}})},
                        attribution, priors));
  // n_wordsets disagrees with attribution
  EXPECT_THROW(Model({stats("x", 2, {}), stats("y", 1, {})}, attribution, priors), Error);
  // priors do not sum to one
  EXPECT_THROW(Model({stats("x", 1, {}), stats("y", 1, {})}, attribution,
                     {{"x", 0.5}, {"y", 0.6}}),
               Error);
  // occurrence outside the vocabulary
  EXPECT_THROW(Model({stats("x", 1, {{{"z", "w"}, 1}}), stats("y", 1, {})}, attribution, priors),
               Error);
  // attribution to an unknown category
  EXPECT_THROW(Model({stats("x", 1, {}), stats("y", 1, {})}, {{{"a", "b"}, "x"}, {{"c", "d"}, "q"}},
                     priors),
               Error);
  // duplicate category
  EXPECT_THROW(Model({stats("x", 1, {}), stats("x", 1, {})}, attribution, priors), Error);
}

}  // namespace
}  // namespace assocnb
