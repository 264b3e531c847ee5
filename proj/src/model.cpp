#include "assocnb/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "assocnb/errors.hpp"

namespace assocnb {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::invalid_argument, message);
}

}  // namespace

const char* to_string(PriorSource source) noexcept {
  return source == PriorSource::wordsets ? "wordsets" : "documents";
}

std::optional<PriorSource> parse_prior_source(std::string_view text) {
  if (text == "wordsets") return PriorSource::wordsets;
  if (text == "documents") return PriorSource::documents;
  return std::nullopt;
}

std::string format_prior(double value) {
  if (value == 0.0) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const int decimals = std::max(0, 9 - magnitude);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

double canonical_prior(double value) {
  return std::strtod(format_prior(value).c_str(), nullptr);
}

Model::Model(std::vector<CategoryStats> categories,
             std::map<WordList, std::string> attribution,
             std::map<std::string, double> priors,
             std::optional<TrainingParams> params)
    : categories_(std::move(categories)),
      attribution_(std::move(attribution)),
      priors_(std::move(priors)),
      params_(std::move(params)) {
  if (categories_.empty()) invalid("model has no categories");
  std::sort(categories_.begin(), categories_.end(),
            [](const CategoryStats& a, const CategoryStats& b) {
              return a.category < b.category;
            });
  for (std::size_t i = 0; i < categories_.size(); ++i) {
    const auto& name = categories_[i].category;
    if (name.empty() || name.find('\n') != std::string::npos ||
        trim(name) != name) {
      invalid("bad category name '" + name + "'");
    }
    if (i > 0 && categories_[i - 1].category == name) {
      invalid("duplicate category '" + name + "'");
    }
  }

  if (attribution_.empty()) invalid("model vocabulary is empty");
  std::map<std::string, std::size_t, std::less<>> attributed;
  for (const auto& [itemset, category] : attribution_) {
    WordList sorted = itemset;
    normalize(sorted);
    if (itemset.empty() || sorted != itemset) {
      invalid("vocabulary itemset '" + join_words(itemset) +
              "' is not sorted and duplicate-free");
    }
    if (!has_category(category)) {
      invalid("itemset '" + join_words(itemset) +
              "' attributed to unknown category '" + category + "'");
    }
    ++attributed[category];
    vocabulary_.push_back(itemset);
  }

  for (const auto& stats : categories_) {
    const auto it = attributed.find(stats.category);
    const std::size_t expected = it == attributed.end() ? 0 : it->second;
    if (stats.n_wordsets != expected) {
      invalid("category '" + stats.category + "' declares " +
              std::to_string(stats.n_wordsets) + " word sets but " +
              std::to_string(expected) + " are attributed to it");
    }
    for (const auto& [itemset, count] : stats.occurrence) {
      if (!attribution_.contains(itemset)) {
        invalid("occurrence of '" + join_words(itemset) +
                "' which is not in the vocabulary");
      }
      if (count == 0) invalid("zero occurrence entry for '" + join_words(itemset) + "'");
    }
  }

  if (priors_.size() != categories_.size()) invalid("one prior per category required");
  double total = 0.0;
  for (auto& [category, p] : priors_) {
    if (!has_category(category)) invalid("prior for unknown category '" + category + "'");
    if (!(p >= 0.0 && p <= 1.0)) invalid("prior outside [0, 1] for '" + category + "'");
    p = canonical_prior(p);
    total += p;
  }
  if (std::fabs(total - 1.0) > 1e-9) invalid("priors do not sum to 1");
}

bool Model::has_category(std::string_view category) const {
  return std::any_of(categories_.begin(), categories_.end(),
                     [&](const CategoryStats& s) { return s.category == category; });
}

const CategoryStats& Model::stats(std::string_view category) const {
  const auto it = std::lower_bound(
      categories_.begin(), categories_.end(), category,
      [](const CategoryStats& s, std::string_view key) { return s.category < key; });
  if (it == categories_.end() || it->category != category) {
    throw Error(ErrorCode::unknown_category,
                "unknown category '" + std::string(category) + "'");
  }
  return *it;
}

std::vector<std::string> Model::category_names() const {
  std::vector<std::string> names;
  for (const auto& s : categories_) names.push_back(s.category);
  return names;
}

std::size_t Model::occurrences(const WordList& itemset, std::string_view category) const {
  const auto& s = stats(category);
  const auto it = s.occurrence.find(itemset);
  return it == s.occurrence.end() ? 0 : it->second;
}

double Model::prior(std::string_view category) const {
  return priors_.at(stats(category).category);
}

double Model::conditional(const WordList& itemset, std::string_view category) const {
  const auto& s = stats(category);
  const auto it = s.occurrence.find(itemset);
  const double n_k = it == s.occurrence.end() ? 0.0 : static_cast<double>(it->second);
  return (n_k + 1.0) /
         static_cast<double>(s.n_wordsets + vocabulary_.size());
}

const std::string& Model::attributed_category(const WordList& itemset) const {
  const auto it = attribution_.find(itemset);
  if (it == attribution_.end()) {
    throw Error(ErrorCode::invalid_argument,
                "'" + join_words(itemset) + "' is not in the vocabulary");
  }
  return it->second;
}

WordSet Model::vocabulary_words() const {
  WordSet words;
  for (const auto& itemset : vocabulary_) words.insert(itemset.begin(), itemset.end());
  return words;
}

std::map<std::string, double> wordset_priors(
    const std::map<std::string, std::size_t>& n_wordsets) {
  std::size_t total = 0;
  for (const auto& [_, n] : n_wordsets) total += n;
  std::map<std::string, double> priors;
  for (const auto& [category, n] : n_wordsets) {
    priors[category] = total == 0 ? 0.0
                                  : canonical_prior(static_cast<double>(n) /
                                                    static_cast<double>(total));
  }
  return priors;
}

std::map<std::string, double> document_priors(
    const std::map<std::string, std::size_t>& documents) {
  return wordset_priors(documents);
}

Training train_detailed(std::span<const Transaction> corpus,
                        const TrainOptions& options) {
  if (corpus.empty()) invalid("training corpus is empty");

  std::map<std::string, std::vector<WordList>> rows_by_category;
  for (const auto& t : corpus) {
    if (!t.category || t.category->empty()) {
      invalid("training transaction '" + t.doc_id + "' has no category");
    }
    rows_by_category[*t.category].push_back(t.words);
  }
  if (rows_by_category.size() < 2) invalid("training needs at least 2 categories");

  std::map<std::string, TransactionDB> dbs;
  std::map<std::string, std::size_t> documents;
  std::map<std::string, MiningResult> mining;
  std::map<std::string, std::vector<Rule>> rules;
  std::set<WordList> vocabulary;

  for (auto& [category, rows] : rows_by_category) {
    documents[category] = rows.size();
    TransactionDB db(std::move(rows));
    auto result = mine(db, options.min_sup);
    rules[category] = generate_rules(result, options.min_conf, db);

    std::size_t contributed = 0;
    for (const auto& s : result.maximal) {
      if (s.items.size() >= 2) {
        vocabulary.insert(s.items);
        ++contributed;
      }
    }
    if (contributed == 0) {
      throw Error(ErrorCode::no_features,
                  "category '" + category + "' yields no word sets");
    }
    mining.emplace(category, std::move(result));
    dbs.emplace(category, std::move(db));
  }

  const std::vector<WordList> vocab(vocabulary.begin(), vocabulary.end());
  std::map<std::string, CategoryStats> stats;
  for (const auto& [category, db] : dbs) {
    auto& s = stats[category];
    s.category = category;
    for (const auto& counted : count_support(vocab, db)) {
      if (counted.support_count > 0) s.occurrence[counted.items] = counted.support_count;
    }
  }

  // Attribution: largest n_k wins; iterating in name order with a strict
  // comparison keeps the lexicographically first category on ties.
  std::map<WordList, std::string> attribution;
  for (const auto& itemset : vocab) {
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    for (const auto& [category, s] : stats) {
      const auto it = s.occurrence.find(itemset);
      const std::size_t n_k = it == s.occurrence.end() ? 0 : it->second;
      if (best == nullptr || n_k > best_count) {
        best = &category;
        best_count = n_k;
      }
    }
    attribution[itemset] = *best;
    ++stats[*best].n_wordsets;
  }

  std::map<std::string, std::size_t> n_wordsets;
  for (const auto& [category, s] : stats) {
    if (s.n_wordsets == 0) {
      throw Error(ErrorCode::no_features,
                  "category '" + category +
                      "' keeps no word sets after attribution");
    }
    n_wordsets[category] = s.n_wordsets;
  }

  auto by_wordsets = wordset_priors(n_wordsets);
  auto by_documents = document_priors(documents);

  std::vector<CategoryStats> categories;
  for (auto& [_, s] : stats) categories.push_back(std::move(s));

  TrainingParams params{options.min_sup, options.min_conf,
                        options.transaction_size_k, options.prior_source};
  Model model(std::move(categories), std::move(attribution),
              options.prior_source == PriorSource::wordsets ? by_wordsets
                                                            : by_documents,
              params);
  return Training{std::move(model), std::move(documents), std::move(mining),
                  std::move(rules), std::move(by_wordsets),
                  std::move(by_documents)};
}

Model train(std::span<const Transaction> corpus, const TrainOptions& options) {
  return train_detailed(corpus, options).model;
}

}  // namespace assocnb
