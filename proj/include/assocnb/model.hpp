#pragma once

// Naive Bayes model over mined word sets with m-estimate smoothed
// conditionals (n_k + 1) / (n + |vocabulary|).

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocnb/apriori.hpp"
#include "assocnb/preprocess.hpp"
#include "assocnb/types.hpp"

namespace assocnb {

enum class PriorSource { wordsets, documents };

const char* to_string(PriorSource source) noexcept;
std::optional<PriorSource> parse_prior_source(std::string_view text);

struct CategoryStats {
  std::string category;
  std::size_t n_wordsets = 0;  // vocabulary itemsets attributed here
  std::map<WordList, std::size_t> occurrence;  // n_k, only entries > 0

  friend bool operator==(const CategoryStats&, const CategoryStats&) = default;
};

/// Training parameters carried along with a model for provenance.
struct TrainingParams {
  double min_sup = 0.02;
  double min_conf = 0.75;
  std::size_t transaction_size_k = 13;
  PriorSource prior_source = PriorSource::wordsets;

  friend bool operator==(const TrainingParams&, const TrainingParams&) = default;
};

/// Immutable once built. The constructor checks every structural invariant
/// and throws Error(invalid_argument) on violation.
class Model {
 public:
  /// `categories` may be in any order; `attribution` maps each vocabulary
  /// itemset to the category it is counted under. Priors are canonicalized
  /// to 10 significant digits.
  Model(std::vector<CategoryStats> categories,
        std::map<WordList, std::string> attribution,
        std::map<std::string, double> priors,
        std::optional<TrainingParams> params = std::nullopt);

  const std::vector<CategoryStats>& categories() const noexcept { return categories_; }
  const std::vector<WordList>& vocabulary() const noexcept { return vocabulary_; }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  const std::map<WordList, std::string>& attribution() const noexcept { return attribution_; }
  const std::map<std::string, double>& priors() const noexcept { return priors_; }
  const std::optional<TrainingParams>& params() const noexcept { return params_; }

  bool has_category(std::string_view category) const;
  const CategoryStats& stats(std::string_view category) const;
  std::vector<std::string> category_names() const;

  /// Occurrences of `itemset` among the category's training transactions.
  std::size_t occurrences(const WordList& itemset, std::string_view category) const;

  double prior(std::string_view category) const;
  double conditional(const WordList& itemset, std::string_view category) const;
  const std::string& attributed_category(const WordList& itemset) const;

  /// Every distinct word appearing in some vocabulary itemset.
  WordSet vocabulary_words() const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<CategoryStats> categories_;  // sorted by name
  std::vector<WordList> vocabulary_;       // sorted
  std::map<WordList, std::string> attribution_;
  std::map<std::string, double> priors_;
  std::optional<TrainingParams> params_;
};

/// Fixed-point decimal with 10 significant digits, as written to model files.
std::string format_prior(double value);

/// The value format_prior(value) reads back as.
double canonical_prior(double value);

std::map<std::string, double> wordset_priors(
    const std::map<std::string, std::size_t>& n_wordsets);
std::map<std::string, double> document_priors(
    const std::map<std::string, std::size_t>& documents);

struct TrainOptions {
  double min_sup = 0.02;
  double min_conf = 0.75;
  PriorSource prior_source = PriorSource::wordsets;
  std::size_t transaction_size_k = 13;  // echoed into the model only
};

/// Everything training produces. The model is what gets persisted; the rest
/// feeds the training summary.
struct Training {
  Model model;
  std::map<std::string, std::size_t> documents;
  std::map<std::string, MiningResult> mining;
  std::map<std::string, std::vector<Rule>> rules;
  std::map<std::string, double> wordset_priors;
  std::map<std::string, double> document_priors;
};

/// Mines each category separately; its maximal frequent itemsets of size >= 2
/// form its vocabulary contribution. Throws InvalidArgument for an empty
/// corpus, an unlabeled transaction or fewer than two categories, and
/// NoFeatures when a category ends up with no attributed word set.
Training train_detailed(std::span<const Transaction> corpus,
                        const TrainOptions& options);
Model train(std::span<const Transaction> corpus, const TrainOptions& options);

}  // namespace assocnb
