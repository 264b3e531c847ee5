#pragma once

// Matching a document's frequent words against the model's word sets and
// picking the Naive Bayes argmax.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assocnb/model.hpp"
#include "assocnb/preprocess.hpp"
#include "assocnb/types.hpp"

namespace assocnb {

/// plain: prior * prod P(V|c).  fractional: prior * prod P(V|c)^fraction.
/// multiplier: prior * prod fraction * P(V|c), kept for comparison only.
enum class ScoringMode { plain, fractional, multiplier };

const char* to_string(ScoringMode mode) noexcept;
std::optional<ScoringMode> parse_scoring_mode(std::string_view text);

struct MatchRecord {
  WordList vocab_itemset;
  WordList matched_subset;  // vocab_itemset ∩ document words, size >= 2
  std::size_t matched = 0;  // |matched_subset|
  std::size_t total = 0;    // |vocab_itemset|

  double fraction() const noexcept {
    return static_cast<double>(matched) / static_cast<double>(total);
  }
  /// "p/q" in lowest terms.
  std::string fraction_text() const;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

struct ClassificationResult {
  std::string doc_id;
  WordList doc_words;
  std::map<std::string, double> log_scores;  // natural log
  std::optional<std::string> winner;         // nullopt == unclassifiable
  std::vector<MatchRecord> matches;
  ScoringMode mode = ScoringMode::plain;

  bool unclassifiable() const noexcept { return !winner.has_value(); }
  double score(std::string_view category) const;
  double log10_score(std::string_view category) const;
};

/// Every vocabulary itemset sharing at least two words with the document,
/// deduplicated by matched subset (largest conditional in the attributed
/// category wins, then the smaller itemset, then the lexicographically
/// smaller one). Sorted by matched subset.
std::vector<MatchRecord> find_matches(const WordList& doc_words, const Model& model);

double log_score(std::string_view category, const std::vector<MatchRecord>& matches,
                 const Model& model, ScoringMode mode);
double score(std::string_view category, const std::vector<MatchRecord>& matches,
             const Model& model, ScoringMode mode);

/// Scores every category; the winner is the largest score, ties going to the
/// larger prior and then the smaller name. No matches means unclassifiable.
ClassificationResult classify_words(const WordList& doc_words, const Model& model,
                                    ScoringMode mode, std::string doc_id = {});

/// Extracts the document's frequent words (no cap; the model's words count as
/// attested singulars for plural folding) and classifies them. Throws
/// Error(empty_document) when the document has no frequent word.
ClassificationResult classify(const RawDocument& doc, const Model& model,
                              const PreprocessConfig& config, ScoringMode mode);

/// "doc", "winner", one "score" line per category (log10, 6 decimals) and
/// one "match" line per record.
std::string format_report(const ClassificationResult& result);

}  // namespace assocnb
