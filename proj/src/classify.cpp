#include "assocnb/classify.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "assocnb/errors.hpp"

namespace assocnb {

const char* to_string(ScoringMode mode) noexcept {
  switch (mode) {
    case ScoringMode::plain: return "plain";
    case ScoringMode::fractional: return "fractional";
    case ScoringMode::multiplier: return "multiplier";
  }
  return "plain";
}

std::optional<ScoringMode> parse_scoring_mode(std::string_view text) {
  if (text == "plain") return ScoringMode::plain;
  if (text == "fractional") return ScoringMode::fractional;
  if (text == "multiplier") return ScoringMode::multiplier;
  return std::nullopt;
}

std::string MatchRecord::fraction_text() const {
  const auto g = std::gcd(matched, total);
  return std::to_string(matched / g) + "/" + std::to_string(total / g);
}

double ClassificationResult::score(std::string_view category) const {
  return std::exp(log_scores.at(std::string(category)));
}

double ClassificationResult::log10_score(std::string_view category) const {
  return log_scores.at(std::string(category)) / std::log(10.0);
}

std::vector<MatchRecord> find_matches(const WordList& doc_words, const Model& model) {
  WordList doc = doc_words;
  normalize(doc);

  struct Best {
    MatchRecord record;
    double conditional;
  };
  std::map<WordList, Best> by_subset;
  for (const auto& itemset : model.vocabulary()) {
    auto common = intersect(itemset, doc);
    if (common.size() < 2) continue;
    const double p = model.conditional(itemset, model.attributed_category(itemset));
    MatchRecord record{itemset, common, common.size(), itemset.size()};

    auto it = by_subset.find(common);
    if (it == by_subset.end()) {
      by_subset.emplace(std::move(common), Best{std::move(record), p});
      continue;
    }
    const auto& held = it->second;
    const bool better =
        p > held.conditional ||
        (p == held.conditional &&
         (itemset.size() < held.record.total ||
          (itemset.size() == held.record.total && itemset < held.record.vocab_itemset)));
    if (better) it->second = Best{std::move(record), p};
  }

  std::vector<MatchRecord> out;
  out.reserve(by_subset.size());
  for (auto& [_, best] : by_subset) out.push_back(std::move(best.record));
  return out;
}

double log_score(std::string_view category, const std::vector<MatchRecord>& matches,
                 const Model& model, ScoringMode mode) {
  double total = std::log(model.prior(category));
  for (const auto& m : matches) {
    const double log_p = std::log(model.conditional(m.vocab_itemset, category));
    switch (mode) {
      case ScoringMode::plain:
        total += log_p;
        break;
      case ScoringMode::fractional:
        total += m.fraction() * log_p;
        break;
      case ScoringMode::multiplier:
        total += std::log(m.fraction()) + log_p;
        break;
    }
  }
  return total;
}

double score(std::string_view category, const std::vector<MatchRecord>& matches,
             const Model& model, ScoringMode mode) {
  return std::exp(log_score(category, matches, model, mode));
}

ClassificationResult classify_words(const WordList& doc_words, const Model& model,
                                    ScoringMode mode, std::string doc_id) {
  ClassificationResult result;
  result.doc_id = std::move(doc_id);
  result.doc_words = doc_words;
  normalize(result.doc_words);
  result.mode = mode;
  result.matches = find_matches(result.doc_words, model);

  const std::string* best = nullptr;
  for (const auto& stats : model.categories()) {
    const auto& name = stats.category;
    const double s = log_score(name, result.matches, model, mode);
    result.log_scores[name] = s;
    if (best == nullptr) {
      best = &name;
      continue;
    }
    const double held = result.log_scores[*best];
    // Categories arrive in name order, so a full tie keeps the earlier name.
    if (s > held || (s == held && model.prior(name) > model.prior(*best))) {
      best = &name;
    }
  }
  if (!result.matches.empty()) result.winner = *best;
  return result;
}

ClassificationResult classify(const RawDocument& doc, const Model& model,
                              const PreprocessConfig& config, ScoringMode mode) {
  PreprocessConfig effective = config;
  const auto words = model.vocabulary_words();
  effective.known_singulars.insert(words.begin(), words.end());

  auto extraction = extract_transaction(doc, effective, ExtractionMode::classification);
  auto& transaction = std::get<Transaction>(extraction);
  return classify_words(transaction.words, model, mode, doc.id);
}

std::string format_report(const ClassificationResult& result) {
  std::ostringstream out;
  out << "doc " << result.doc_id << '\n';
  out << "winner " << (result.winner ? *result.winner : "UNCLASSIFIABLE") << '\n';
  for (const auto& [category, s] : result.log_scores) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", s / std::log(10.0));
    out << "score " << category << ' ' << buf << '\n';
  }
  for (const auto& m : result.matches) {
    out << "match " << join_words(m.matched_subset) << " frac " << m.fraction_text()
        << " from " << join_words(m.vocab_itemset) << '\n';
  }
  return out.str();
}

}  // namespace assocnb
