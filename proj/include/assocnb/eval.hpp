#pragma once

// Batch evaluation of a model over a labeled corpus.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "assocnb/classify.hpp"
#include "assocnb/model.hpp"
#include "assocnb/preprocess.hpp"

namespace assocnb {

inline constexpr const char* kUnknownCategory = "unknown-category";
inline constexpr const char* kUnclassifiable = "UNCLASSIFIABLE";

struct EvalReport {
  std::size_t documents = 0;
  std::size_t correct = 0;
  std::size_t unclassifiable = 0;  // includes empty documents
  std::size_t empty_documents = 0;
  /// Rows: actual category (or kUnknownCategory); columns: predicted
  /// category or kUnclassifiable.
  std::map<std::string, std::map<std::string, std::size_t>> confusion;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;

  double accuracy() const noexcept;
  std::size_t row_total(const std::string& actual) const;
  double row_accuracy(const std::string& actual) const;
};

/// Documents whose category is absent from the model count as misclassified
/// under kUnknownCategory; unlabeled documents are skipped.
EvalReport evaluate(const Model& model, const std::vector<RawDocument>& documents,
                    const PreprocessConfig& config, ScoringMode mode);

std::string format_eval(const EvalReport& report);

}  // namespace assocnb
