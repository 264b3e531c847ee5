#pragma once

// Document cleaning: tokenization, stop-word removal, singular/plural merging
// and selection of the frequent words that make up a document's transaction.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "assocnb/types.hpp"

namespace assocnb {

struct RawDocument {
  std::string id;
  std::optional<std::string> category;
  std::string text;
};

/// Lowercased tokens in reading order. `offsets[i]` is the index token i had
/// in the original tokenization, so positions survive filtering.
struct TokenStream {
  std::vector<std::string> tokens;
  std::vector<std::size_t> offsets;

  /// First-occurrence offset of each distinct token.
  std::map<std::string, std::size_t> positions() const;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

struct PreprocessConfig {
  WordSet stopwords;
  std::size_t transaction_size_k = 13;
  std::size_t min_word_frequency = 2;
  /// Singular forms that count as present when deciding whether a plural
  /// may be folded. Classification fills this with the model's words.
  WordSet known_singulars;

  /// Throws Error(invalid_argument) when k < 1 or min_word_frequency < 2.
  void validate() const;

  static PreprocessConfig with_default_stopwords();
};

struct Transaction {
  std::string doc_id;
  std::optional<std::string> category;
  WordList words;                   // sorted
  std::vector<std::size_t> counts;  // parallel to words
};

struct Discarded {
  std::string doc_id;
  std::size_t frequent_words = 0;
  std::string reason;
};

enum class ExtractionMode { training, classification };

using Extraction = std::variant<Transaction, Discarded>;

TokenStream tokenize(std::string_view text);

TokenStream remove_stopwords(const TokenStream& stream,
                             const PreprocessConfig& config);

/// Rewrites w+"s" / w+"es" to w when w occurs in the stream (or in
/// `known_singulars`). Nothing else is stemmed.
TokenStream merge_plurals(const TokenStream& stream,
                          const WordSet& known_singulars = {});

/// Runs the full cleaning pipeline. Training mode keeps exactly k words
/// ranked by (frequency desc, first position asc) and yields Discarded when
/// fewer than k frequent words exist. Classification mode keeps every
/// frequent word and throws Error(empty_document) if there are none.
Extraction extract_transaction(const RawDocument& doc,
                               const PreprocessConfig& config,
                               ExtractionMode mode);

/// One word per line, '#' starts a comment line, lowercased on load.
WordSet parse_stopwords(std::istream& in);
WordSet load_stopwords(const std::filesystem::path& path);

/// The stop-word list bundled with the library.
const WordSet& default_stopwords();

}  // namespace assocnb
