#include "assocnb/types.hpp"

#include <algorithm>

#include "assocnb/errors.hpp"

namespace assocnb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_support: return "InvalidSupport";
    case ErrorCode::empty_database: return "EmptyDatabase";
    case ErrorCode::no_features: return "NoFeatures";
    case ErrorCode::unknown_category: return "UnknownCategory";
    case ErrorCode::empty_document: return "EmptyDocument";
    case ErrorCode::missing_root: return "MissingRoot";
    case ErrorCode::unreadable_file: return "UnreadableFile";
    case ErrorCode::no_categories: return "NoCategories";
    case ErrorCode::bad_magic: return "BadMagic";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::version_mismatch: return "VersionMismatch";
  }
  return "Unknown";
}

void normalize(WordList& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool contains_all(const WordList& row, const WordList& items) {
  return std::includes(row.begin(), row.end(), items.begin(), items.end());
}

WordList intersect(const WordList& a, const WordList& b) {
  WordList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::string join_words(const WordList& words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i != 0) out += sep;
    out += words[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(text.substr(start));
      return fields;
    }
    fields.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

}  // namespace assocnb
