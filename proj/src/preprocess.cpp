#include "assocnb/preprocess.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

#include "assocnb/errors.hpp"

namespace assocnb {

namespace detail {
// Generated at build time from data/stopwords.txt.
extern const char* const kBundledStopwords;
}  // namespace detail

namespace {

// Non-ASCII code points that act as separators: Latin-1 punctuation and
// symbols, general punctuation, math operators, arrows, CJK and fullwidth
// punctuation. Everything else above ASCII is treated as a letter.
bool is_separator_codepoint(std::uint32_t cp) {
  if (cp < 0xC0) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2000 && cp <= 0x2BFF) return true;
  if (cp >= 0x2E00 && cp <= 0x2E7F) return true;
  if (cp >= 0x3000 && cp <= 0x303F) return true;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return true;
  if (cp >= 0xFF00 && cp <= 0xFF0F) return true;
  if (cp >= 0xFF1A && cp <= 0xFF20) return true;
  if (cp >= 0xFFF0 && cp <= 0xFFFF) return true;
  return false;
}

// Decodes one UTF-8 sequence starting at `i`. Returns its length, or 0 for
// an invalid sequence.
std::size_t decode_utf8(std::string_view s, std::size_t i, std::uint32_t& cp) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 0;
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t j = 1; j < len; ++j) {
    const auto b = static_cast<unsigned char>(s[i + j]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  return len;
}

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::map<std::string, std::size_t> TokenStream::positions() const {
  std::map<std::string, std::size_t> first;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    first.emplace(tokens[i], offsets[i]);
  }
  return first;
}

void PreprocessConfig::validate() const {
  if (transaction_size_k < 1) {
    throw Error(ErrorCode::invalid_argument, "transaction size k must be >= 1");
  }
  if (min_word_frequency < 2) {
    throw Error(ErrorCode::invalid_argument,
                "minimum word frequency must be >= 2");
  }
}

PreprocessConfig PreprocessConfig::with_default_stopwords() {
  PreprocessConfig config;
  config.stopwords = default_stopwords();
  return config;
}

TokenStream tokenize(std::string_view text) {
  TokenStream out;
  std::string current;

  auto flush = [&] {
    const auto first = current.find_first_not_of('-');
    if (first != std::string::npos) {
      const auto last = current.find_last_not_of('-');
      out.offsets.push_back(out.tokens.size());
      out.tokens.push_back(current.substr(first, last - first + 1));
    }
    current.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (static_cast<unsigned char>(c) < 0x80) {
      if (is_ascii_alnum(c) || c == '-') {
        current.push_back(ascii_lower(c));
      } else {
        flush();
      }
      ++i;
      continue;
    }
    std::uint32_t cp = 0;
    const auto len = decode_utf8(text, i, cp);
    if (len == 0) {
      flush();
      ++i;
    } else {
      if (is_separator_codepoint(cp)) {
        flush();
      } else {
        current.append(text.substr(i, len));
      }
      i += len;
    }
  }
  flush();
  return out;
}

TokenStream remove_stopwords(const TokenStream& stream,
                             const PreprocessConfig& config) {
  TokenStream out;
  for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
    if (config.stopwords.contains(stream.tokens[i])) continue;
    out.tokens.push_back(stream.tokens[i]);
    out.offsets.push_back(stream.offsets[i]);
  }
  return out;
}

TokenStream merge_plurals(const TokenStream& stream,
                          const WordSet& known_singulars) {
  WordSet present(stream.tokens.begin(), stream.tokens.end());
  auto attested = [&](const std::string& w) {
    return present.contains(w) || known_singulars.contains(w);
  };

  // Follow the chain to a fixed point so the rewrite is idempotent.
  auto singular_of = [&](std::string word) {
    while (true) {
      if (word.size() > 1 && ends_with(word, "s")) {
        auto base = word.substr(0, word.size() - 1);
        if (attested(base)) {
          word = std::move(base);
          continue;
        }
      }
      if (word.size() > 2 && ends_with(word, "es")) {
        auto base = word.substr(0, word.size() - 2);
        if (attested(base)) {
          word = std::move(base);
          continue;
        }
      }
      return word;
    }
  };

  std::map<std::string, std::string, std::less<>> rewrite;
  for (const auto& w : present) rewrite.emplace(w, singular_of(w));

  TokenStream out = stream;
  for (auto& token : out.tokens) token = rewrite.at(token);
  return out;
}

Extraction extract_transaction(const RawDocument& doc,
                               const PreprocessConfig& config,
                               ExtractionMode mode) {
  config.validate();
  const auto cleaned = merge_plurals(
      remove_stopwords(tokenize(doc.text), config), config.known_singulars);

  std::map<std::string, std::size_t> frequency;
  for (const auto& token : cleaned.tokens) ++frequency[token];
  const auto first_pos = cleaned.positions();

  struct Candidate {
    std::string word;
    std::size_t count;
    std::size_t position;
  };
  std::vector<Candidate> frequent;
  for (const auto& [word, count] : frequency) {
    if (count >= config.min_word_frequency) {
      frequent.push_back({word, count, first_pos.at(word)});
    }
  }

  if (mode == ExtractionMode::classification) {
    if (frequent.empty()) {
      throw Error(ErrorCode::empty_document,
                  "document '" + doc.id + "' has no frequent words");
    }
  } else {
    if (frequent.size() < config.transaction_size_k) {
      return Discarded{doc.id, frequent.size(),
                       "only " + std::to_string(frequent.size()) +
                           " frequent words, need " +
                           std::to_string(config.transaction_size_k)};
    }
    std::sort(frequent.begin(), frequent.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.count != b.count) return a.count > b.count;
                return a.position < b.position;
              });
    frequent.resize(config.transaction_size_k);
  }

  std::sort(frequent.begin(), frequent.end(),
            [](const Candidate& a, const Candidate& b) { return a.word < b.word; });

  Transaction t;
  t.doc_id = doc.id;
  t.category = doc.category;
  for (auto& c : frequent) {
    t.words.push_back(std::move(c.word));
    t.counts.push_back(c.count);
  }
  return t;
}

WordSet parse_stopwords(std::istream& in) {
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    std::string lowered(word);
    for (auto& c : lowered) c = ascii_lower(c);
    words.insert(std::move(lowered));
  }
  return words;
}

WordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::unreadable_file,
                "cannot read stop-word file " + path.string());
  }
  return parse_stopwords(in);
}

const WordSet& default_stopwords() {
  static const WordSet words = [] {
    std::istringstream in(detail::kBundledStopwords);
    return parse_stopwords(in);
  }();
  return words;
}

}  // namespace assocnb
