#include "assocnb/store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "assocnb/errors.hpp"

namespace fs = std::filesystem;

namespace assocnb {

namespace {

bool is_hidden(const fs::path& p) {
  const auto name = p.filename().string();
  return name.empty() || name.front() == '.';
}

std::vector<std::string> split_spaces(std::string_view line) {
  std::vector<std::string> tokens;
  for (auto& field : split(line, ' ')) tokens.push_back(std::move(field));
  return tokens;
}

std::size_t parse_count(const std::string& text, std::size_t line_no) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + text + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::exception&) {
    throw ParseError(line_no, "integer out of range '" + text + "'");
  }
}

double parse_double(const std::string& text, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw ParseError(line_no, "expected a number, got '" + text + "'");
  }
  return v;
}

WordList parse_items(const std::string& text, std::size_t line_no) {
  WordList items;
  for (auto& field : split(text, ',')) {
    if (field.empty()) throw ParseError(line_no, "empty item in '" + text + "'");
    items.push_back(std::move(field));
  }
  WordList sorted = items;
  normalize(sorted);
  if (sorted != items) {
    throw ParseError(line_no, "itemset '" + text + "' is not sorted and duplicate-free");
  }
  return items;
}

std::string join_from(const std::vector<std::string>& tokens, std::size_t first,
                      std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::unreadable_file, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::unreadable_file, "cannot read " + path.string());
  }
  return buf.str();
}

std::vector<RawDocument> load_corpus(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::missing_root,
                "corpus root " + root.string() + " is not a directory");
  }

  std::vector<fs::path> category_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && !is_hidden(entry.path())) {
      category_dirs.push_back(entry.path());
    }
  }
  if (category_dirs.empty()) {
    throw Error(ErrorCode::no_categories,
                "corpus root " + root.string() + " has no category directories");
  }

  std::vector<RawDocument> documents;
  for (const auto& dir : category_dirs) {
    const auto category = dir.filename().string();
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file() || is_hidden(entry.path())) continue;
      RawDocument doc;
      doc.id = category + "/" + entry.path().filename().string();
      doc.category = category;
      doc.text = read_text_file(entry.path());
      documents.push_back(std::move(doc));
    }
  }
  std::sort(documents.begin(), documents.end(),
            [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
  return documents;
}

void write_corpus(const fs::path& root, const std::vector<RawDocument>& documents) {
  for (const auto& doc : documents) {
    if (!doc.category) {
      throw Error(ErrorCode::invalid_argument, "document '" + doc.id + "' has no category");
    }
    const auto slash = doc.id.find('/');
    const auto name = slash == std::string::npos ? doc.id : doc.id.substr(slash + 1);
    const auto dir = root / *doc.category;
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    out << doc.text;
    if (!out) {
      throw Error(ErrorCode::unreadable_file, "cannot write " + (dir / name).string());
    }
  }
}

void write_model(std::ostream& out, const Model& model) {
  out << kModelMagic << " v" << kModelVersion << '\n';
  out << "vocab " << model.vocabulary_size() << '\n';
  for (const auto& stats : model.categories()) {
    out << "category " << stats.category << ' ' << stats.n_wordsets << ' '
        << format_prior(model.prior(stats.category)) << '\n';
    for (const auto& [itemset, n_k] : stats.occurrence) {
      out << join_words(itemset) << ' ' << n_k << '\n';
    }
  }
  out << "attribution\n";
  for (const auto& [itemset, category] : model.attribution()) {
    out << join_words(itemset) << ' ' << category << '\n';
  }
  if (const auto& p = model.params()) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "params min_sup %.17g min_conf %.17g k %zu prior_source %s",
                  p->min_sup, p->min_conf, p->transaction_size_k,
                  to_string(p->prior_source));
    out << buf << '\n';
  }
}

std::string serialize_model(const Model& model) {
  std::ostringstream out;
  write_model(out, model);
  return out.str();
}

Model read_model(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next()) throw Error(ErrorCode::bad_magic, "empty model file");
  const std::string magic_prefix = std::string(kModelMagic) + " v";
  if (line.rfind(magic_prefix, 0) != 0) {
    throw Error(ErrorCode::bad_magic, "not a model file (missing '" +
                                          std::string(kModelMagic) + "' header)");
  }
  const auto version_text = line.substr(magic_prefix.size());
  if (version_text.empty() ||
      !std::all_of(version_text.begin(), version_text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::bad_magic, "malformed model header '" + line + "'");
  }
  if (version_text != std::to_string(kModelVersion)) {
    throw Error(ErrorCode::version_mismatch,
                "model file version " + version_text + " is not supported (expected " +
                    std::to_string(kModelVersion) + ")");
  }

  if (!next()) throw ParseError(line_no + 1, "missing vocab line");
  auto tokens = split_spaces(line);
  if (tokens.size() != 2 || tokens[0] != "vocab") {
    throw ParseError(line_no, "expected 'vocab <size>'");
  }
  const std::size_t vocab_size = parse_count(tokens[1], line_no);

  std::vector<CategoryStats> categories;
  std::map<std::string, double> priors;
  std::map<WordList, std::string> attribution;
  std::optional<TrainingParams> params;

  enum class Section { categories, attribution, params } section = Section::categories;
  while (next()) {
    if (section == Section::params) {
      throw ParseError(line_no, "unexpected content after params line");
    }
    tokens = split_spaces(line);
    if (section == Section::categories) {
      if (line == "attribution") {
        section = Section::attribution;
        continue;
      }
      if (tokens.size() >= 4 && tokens[0] == "category") {
        CategoryStats stats;
        stats.category = join_from(tokens, 1, tokens.size() - 2);
        if (stats.category.empty()) throw ParseError(line_no, "empty category name");
        stats.n_wordsets = parse_count(tokens[tokens.size() - 2], line_no);
        const double prior = parse_double(tokens.back(), line_no);
        if (format_prior(prior) != tokens.back()) {
          throw ParseError(line_no, "prior '" + tokens.back() +
                                        "' is not written with 10 significant digits");
        }
        if (!priors.emplace(stats.category, prior).second) {
          throw ParseError(line_no, "duplicate category '" + stats.category + "'");
        }
        categories.push_back(std::move(stats));
        continue;
      }
      if (tokens.size() != 2) throw ParseError(line_no, "expected '<itemset> <count>'");
      if (categories.empty()) throw ParseError(line_no, "itemset line before any category");
      auto items = parse_items(tokens[0], line_no);
      const auto n_k = parse_count(tokens[1], line_no);
      if (n_k == 0) throw ParseError(line_no, "occurrence count must be positive");
      if (!categories.back().occurrence.emplace(std::move(items), n_k).second) {
        throw ParseError(line_no, "duplicate itemset in category block");
      }
      continue;
    }
    // attribution section
    if (tokens.size() >= 2 && tokens[0] == "params") {
      if (tokens.size() != 9 || tokens[1] != "min_sup" || tokens[3] != "min_conf" ||
          tokens[5] != "k" || tokens[7] != "prior_source") {
        throw ParseError(line_no, "malformed params line");
      }
      TrainingParams p;
      p.min_sup = parse_double(tokens[2], line_no);
      p.min_conf = parse_double(tokens[4], line_no);
      p.transaction_size_k = parse_count(tokens[6], line_no);
      const auto source = parse_prior_source(tokens[8]);
      if (!source) throw ParseError(line_no, "unknown prior source '" + tokens[8] + "'");
      p.prior_source = *source;
      params = p;
      section = Section::params;
      continue;
    }
    const auto space = line.find(' ');
    if (space == std::string::npos || space + 1 >= line.size()) {
      throw ParseError(line_no, "expected '<itemset> <category>'");
    }
    auto items = parse_items(line.substr(0, space), line_no);
    const auto category = line.substr(space + 1);
    if (!attribution.emplace(std::move(items), category).second) {
      throw ParseError(line_no, "duplicate attribution entry");
    }
  }

  if (section == Section::categories) throw ParseError(line_no, "missing attribution block");
  if (attribution.size() != vocab_size) {
    throw ParseError(line_no, "vocab declares " + std::to_string(vocab_size) +
                                  " itemsets but attribution lists " +
                                  std::to_string(attribution.size()));
  }
  try {
    return Model(std::move(categories), std::move(attribution), std::move(priors),
                 std::move(params));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    throw ParseError(line_no, e.what());
  }
}

Model parse_model(const std::string& text) {
  std::istringstream in(text);
  return read_model(in);
}

void save_model(const Model& model, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::unreadable_file, "cannot write " + path.string());
  write_model(out, model);
  out.flush();
  if (!out) throw Error(ErrorCode::unreadable_file, "cannot write " + path.string());
}

Model load_model(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::unreadable_file, "cannot read " + path.string());
  return read_model(in);
}

}  // namespace assocnb
