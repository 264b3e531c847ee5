#pragma once

// Corpus loading and model persistence.
//
// Model file grammar (UTF-8, '\n' line endings):
//
//   assoc-nb-model v1
//   vocab <|vocabulary|>
//   category <name> <n_wordsets> <prior, 10 significant digits>
//   <item1,item2,...> <n_k>            one per itemset with n_k > 0
//   ...                                 (one block per category, by name)
//   attribution
//   <item1,item2,...> <category>       one per vocabulary itemset
//   params min_sup <v> min_conf <v> k <n> prior_source <wordsets|documents>
//
// The trailing params line is optional on load.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "assocnb/model.hpp"
#include "assocnb/preprocess.hpp"

namespace assocnb {

inline constexpr const char* kModelMagic = "assoc-nb-model";
inline constexpr int kModelVersion = 1;

/// Each immediate, non-hidden subdirectory of `root` is a category and each
/// regular non-hidden file inside it one document with id
/// "<category>/<filename>". Sorted by id.
/// Throws MissingRoot, NoCategories or UnreadableFile.
std::vector<RawDocument> load_corpus(const std::filesystem::path& root);

/// Inverse of load_corpus for labeled documents (ids are ignored; files are
/// named after the part of the id following the category).
void write_corpus(const std::filesystem::path& root,
                  const std::vector<RawDocument>& documents);

std::string read_text_file(const std::filesystem::path& path);

void write_model(std::ostream& out, const Model& model);
std::string serialize_model(const Model& model);

/// Throws BadMagic, VersionMismatch, or ParseError naming the first bad line.
Model read_model(std::istream& in);
Model parse_model(const std::string& text);

void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace assocnb
