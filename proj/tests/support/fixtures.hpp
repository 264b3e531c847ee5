#pragma once

// Shared fixtures: the small textbook transaction database, the five text
// transactions, the two worked abstracts, and a model shaped like the
// published word-set tables (43/47/17 attributed sets, 107 in total).

#include <filesystem>
#include <string>
#include <vector>

#include "assocnb/model.hpp"
#include "assocnb/types.hpp"

namespace assocnb::testing {

inline const std::string kCs = "Computer Science";
inline const std::string kEe = "Electrical and Electronic";
inline const std::string kMe = "Mechanical";

/// Nine transactions over I1..I5.
std::vector<WordList> textbook_transactions();

/// Five short documents already reduced to words.
std::vector<WordList> text_transactions();

/// Control-systems abstract (expected to land in Computer Science).
std::string control_abstract();

/// Graph-spanner abstract, cleaned of math markup.
std::string spanner_abstract();

struct KnownSet {
  WordList items;  // in the order the table lists them
  std::string category;
  std::size_t n_k;
};

/// Every word set with a published count, including the ones that only
/// appear in the worked matching examples.
std::vector<KnownSet> known_sets();

/// The table-shaped model. Padding sets use words no document contains.
Model table_model();

/// Repository root and committed test data (set by CMake).
std::string source_dir();
std::string test_data_dir();

/// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir();
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  /// Writes `text` to a file under the directory, creating parents.
  std::filesystem::path write(const std::string& relative, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

}  // namespace assocnb::testing
