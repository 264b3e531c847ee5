#pragma once

// The `assocnb` command-line tool, callable in-process for testing.
//
// Exit codes:
//   0  success
//   1  usage error (bad flag, out-of-range parameter)
//   2  input error (parse error, missing or unreadable corpus/model/file)
//   3  nothing to learn from (empty transaction database, category without
//      word sets)
//   4  document could not be classified (no word set matched)
//   5  document has no frequent words

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "assocnb/model.hpp"
#include "assocnb/preprocess.hpp"

namespace assocnb {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitNoData = 3,
  kExitUnclassifiable = 4,
  kExitEmptyDocument = 5,
};

/// `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct TrainingStats {
  std::size_t documents_used = 0;
  std::vector<Discarded> discarded;
  std::map<std::string, std::size_t> documents;  // per category, may be empty
  std::map<std::string, std::size_t> rules;      // strong rules per category
};

/// Summary printed by `train`. Priors come from the model; when document
/// counts are known and the two prior readings differ by more than 0.01 for
/// some category, both are listed.
std::string format_training_summary(const Model& model, const TrainingStats& stats);

}  // namespace assocnb
