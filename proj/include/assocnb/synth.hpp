#pragma once

// Seeded generator for the bundled synthetic abstract corpus. Three
// engineering categories, each with clusters of words that tend to occur
// together, so mining finds real associations.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "assocnb/preprocess.hpp"

namespace assocnb {

struct SynthOptions {
  std::uint64_t seed = 115;
  std::map<std::string, std::size_t> documents_per_category;

  /// n documents in each of the three categories.
  static SynthOptions balanced(std::size_t per_category, std::uint64_t seed = 115);
  /// 47 / 48 / 20 documents.
  static SynthOptions skewed(std::uint64_t seed = 115);
};

/// The three category names, sorted.
std::vector<std::string> synth_categories();

/// Deterministic for a given seed. Each category draws from its own stream,
/// so the first n documents of a category do not depend on how many are
/// requested in total or in other categories.
std::vector<RawDocument> generate_corpus(const SynthOptions& options);

}  // namespace assocnb
