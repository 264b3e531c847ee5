// Writes the seeded synthetic corpus to disk.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "assocnb/errors.hpp"
#include "assocnb/store.hpp"
#include "assocnb/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic three-category abstract corpus"};
  std::string out;
  std::size_t per_category = 20;
  bool skewed = false;
  std::uint64_t seed = 115;
  app.add_option("--out", out, "Output directory (created if missing)")->required();
  auto* per = app.add_option("--per-category", per_category, "Documents per category")
                  ->capture_default_str()
                  ->check(CLI::PositiveNumber);
  app.add_flag("--skewed", skewed, "Use a 47/48/20 split instead")->excludes(per);
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto options = skewed ? assocnb::SynthOptions::skewed(seed)
                              : assocnb::SynthOptions::balanced(per_category, seed);
  try {
    const auto docs = assocnb::generate_corpus(options);
    assocnb::write_corpus(out, docs);
    std::cout << "wrote " << docs.size() << " documents to " << out << '\n';
  } catch (const assocnb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
