#include "assocnb/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "assocnb/apriori.hpp"
#include "assocnb/classify.hpp"
#include "assocnb/errors.hpp"
#include "assocnb/eval.hpp"
#include "assocnb/store.hpp"

namespace assocnb {

namespace {

struct RunConfig {
  double min_sup = 0.02;
  double min_conf = 0.75;
  std::size_t k = 13;
  std::string stopwords_path;
  std::string mode = "plain";
  std::string prior_source = "wordsets";
  std::string model_path;
  std::string out_path;
  std::string input;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::invalid_support:
      return kExitUsage;
    case ErrorCode::empty_database:
    case ErrorCode::no_features:
      return kExitNoData;
    case ErrorCode::empty_document:
      return kExitEmptyDocument;
    default:
      return kExitInput;
  }
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

PreprocessConfig preprocess_config(const RunConfig& rc) {
  PreprocessConfig config;
  config.stopwords =
      rc.stopwords_path.empty() ? default_stopwords() : load_stopwords(rc.stopwords_path);
  config.transaction_size_k = rc.k;
  config.validate();
  return config;
}

ScoringMode scoring_mode(const RunConfig& rc) {
  // CLI11 restricts the value set, so this cannot fail.
  return parse_scoring_mode(rc.mode).value_or(ScoringMode::plain);
}

int cmd_mine(const RunConfig& rc, std::ostream& out) {
  std::ifstream in(rc.input, std::ios::binary);
  if (!in) throw Error(ErrorCode::unreadable_file, "cannot read " + rc.input);
  const TransactionDB db(parse_transactions(in));
  const auto result = mine(db, rc.min_sup);
  const auto rules = generate_rules(result, rc.min_conf, db);

  if (!rc.out_path.empty()) {
    std::ofstream file(rc.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::unreadable_file, "cannot write " + rc.out_path);
    write_itemsets(file, result);
  }

  out << "# transactions " << db.size() << ", support threshold "
      << result.support_threshold_count << '\n';
  out << "# frequent itemsets\n";
  write_itemsets(out, result);
  out << "# maximal itemsets\n";
  for (const auto& s : result.maximal) {
    out << join_words(s.items) << '\t' << s.support_count << '\n';
  }
  out << "# rules (min-conf " << rc.min_conf << ")\n";
  for (const auto& rule : rules) out << format_rule(rule) << '\n';
  return kExitOk;
}

int cmd_train(const RunConfig& rc, std::ostream& out) {
  const auto config = preprocess_config(rc);
  const auto source = parse_prior_source(rc.prior_source).value_or(PriorSource::wordsets);
  const auto documents = load_corpus(rc.input);

  TrainingStats stats;
  std::vector<Transaction> corpus;
  for (const auto& doc : documents) {
    auto extraction = extract_transaction(doc, config, ExtractionMode::training);
    if (auto* t = std::get_if<Transaction>(&extraction)) {
      corpus.push_back(std::move(*t));
    } else {
      stats.discarded.push_back(std::get<Discarded>(extraction));
    }
  }
  stats.documents_used = corpus.size();

  // Every category directory takes part, so one whose documents were all
  // discarded surfaces as NoFeatures rather than silently vanishing.
  std::set<std::string> starved;
  for (const auto& doc : documents) starved.insert(*doc.category);
  for (const auto& t : corpus) starved.erase(*t.category);
  if (!starved.empty()) {
    throw Error(ErrorCode::no_features, "category '" + *starved.begin() +
                                            "' has no document with " +
                                            std::to_string(rc.k) + " frequent words");
  }

  TrainOptions options{rc.min_sup, rc.min_conf, source, rc.k};
  auto training = train_detailed(corpus, options);
  save_model(training.model, rc.out_path);

  stats.documents = training.documents;
  for (const auto& [category, rules] : training.rules) stats.rules[category] = rules.size();
  out << format_training_summary(training.model, stats);
  out << "model " << rc.out_path << '\n';
  return kExitOk;
}

int cmd_classify(const RunConfig& rc, std::ostream& out) {
  const auto config = preprocess_config(rc);
  const auto model = load_model(rc.model_path);
  RawDocument doc{rc.input, std::nullopt, read_text_file(rc.input)};
  const auto result = classify(doc, model, config, scoring_mode(rc));
  out << format_report(result);
  return result.unclassifiable() ? kExitUnclassifiable : kExitOk;
}

int cmd_eval(const RunConfig& rc, std::ostream& out) {
  const auto config = preprocess_config(rc);
  const auto model = load_model(rc.model_path);
  const auto documents = load_corpus(rc.input);
  out << format_eval(evaluate(model, documents, config, scoring_mode(rc)));
  return kExitOk;
}

void add_support_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--min-sup", rc.min_sup, "Minimum support as a fraction of transactions")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--min-conf", rc.min_conf, "Minimum rule confidence")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
}

void add_preprocess_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--stopwords", rc.stopwords_path,
                  "Stop-word file, one word per line (default: bundled English list)")
      ->check(CLI::ExistingFile);
}

void add_mode_flag(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--mode", rc.mode,
                  "Scoring: plain, fractional (conditional^fraction) or multiplier")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "fractional", "multiplier"}));
}

}  // namespace

std::string format_training_summary(const Model& model, const TrainingStats& stats) {
  std::ostringstream out;
  out << "documents-used " << stats.documents_used << '\n';
  out << "documents-discarded " << stats.discarded.size() << '\n';
  for (const auto& d : stats.discarded) {
    out << "discarded " << d.doc_id << ": " << d.reason << '\n';
  }
  for (const auto& [category, n] : stats.documents) {
    out << "documents " << category << ' ' << n << '\n';
  }
  std::map<std::string, std::size_t> n_wordsets;
  for (const auto& s : model.categories()) {
    n_wordsets[s.category] = s.n_wordsets;
    out << "wordsets " << s.category << ' ' << s.n_wordsets << '\n';
  }
  for (const auto& [category, n] : stats.rules) {
    out << "rules " << category << ' ' << n << '\n';
  }
  out << "vocabulary " << model.vocabulary_size() << '\n';

  const auto source =
      model.params() ? model.params()->prior_source : PriorSource::wordsets;
  out << "prior-source " << to_string(source) << '\n';
  for (const auto& [category, p] : model.priors()) {
    out << "prior " << category << ' ' << fixed(p, 3) << '\n';
  }

  if (!stats.documents.empty()) {
    const auto other = source == PriorSource::wordsets ? document_priors(stats.documents)
                                                       : wordset_priors(n_wordsets);
    bool differs = false;
    for (const auto& [category, p] : model.priors()) {
      const auto it = other.find(category);
      if (it != other.end() && std::fabs(it->second - p) > 0.01) differs = true;
    }
    if (differs) {
      const char* label =
          source == PriorSource::wordsets ? "prior-documents" : "prior-wordsets";
      for (const auto& [category, p] : other) {
        out << label << ' ' << category << ' ' << fixed(p, 3) << '\n';
      }
    }
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Text categorization with association-rule word sets and Naive Bayes",
               args.empty() ? "assocnb" : args.front()};
  app.require_subcommand(1);

  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent itemsets and rules from a transaction file");
  mine_cmd->add_option("input", rc.input, "Transaction file: one transaction per line, items comma-separated")
      ->required();
  add_support_flags(mine_cmd, rc);
  mine_cmd->add_option("--out", rc.out_path, "Also write the frequent itemsets to this file");

  auto* train_cmd = app.add_subcommand("train", "Train a model from a labeled corpus directory");
  train_cmd->add_option("corpus", rc.input, "Corpus root: one subdirectory per category")->required();
  add_support_flags(train_cmd, rc);
  train_cmd->add_option("--k", rc.k, "Frequent words kept per training document")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_preprocess_flags(train_cmd, rc);
  train_cmd->add_option("--prior-source", rc.prior_source,
                        "Priors from attributed word-set counts or from document counts")
      ->capture_default_str()
      ->check(CLI::IsMember({"wordsets", "documents"}));
  train_cmd->add_option("--out,--model", rc.out_path, "Where to write the model")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify one document");
  classify_cmd->add_option("doc", rc.input, "Text file to classify")->required();
  classify_cmd->add_option("--model", rc.model_path, "Model file")->required();
  add_preprocess_flags(classify_cmd, rc);
  add_mode_flag(classify_cmd, rc);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a labeled corpus directory");
  eval_cmd->add_option("corpus", rc.input, "Corpus root: one subdirectory per category")->required();
  eval_cmd->add_option("--model", rc.model_path, "Model file")->required();
  add_preprocess_flags(eval_cmd, rc);
  add_mode_flag(eval_cmd, rc);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("assocnb");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (rc.min_sup <= 0.0) {
    err << "error: --min-sup must be greater than 0\n";
    return kExitUsage;
  }
  if (rc.min_conf <= 0.0) {
    err << "error: --min-conf must be greater than 0\n";
    return kExitUsage;
  }

  try {
    if (mine_cmd->parsed()) return cmd_mine(rc, out);
    if (train_cmd->parsed()) return cmd_train(rc, out);
    if (classify_cmd->parsed()) return cmd_classify(rc, out);
    if (eval_cmd->parsed()) return cmd_eval(rc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace assocnb
