#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "assocnb/apriori.hpp"
#include "assocnb/classify.hpp"
#include "assocnb/errors.hpp"
#include "assocnb/eval.hpp"
#include "assocnb/model.hpp"
#include "assocnb/preprocess.hpp"
#include "assocnb/store.hpp"
#include "assocnb/synth.hpp"

namespace py = pybind11;
using namespace assocnb;

namespace {

PreprocessConfig make_config(std::size_t k, const std::optional<std::vector<std::string>>& stopwords) {
  auto config = PreprocessConfig::with_default_stopwords();
  if (stopwords) config.stopwords = WordSet(stopwords->begin(), stopwords->end());
  config.transaction_size_k = k;
  config.validate();
  return config;
}

ScoringMode mode_from(const std::string& text) {
  const auto mode = parse_scoring_mode(text);
  if (!mode) throw Error(ErrorCode::invalid_argument, "unknown scoring mode: " + text);
  return *mode;
}

py::dict result_dict(const ClassificationResult& r) {
  py::dict d;
  d["doc_id"] = r.doc_id;
  d["winner"] = r.winner;
  d["words"] = r.doc_words;
  d["log10_scores"] = [&] {
    std::map<std::string, double> out;
    for (const auto& [name, _] : r.log_scores) out[name] = r.log10_score(name);
    return out;
  }();
  py::list matches;
  for (const auto& m : r.matches) {
    py::dict md;
    md["itemset"] = m.vocab_itemset;
    md["matched"] = m.matched_subset;
    md["fraction"] = m.fraction_text();
    matches.append(md);
  }
  d["matches"] = matches;
  d["report"] = format_report(r);
  return d;
}

}  // namespace

PYBIND11_MODULE(_assocnb, m) {
  m.doc() = "Association-rule word sets with Naive Bayes text classification";

  py::register_exception<Error>(m, "AssocNBError", PyExc_RuntimeError);

  m.def("tokenize", [](const std::string& text) { return tokenize(text).tokens; }, py::arg("text"));

  m.def(
      "frequent_words",
      [](const std::string& text, std::size_t k,
         std::optional<std::vector<std::string>> stopwords) -> std::optional<WordList> {
        const auto e = extract_transaction({"doc", std::nullopt, text}, make_config(k, stopwords),
                                           ExtractionMode::training);
        if (const auto* t = std::get_if<Transaction>(&e)) return t->words;
        return std::nullopt;
      },
      py::arg("text"), py::arg("k") = 13, py::arg("stopwords") = py::none(),
      "The document's transaction, or None when it has fewer than k frequent words.");

  m.def(
      "mine",
      [](std::vector<WordList> rows, double min_sup) {
        const auto r = mine(TransactionDB(std::move(rows)), min_sup);
        std::vector<std::pair<WordList, std::size_t>> frequent, maximal;
        for (const auto& level : r.levels) {
          for (const auto& s : level) frequent.emplace_back(s.items, s.support_count);
        }
        for (const auto& s : r.maximal) maximal.emplace_back(s.items, s.support_count);
        py::dict d;
        d["threshold"] = r.support_threshold_count;
        d["frequent"] = frequent;
        d["maximal"] = maximal;
        return d;
      },
      py::arg("transactions"), py::arg("min_sup"));

  m.def(
      "rules",
      [](std::vector<WordList> rows, double min_sup, double min_conf) {
        const TransactionDB db(std::move(rows));
        std::vector<std::tuple<WordList, WordList, double, double>> out;
        for (const auto& r : generate_rules(mine(db, min_sup), min_conf, db)) {
          out.emplace_back(r.antecedent.items, r.consequent.items, r.support, r.confidence);
        }
        return out;
      },
      py::arg("transactions"), py::arg("min_sup"), py::arg("min_conf"));

  py::class_<Model>(m, "Model")
      .def_property_readonly("categories", &Model::category_names)
      .def_property_readonly("vocabulary", &Model::vocabulary)
      .def_property_readonly("priors", &Model::priors)
      .def("prior", &Model::prior, py::arg("category"))
      .def("conditional", &Model::conditional, py::arg("itemset"), py::arg("category"))
      .def("attributed_category", &Model::attributed_category, py::arg("itemset"))
      .def("serialize", [](const Model& model) { return serialize_model(model); })
      .def_static("parse", &parse_model, py::arg("text"))
      .def("save", [](const Model& model, const std::filesystem::path& p) { save_model(model, p); },
           py::arg("path"))
      .def_static("load", &load_model, py::arg("path"))
      .def("__eq__", [](const Model& a, const Model& b) { return a == b; })
      .def("__len__", &Model::vocabulary_size);

  m.def(
      "train",
      [](const std::vector<std::tuple<std::string, std::string, std::string>>& docs,
         double min_sup, double min_conf, std::size_t k, const std::string& prior_source,
         std::optional<std::vector<std::string>> stopwords) {
        const auto source = parse_prior_source(prior_source);
        if (!source) throw Error(ErrorCode::invalid_argument, "unknown prior source: " + prior_source);
        const auto config = make_config(k, stopwords);
        std::vector<Transaction> corpus;
        for (const auto& [id, category, text] : docs) {
          auto e = extract_transaction({id, category, text}, config, ExtractionMode::training);
          if (auto* t = std::get_if<Transaction>(&e)) corpus.push_back(std::move(*t));
        }
        return train(corpus, {min_sup, min_conf, *source, k});
      },
      py::arg("documents"), py::arg("min_sup") = 0.02, py::arg("min_conf") = 0.75,
      py::arg("k") = 13, py::arg("prior_source") = "wordsets", py::arg("stopwords") = py::none(),
      "Trains from (id, category, text) triples. Documents with too few frequent words are skipped.");

  m.def(
      "classify",
      [](const Model& model, const std::string& text, const std::string& mode,
         std::optional<std::vector<std::string>> stopwords) {
        return result_dict(classify({"doc", std::nullopt, text}, model, make_config(13, stopwords),
                                    mode_from(mode)));
      },
      py::arg("model"), py::arg("text"), py::arg("mode") = "plain",
      py::arg("stopwords") = py::none());

  m.def(
      "synthetic_corpus",
      [](std::size_t per_category, std::uint64_t seed) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& d : generate_corpus(SynthOptions::balanced(per_category, seed))) {
          out.emplace_back(d.id, d.category.value_or(""), d.text);
        }
        return out;
      },
      py::arg("per_category") = 20, py::arg("seed") = 115);
}
