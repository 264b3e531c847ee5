#include "assocnb/eval.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "assocnb/errors.hpp"

namespace assocnb {

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double EvalReport::accuracy() const noexcept {
  return documents == 0 ? 0.0
                        : static_cast<double>(correct) / static_cast<double>(documents);
}

std::size_t EvalReport::row_total(const std::string& actual) const {
  std::size_t total = 0;
  if (const auto it = confusion.find(actual); it != confusion.end()) {
    for (const auto& [_, n] : it->second) total += n;
  }
  return total;
}

double EvalReport::row_accuracy(const std::string& actual) const {
  const auto total = row_total(actual);
  if (total == 0) return 0.0;
  const auto row = confusion.find(actual);
  const auto hit = row->second.find(actual);
  const std::size_t right = hit == row->second.end() ? 0 : hit->second;
  return static_cast<double>(right) / static_cast<double>(total);
}

EvalReport evaluate(const Model& model, const std::vector<RawDocument>& documents,
                    const PreprocessConfig& config, ScoringMode mode) {
  EvalReport report;
  std::set<std::string> rows;
  for (const auto& name : model.category_names()) {
    rows.insert(name);
    report.column_labels.push_back(name);
  }
  report.column_labels.push_back(kUnclassifiable);

  for (const auto& doc : documents) {
    if (!doc.category) continue;
    const std::string actual =
        model.has_category(*doc.category) ? *doc.category : kUnknownCategory;
    rows.insert(actual);

    std::string predicted = kUnclassifiable;
    try {
      const auto result = classify(doc, model, config, mode);
      if (result.winner) predicted = *result.winner;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::empty_document) throw;
      ++report.empty_documents;
    }

    ++report.documents;
    ++report.confusion[actual][predicted];
    if (predicted == kUnclassifiable) ++report.unclassifiable;
    if (predicted == actual) ++report.correct;
  }

  report.row_labels.assign(rows.begin(), rows.end());
  return report;
}

std::string format_eval(const EvalReport& report) {
  std::ostringstream out;
  out << "documents " << report.documents << '\n';
  out << "correct " << report.correct << '\n';
  out << "accuracy " << fixed6(report.accuracy()) << '\n';
  out << "unclassifiable " << report.unclassifiable << '\n';
  out << "unclassifiable-rate "
      << fixed6(report.documents == 0
                    ? 0.0
                    : static_cast<double>(report.unclassifiable) /
                          static_cast<double>(report.documents))
      << '\n';
  out << "empty-documents " << report.empty_documents << '\n';
  for (const auto& row : report.row_labels) {
    const auto total = report.row_total(row);
    const auto right = static_cast<std::size_t>(
        report.row_accuracy(row) * static_cast<double>(total) + 0.5);
    out << "category-accuracy " << row << ' ' << fixed6(report.row_accuracy(row)) << ' '
        << right << '/' << total << '\n';
  }
  out << "confusion actual\\predicted";
  for (const auto& col : report.column_labels) out << '\t' << col;
  out << '\n';
  for (const auto& row : report.row_labels) {
    out << "confusion " << row;
    const auto it = report.confusion.find(row);
    for (const auto& col : report.column_labels) {
      std::size_t n = 0;
      if (it != report.confusion.end()) {
        if (const auto cell = it->second.find(col); cell != it->second.end()) n = cell->second;
      }
      out << '\t' << n;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace assocnb
