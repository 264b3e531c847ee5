#include "assocnb/apriori.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include "assocnb/errors.hpp"

namespace assocnb {

namespace {

bool by_items(const Itemset& a, const Itemset& b) { return a.items < b.items; }

std::vector<WordList> items_of(const std::vector<Itemset>& level) {
  std::vector<WordList> out;
  out.reserve(level.size());
  for (const auto& s : level) out.push_back(s.items);
  return out;
}

std::vector<Itemset> frequent_only(const std::vector<Itemset>& counted,
                                   std::size_t threshold) {
  std::vector<Itemset> out;
  for (const auto& s : counted) {
    if (s.support_count >= threshold) out.push_back(s);
  }
  return out;
}

void count_range(std::span<const WordList> candidates,
                 const std::vector<WordList>& rows, std::size_t begin,
                 std::size_t end, std::vector<std::size_t>& counts) {
  for (std::size_t r = begin; r < end; ++r) {
    const auto& row = rows[r];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c].size() <= row.size() && contains_all(row, candidates[c])) {
        ++counts[c];
      }
    }
  }
}

MiningResult run_levels(const TransactionDB& db, std::size_t threshold,
                        double min_sup) {
  if (db.empty()) {
    throw Error(ErrorCode::empty_database, "transaction database is empty");
  }
  MiningResult result;
  result.min_sup = min_sup;
  result.support_threshold_count = threshold;
  result.num_transactions = db.size();

  std::map<std::string, std::size_t> item_counts;
  for (const auto& row : db.rows()) {
    for (const auto& item : row) ++item_counts[item];
  }
  LevelTrace first;
  first.k = 1;
  for (const auto& [item, count] : item_counts) {
    first.joined.push_back({item});
    first.counted.push_back({{item}, count});
  }
  first.pruned = first.joined;
  auto level = frequent_only(first.counted, threshold);
  result.trace.push_back(std::move(first));

  while (!level.empty()) {
    result.levels.push_back(level);
    const auto prev = items_of(level);

    LevelTrace step;
    step.k = result.levels.size() + 1;
    step.joined = join(prev);
    step.pruned = prune(step.joined, prev);
    step.counted = count_support(step.pruned, db);
    level = frequent_only(step.counted, threshold);
    result.trace.push_back(std::move(step));
  }
  result.maximal = maximal_itemsets(result.levels);
  return result;
}

}  // namespace

TransactionDB::TransactionDB(std::vector<WordList> rows) : rows_(std::move(rows)) {
  for (auto& row : rows_) normalize(row);
}

TransactionDB TransactionDB::from_transactions(
    std::span<const Transaction> transactions) {
  std::vector<WordList> rows;
  rows.reserve(transactions.size());
  for (const auto& t : transactions) rows.push_back(t.words);
  return TransactionDB(std::move(rows));
}

std::optional<std::size_t> MiningResult::support_of(const WordList& items) const {
  if (items.empty() || items.size() > levels.size()) return std::nullopt;
  const auto& level = levels[items.size() - 1];
  const auto it = std::lower_bound(
      level.begin(), level.end(), items,
      [](const Itemset& s, const WordList& key) { return s.items < key; });
  if (it == level.end() || it->items != items) return std::nullopt;
  return it->support_count;
}

std::size_t MiningResult::frequent_count() const noexcept {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

bool MiningResult::same_itemsets(const MiningResult& other) const {
  return levels == other.levels && maximal == other.maximal;
}

std::size_t support_threshold(double min_sup, std::size_t db_size) {
  if (!(min_sup > 0.0 && min_sup <= 1.0)) {
    throw Error(ErrorCode::invalid_support,
                "minimum support must lie in (0, 1]");
  }
  if (db_size == 0) {
    throw Error(ErrorCode::invalid_argument, "database size must be positive");
  }
  // The epsilon absorbs representation error in products such as 0.4 * 5.
  const auto scaled = std::floor(min_sup * static_cast<double>(db_size) + 1e-9);
  return std::max<std::size_t>(2, static_cast<std::size_t>(scaled));
}

std::vector<WordList> join(std::span<const WordList> prev_level) {
  std::vector<WordList> prev(prev_level.begin(), prev_level.end());
  std::sort(prev.begin(), prev.end());
  prev.erase(std::unique(prev.begin(), prev.end()), prev.end());

  std::vector<WordList> out;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    const auto& a = prev[i];
    if (a.empty()) continue;
    for (std::size_t j = i + 1; j < prev.size(); ++j) {
      const auto& b = prev[j];
      if (b.size() != a.size() ||
          !std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) {
        break;  // sorted input: the shared-prefix block has ended
      }
      if (a.back() < b.back()) {
        WordList candidate = a;
        candidate.push_back(b.back());
        out.push_back(std::move(candidate));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WordList> prune(std::span<const WordList> candidates,
                            std::span<const WordList> prev_level) {
  std::vector<WordList> prev(prev_level.begin(), prev_level.end());
  std::sort(prev.begin(), prev.end());

  std::vector<WordList> out;
  for (const auto& candidate : candidates) {
    bool keep = true;
    WordList subset;
    for (std::size_t drop = 0; keep && drop < candidate.size(); ++drop) {
      subset.clear();
      for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (i != drop) subset.push_back(candidate[i]);
      }
      keep = std::binary_search(prev.begin(), prev.end(), subset);
    }
    if (keep) out.push_back(candidate);
  }
  return out;
}

std::vector<Itemset> count_support(std::span<const WordList> candidates,
                                   const TransactionDB& db, unsigned workers) {
  const auto& rows = db.rows();
  if (workers == 0) {
    const auto work = rows.size() * candidates.size();
    workers = work < 200000 ? 1u : std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, rows.size())));

  std::vector<std::vector<std::size_t>> partial(
      workers, std::vector<std::size_t>(candidates.size(), 0));
  if (workers == 1) {
    count_range(candidates, rows, 0, rows.size(), partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const auto begin = rows.size() * w / workers;
      const auto end = rows.size() * (w + 1) / workers;
      threads.emplace_back(count_range, candidates, std::cref(rows), begin, end,
                           std::ref(partial[w]));
    }
    for (auto& t : threads) t.join();
  }

  std::vector<Itemset> out;
  out.reserve(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::size_t total = 0;
    for (const auto& p : partial) total += p[c];
    out.push_back({candidates[c], total});
  }
  return out;
}

MiningResult mine(const TransactionDB& db, double min_sup) {
  if (db.empty()) {
    throw Error(ErrorCode::empty_database, "transaction database is empty");
  }
  return run_levels(db, support_threshold(min_sup, db.size()), min_sup);
}

MiningResult mine_with_threshold(const TransactionDB& db,
                                 std::size_t threshold_count) {
  if (threshold_count == 0) {
    throw Error(ErrorCode::invalid_argument, "support count must be >= 1");
  }
  if (db.empty()) {
    throw Error(ErrorCode::empty_database, "transaction database is empty");
  }
  return run_levels(db, threshold_count,
                    static_cast<double>(threshold_count) /
                        static_cast<double>(db.size()));
}

std::vector<Itemset> maximal_itemsets(
    const std::vector<std::vector<Itemset>>& levels) {
  std::vector<Itemset> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    auto level = levels[k];
    std::sort(level.begin(), level.end(), by_items);
    std::vector<bool> covered(level.size(), false);
    if (k + 1 < levels.size()) {
      WordList subset;
      for (const auto& bigger : levels[k + 1]) {
        for (std::size_t drop = 0; drop < bigger.items.size(); ++drop) {
          subset.clear();
          for (std::size_t i = 0; i < bigger.items.size(); ++i) {
            if (i != drop) subset.push_back(bigger.items[i]);
          }
          const auto it = std::lower_bound(
              level.begin(), level.end(), subset,
              [](const Itemset& s, const WordList& key) { return s.items < key; });
          if (it != level.end() && it->items == subset) {
            covered[static_cast<std::size_t>(it - level.begin())] = true;
          }
        }
      }
    }
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!covered[i]) out.push_back(level[i]);
    }
  }
  return out;
}

std::vector<Rule> generate_rules(const MiningResult& result, double min_conf,
                                 const TransactionDB& db) {
  if (!(min_conf > 0.0 && min_conf <= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "minimum confidence must lie in (0, 1]");
  }
  const double db_size = static_cast<double>(
      db.empty() ? result.num_transactions : db.size());

  std::vector<Rule> rules;
  for (std::size_t k = 1; k < result.levels.size(); ++k) {
    for (const auto& whole : result.levels[k]) {
      const auto n = whole.items.size();
      if (n >= 63) {
        throw Error(ErrorCode::invalid_argument,
                    "itemset too large for rule enumeration");
      }
      // Antecedents by size, then lexicographically.
      std::vector<std::pair<WordList, WordList>> splits;
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        WordList lhs, rhs;
        for (std::size_t i = 0; i < n; ++i) {
          ((mask >> i) & 1u ? lhs : rhs).push_back(whole.items[i]);
        }
        splits.emplace_back(std::move(lhs), std::move(rhs));
      }
      std::sort(splits.begin(), splits.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
      });
      for (auto& [lhs, rhs] : splits) {
        const auto lhs_count = result.support_of(lhs);
        const auto rhs_count = result.support_of(rhs);
        if (!lhs_count || *lhs_count == 0) continue;
        const double confidence = static_cast<double>(whole.support_count) /
                                  static_cast<double>(*lhs_count);
        if (confidence + 1e-12 < min_conf) continue;
        Rule rule;
        rule.antecedent = {std::move(lhs), *lhs_count};
        rule.consequent = {std::move(rhs), rhs_count.value_or(0)};
        rule.support_count = whole.support_count;
        rule.support = db_size > 0 ? static_cast<double>(whole.support_count) / db_size : 0.0;
        rule.confidence = confidence;
        rules.push_back(std::move(rule));
      }
    }
  }
  return rules;
}

std::vector<WordList> parse_transactions(std::istream& in) {
  std::vector<WordList> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty()) continue;
    WordList row;
    for (const auto& field : split(content, ',')) {
      const auto item = trim(field);
      if (item.empty()) throw ParseError(line_no, "empty item");
      if (item.find('\t') != std::string_view::npos) {
        throw ParseError(line_no, "item contains a tab");
      }
      row.emplace_back(item);
    }
    normalize(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_itemsets(std::ostream& out, const MiningResult& result) {
  for (const auto& level : result.levels) {
    for (const auto& s : level) {
      out << join_words(s.items) << '\t' << s.support_count << '\n';
    }
  }
}

MiningResult read_itemsets(std::istream& in) {
  MiningResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "missing tab");
    WordList items;
    for (const auto& field : split(std::string_view(line).substr(0, tab), ',')) {
      if (field.empty()) throw ParseError(line_no, "empty item");
      items.push_back(field);
    }
    const auto count_text = std::string(trim(std::string_view(line).substr(tab + 1)));
    std::size_t consumed = 0;
    unsigned long long count = 0;
    try {
      count = std::stoull(count_text, &consumed);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad support count");
    }
    if (consumed != count_text.size()) throw ParseError(line_no, "bad support count");
    WordList sorted = items;
    normalize(sorted);
    if (sorted != items) throw ParseError(line_no, "items not sorted and unique");
    if (result.levels.size() < items.size()) result.levels.resize(items.size());
    result.levels[items.size() - 1].push_back({std::move(items), count});
  }
  for (std::size_t k = 0; k < result.levels.size(); ++k) {
    if (result.levels[k].empty()) {
      throw ParseError(line_no, "level " + std::to_string(k + 1) + " is missing");
    }
    std::sort(result.levels[k].begin(), result.levels[k].end(), by_items);
  }
  result.maximal = maximal_itemsets(result.levels);
  return result;
}

std::string format_rule(const Rule& rule) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "\tsupport %.6f\tconfidence %.6f", rule.support,
                rule.confidence);
  return join_words(rule.antecedent.items) + " => " +
         join_words(rule.consequent.items) + buf;
}

}  // namespace assocnb
