#pragma once

// Level-wise frequent itemset mining (join, prune, count) and strong rule
// generation over word transactions.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assocnb/preprocess.hpp"
#include "assocnb/types.hpp"

namespace assocnb {

struct Itemset {
  WordList items;  // sorted, duplicate-free
  std::size_t support_count = 0;

  std::size_t size() const noexcept { return items.size(); }
  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;
};

/// Rows are normalized (sorted, deduplicated) on construction.
class TransactionDB {
 public:
  TransactionDB() = default;
  explicit TransactionDB(std::vector<WordList> rows);

  static TransactionDB from_transactions(std::span<const Transaction> transactions);

  const std::vector<WordList>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

 private:
  std::vector<WordList> rows_;
};

/// One round of candidate generation. For k = 1 every distinct item is a
/// candidate and `joined == pruned`.
struct LevelTrace {
  std::size_t k = 0;
  std::vector<WordList> joined;
  std::vector<WordList> pruned;
  std::vector<Itemset> counted;
};

struct MiningResult {
  std::vector<std::vector<Itemset>> levels;  // levels[i] holds (i+1)-itemsets
  std::vector<Itemset> maximal;              // ordered by size, then items
  double min_sup = 0.0;
  std::size_t support_threshold_count = 0;
  std::size_t num_transactions = 0;
  std::vector<LevelTrace> trace;

  std::optional<std::size_t> support_of(const WordList& items) const;
  std::size_t frequent_count() const noexcept;

  /// Compares what the itemset text format carries: levels and maximal sets.
  bool same_itemsets(const MiningResult& other) const;
};

struct Rule {
  Itemset antecedent;
  Itemset consequent;
  std::size_t support_count = 0;  // of antecedent ∪ consequent
  double support = 0.0;
  double confidence = 0.0;
};

/// max(2, floor(min_sup * db_size)). Throws InvalidSupport unless
/// 0 < min_sup <= 1, InvalidArgument when db_size is 0.
std::size_t support_threshold(double min_sup, std::size_t db_size);

/// Joins (k-1)-itemsets sharing their first k-2 items.
std::vector<WordList> join(std::span<const WordList> prev_level);

/// Drops candidates with a (k-1)-subset missing from `prev_level`.
std::vector<WordList> prune(std::span<const WordList> candidates,
                            std::span<const WordList> prev_level);

/// Counts, for every candidate, the transactions containing all its items.
/// `workers` = 0 picks a worker count from the problem size; the result does
/// not depend on it.
std::vector<Itemset> count_support(std::span<const WordList> candidates,
                                   const TransactionDB& db,
                                   unsigned workers = 0);

/// Throws EmptyDatabase for an empty db.
MiningResult mine(const TransactionDB& db, double min_sup);
MiningResult mine_with_threshold(const TransactionDB& db,
                                 std::size_t threshold_count);

/// Frequent itemsets with no frequent superset in the next level.
std::vector<Itemset> maximal_itemsets(
    const std::vector<std::vector<Itemset>>& levels);

/// Every A => F\A with F frequent, |F| >= 2, confidence >= min_conf.
std::vector<Rule> generate_rules(const MiningResult& result, double min_conf,
                                 const TransactionDB& db);

/// Transaction file: one transaction per line, items comma-separated.
/// Throws ParseError on an empty item or an item containing a tab.
std::vector<WordList> parse_transactions(std::istream& in);

/// "item1,item2,...<TAB>count" per line, ascending k, lexicographic.
void write_itemsets(std::ostream& out, const MiningResult& result);

/// Rebuilds levels and maximal sets from write_itemsets output.
MiningResult read_itemsets(std::istream& in);

std::string format_rule(const Rule& rule);

}  // namespace assocnb
