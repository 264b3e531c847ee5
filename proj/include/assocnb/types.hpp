#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace assocnb {

/// A sorted, duplicate-free list of words. Used for itemsets, transactions
/// and document word sets alike.
using WordList = std::vector<std::string>;

using WordSet = std::set<std::string, std::less<>>;

/// Sorts and removes duplicates in place.
void normalize(WordList& words);

/// True when every item of `items` occurs in `row`. Both must be sorted.
bool contains_all(const WordList& row, const WordList& items);

/// Sorted intersection of two sorted lists.
WordList intersect(const WordList& a, const WordList& b);

std::string join_words(const WordList& words, std::string_view sep = ",");

/// Splits on `sep` without trimming; an empty input yields one empty field.
std::vector<std::string> split(std::string_view text, char sep);

std::string_view trim(std::string_view text);

}  // namespace assocnb
