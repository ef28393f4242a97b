#pragma once

#include "fg/word.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg::cover {

/// Half-open letter interval [start, end) of a host word.
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t length() const { return end - start; }
  auto operator<=>(const Interval&) const = default;
};

enum class MatchKind : std::uint8_t { Equal, Inverse };

/// Two distinct embedded subwords whose factors are equal, or mutually
/// inverse, as words. Overlap between the intervals is allowed.
struct MatchedPair {
  Interval first;
  Interval second;
  MatchKind kind = MatchKind::Equal;

  [[nodiscard]] std::size_t factor_length() const { return first.length(); }
  bool operator==(const MatchedPair&) const = default;
};

/// Reason a pair is not a valid matched pair of `w`, or nullopt when valid.
[[nodiscard]] std::optional<std::string> validate_pair(const Word& w, const MatchedPair& pair);

/// All maximal matched pairs of w with factor length >= min_length: pairs
/// that cannot be extended by one letter on the same side of both
/// occurrences while staying matched. Canonical form has
/// first.start < second.start; the result is sorted by
/// (first.start, second.start, kind, length).
[[nodiscard]] std::vector<MatchedPair> enumerate_matching_pairs(const Word& w, std::size_t min_length = 1);

struct PairCover {
  Word word;
  std::vector<MatchedPair> pairs;
  std::size_t budget = 0;  ///< N, the number of pairs allowed
};

enum class Optimality : std::uint8_t { Exact, GreedyBound, BudgetExhausted };

[[nodiscard]] const char* to_string(Optimality o);

struct CoverageResult {
  PairCover cover;
  std::size_t uncovered_letters = 0;
  Optimality optimality = Optimality::Exact;
  std::uint64_t nodes = 0;  ///< branch-and-bound nodes expanded (0 for greedy/evaluate)

  [[nodiscard]] std::size_t length() const { return cover.word.size(); }
  /// uncovered_letters / |w|; 0 for the empty word.
  [[nodiscard]] double uncovered_fraction() const;

  bool operator==(const CoverageResult&) const;
};

class InvalidCover : public std::invalid_argument {
 public:
  InvalidCover(std::size_t pair_index, const std::string& reason);
  [[nodiscard]] std::size_t pair_index() const { return pair_index_; }

 private:
  std::size_t pair_index_;
};

/// Counts letters not covered by any interval of any pair. Throws
/// InvalidCover (with the offending index) for an invalid pair, a duplicate
/// pair, or more pairs than the budget allows.
[[nodiscard]] CoverageResult evaluate_cover(const PairCover& cover);

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

/// Minimum uncovered letters over all covers with at most N pairs, by
/// branch and bound over the maximal pairs. When the node budget runs out
/// the best cover found is returned, flagged BudgetExhausted.
[[nodiscard]] CoverageResult best_cover_exact(const Word& w, std::size_t N,
                                              std::uint64_t node_budget = kDefaultNodeBudget);

/// Greedy: repeatedly take the maximal pair covering the most new letters.
/// Ties go to the longer factor, then smaller first.start, then smaller
/// second.start, then Equal before Inverse. Stops early when nothing new
/// can be covered.
[[nodiscard]] CoverageResult best_cover_greedy(const Word& w, std::size_t N);

/// Text form "[(s1,e1)~(s2,e2):E; (s1,e1)~(s2,e2):I]".
[[nodiscard]] std::string format_pairs(const std::vector<MatchedPair>& pairs);
/// Inverse of format_pairs. Throws ParseError.
[[nodiscard]] std::vector<MatchedPair> parse_pairs(const std::string& text);

}  // namespace fg::cover
