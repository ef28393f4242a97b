#include "fg/negligibility.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fg::cover {

const char* to_string(Optimality o) {
  switch (o) {
    case Optimality::Exact:
      return "exact";
    case Optimality::GreedyBound:
      return "greedy-bound";
    case Optimality::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

double CoverageResult::uncovered_fraction() const {
  return length() == 0 ? 0.0 : static_cast<double>(uncovered_letters) / static_cast<double>(length());
}

bool CoverageResult::operator==(const CoverageResult& o) const {
  return cover.word == o.cover.word && cover.pairs == o.cover.pairs && cover.budget == o.cover.budget &&
         uncovered_letters == o.uncovered_letters && optimality == o.optimality && nodes == o.nodes;
}

InvalidCover::InvalidCover(std::size_t pair_index, const std::string& reason)
    : std::invalid_argument("pair " + std::to_string(pair_index) + ": " + reason), pair_index_(pair_index) {}

namespace {

// Fixed-width bit rows: one row per candidate pair, `words` 64-bit blocks each.
class MaskTable {
 public:
  MaskTable(std::size_t bits, std::size_t rows) : words_((bits + 63) / 64), data_(words_ * rows, 0) {}

  [[nodiscard]] std::size_t words() const { return words_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  [[nodiscard]] const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

  static void set_range(std::uint64_t* row, std::size_t start, std::size_t end) {
    for (std::size_t b = start; b < end; ++b) {
      row[b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i]));
  }
  return c;
}

std::size_t gain(const std::uint64_t* cand, const std::uint64_t* covered, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) {
    c += static_cast<std::size_t>(std::popcount(cand[i] & ~covered[i]));
  }
  return c;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) {
      return false;
    }
  }
  return true;
}

// Greedy tie-break order: longer factor, smaller first.start, smaller
// second.start, Equal before Inverse.
bool tie_break_less(const MatchedPair& a, const MatchedPair& b) {
  if (a.factor_length() != b.factor_length()) {
    return a.factor_length() > b.factor_length();
  }
  if (a.first.start != b.first.start) {
    return a.first.start < b.first.start;
  }
  if (a.second.start != b.second.start) {
    return a.second.start < b.second.start;
  }
  return a.kind < b.kind;
}

struct Candidates {
  std::vector<MatchedPair> pairs;
  std::vector<std::size_t> coverage;
  MaskTable masks;
};

Candidates build_candidates(const Word& w, std::vector<MatchedPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), tie_break_less);
  Candidates c{std::move(pairs), {}, MaskTable(w.size(), 0)};
  c.masks = MaskTable(w.size(), c.pairs.size());
  c.coverage.resize(c.pairs.size());
  for (std::size_t r = 0; r < c.pairs.size(); ++r) {
    auto* row = c.masks.row(r);
    MaskTable::set_range(row, c.pairs[r].first.start, c.pairs[r].first.end);
    MaskTable::set_range(row, c.pairs[r].second.start, c.pairs[r].second.end);
    c.coverage[r] = popcount(row, c.masks.words());
  }
  return c;
}

CoverageResult make_result(const Word& w, std::size_t N, std::vector<MatchedPair> chosen, std::size_t covered,
                           Optimality opt, std::uint64_t nodes) {
  CoverageResult r;
  r.cover = PairCover{w, std::move(chosen), N};
  r.uncovered_letters = w.size() - covered;
  r.optimality = opt;
  r.nodes = nodes;
  return r;
}

struct GreedyPick {
  std::vector<std::size_t> rows;
  std::size_t covered = 0;
};

GreedyPick greedy_rows(const Candidates& c, std::size_t N) {
  const std::size_t words = c.masks.words();
  std::vector<std::uint64_t> covered(words, 0);
  GreedyPick pick;
  for (std::size_t step = 0; step < N; ++step) {
    std::size_t best_row = c.pairs.size();
    std::size_t best_gain = 0;
    // Candidates are already in tie-break order, so the first maximum wins.
    for (std::size_t r = 0; r < c.pairs.size(); ++r) {
      if (c.coverage[r] <= best_gain) {
        continue;
      }
      const std::size_t g = gain(c.masks.row(r), covered.data(), words);
      if (g > best_gain) {
        best_gain = g;
        best_row = r;
      }
    }
    if (best_gain == 0) {
      break;
    }
    const auto* row = c.masks.row(best_row);
    for (std::size_t i = 0; i < words; ++i) {
      covered[i] |= row[i];
    }
    pick.rows.push_back(best_row);
    pick.covered += best_gain;
  }
  return pick;
}

class BranchAndBound {
 public:
  BranchAndBound(const Candidates& c, std::size_t N, std::size_t length, std::uint64_t budget)
      : c_(c), N_(N), length_(length), budget_(budget), words_(c.masks.words()) {
    // Search order: raw coverage descending, stable over the tie-break order.
    order_.resize(c.pairs.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return c.coverage[a] > c.coverage[b]; });
    // A mask contained in an earlier mask can never do better than it.
    std::vector<std::size_t> kept;
    for (std::size_t r : order_) {
      bool dominated = false;
      for (std::size_t k : kept) {
        if (is_subset(c.masks.row(r), c.masks.row(k), words_)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        kept.push_back(r);
      }
    }
    order_ = std::move(kept);
    stack_.assign((N + 1) * words_, 0);
    gains_.resize(order_.size());
  }

  void seed_incumbent(const std::vector<std::size_t>& rows, std::size_t covered) {
    best_rows_ = rows;
    best_covered_ = covered;
  }

  void run() {
    chosen_.clear();
    search(0, 0, 0);
  }

  [[nodiscard]] const std::vector<std::size_t>& best_rows() const { return best_rows_; }
  [[nodiscard]] std::size_t best_covered() const { return best_covered_; }
  [[nodiscard]] bool exhausted() const { return exhausted_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  void search(std::size_t from, std::size_t depth, std::size_t covered) {
    if (covered > best_covered_) {
      best_covered_ = covered;
      best_rows_ = chosen_;
    }
    if (depth == N_ || best_covered_ == length_ || exhausted_) {
      return;
    }
    if (nodes_ == budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;
    const std::uint64_t* mask = stack_.data() + depth * words_;
    const std::size_t slots = N_ - depth;

    // Admissible bound: the best `slots` marginal gains among the remaining
    // candidates, each counted as if disjoint.
    std::size_t live = 0;
    for (std::size_t i = from; i < order_.size(); ++i) {
      gains_[live++] = gain(c_.masks.row(order_[i]), mask, words_);
    }
    const std::size_t take = std::min(slots, live);
    std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(take),
                      gains_.begin() + static_cast<std::ptrdiff_t>(live), std::greater<>());
    const std::size_t bound =
        std::min(length_, covered + std::accumulate(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(take),
                                                    std::size_t{0}));
    if (bound <= best_covered_) {
      return;
    }

    std::uint64_t* next = stack_.data() + (depth + 1) * words_;
    for (std::size_t i = from; i < order_.size(); ++i) {
      // Raw coverage is non-increasing along order_, and bounds every gain.
      if (covered + c_.coverage[order_[i]] * slots <= best_covered_) {
        break;
      }
      const auto* row = c_.masks.row(order_[i]);
      const std::size_t g = gain(row, mask, words_);
      if (g == 0) {
        continue;
      }
      for (std::size_t k = 0; k < words_; ++k) {
        next[k] = mask[k] | row[k];
      }
      chosen_.push_back(order_[i]);
      search(i + 1, depth + 1, covered + g);
      chosen_.pop_back();
      if (exhausted_ || best_covered_ == length_) {
        return;
      }
    }
  }

  const Candidates& c_;
  std::size_t N_;
  std::size_t length_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> stack_;
  std::vector<std::size_t> gains_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_rows_;
  std::size_t best_covered_ = 0;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;
};

std::vector<MatchedPair> rows_to_pairs(const Candidates& c, std::vector<std::size_t> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<MatchedPair> out;
  out.reserve(rows.size());
  for (std::size_t r : rows) {
    out.push_back(c.pairs[r]);
  }
  return out;
}

}  // namespace

CoverageResult evaluate_cover(const PairCover& cover) {
  const Word& w = cover.word;
  if (cover.pairs.size() > cover.budget) {
    throw InvalidCover(cover.budget, "cover has " + std::to_string(cover.pairs.size()) + " pairs but N = " +
                                         std::to_string(cover.budget));
  }
  for (std::size_t i = 0; i < cover.pairs.size(); ++i) {
    if (auto err = validate_pair(w, cover.pairs[i])) {
      throw InvalidCover(i, *err);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = cover.pairs[i];
      const auto& b = cover.pairs[j];
      const bool same = (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
      if (same) {
        throw InvalidCover(i, "duplicates pair " + std::to_string(j));
      }
    }
  }
  std::vector<bool> covered(w.size(), false);
  for (const auto& p : cover.pairs) {
    for (const Interval& iv : {p.first, p.second}) {
      std::fill(covered.begin() + static_cast<std::ptrdiff_t>(iv.start),
                covered.begin() + static_cast<std::ptrdiff_t>(iv.end), true);
    }
  }
  CoverageResult r;
  r.cover = cover;
  r.uncovered_letters = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), false));
  r.optimality = Optimality::Exact;
  return r;
}

CoverageResult best_cover_greedy(const Word& w, std::size_t N) {
  const Candidates c = build_candidates(w, enumerate_matching_pairs(w));
  auto pick = greedy_rows(c, N);
  // Report pairs in the order they were picked.
  std::vector<MatchedPair> chosen;
  for (std::size_t r : pick.rows) {
    chosen.push_back(c.pairs[r]);
  }
  return make_result(w, N, std::move(chosen), pick.covered, Optimality::GreedyBound, 0);
}

CoverageResult best_cover_exact(const Word& w, std::size_t N, std::uint64_t node_budget) {
  const Candidates c = build_candidates(w, enumerate_matching_pairs(w));
  if (N == 0 || c.pairs.empty()) {
    return make_result(w, N, {}, 0, Optimality::Exact, 0);
  }
  const auto greedy = greedy_rows(c, N);
  BranchAndBound bnb(c, N, w.size(), node_budget);
  bnb.seed_incumbent(greedy.rows, greedy.covered);
  if (greedy.covered < w.size()) {
    bnb.run();
  }
  const Optimality opt = bnb.exhausted() ? Optimality::BudgetExhausted : Optimality::Exact;
  return make_result(w, N, rows_to_pairs(c, bnb.best_rows()), bnb.best_covered(), opt, bnb.nodes());
}

}  // namespace fg::cover
