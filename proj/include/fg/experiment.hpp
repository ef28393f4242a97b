#pragma once

#include "fg/profile.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fg::lab {

/// Parses "3..7", "2,4,9" or "5" into an ascending list. Throws ParseError.
[[nodiscard]] std::vector<long long> parse_range(const std::string& text);
[[nodiscard]] std::vector<double> parse_epsilons(const std::string& text);

/// 64-bit FNV-1a over the rank and letters of a word.
[[nodiscard]] std::uint64_t word_digest(const Word& w);

/// Solver results keyed by (word digest, N, method, node budget), persisted
/// as an append-only tab-separated file. A hit returns exactly what the
/// solver would have computed.
class ResultCache {
 public:
  ResultCache() = default;
  /// Loads existing entries from `file` (if present) and appends new ones
  /// to it on insert.
  explicit ResultCache(std::filesystem::path file);

  [[nodiscard]] std::optional<cover::CoverageResult> find(const Word& w, std::size_t N, cover::Method m,
                                                          std::uint64_t budget) const;
  void insert(const cover::CoverageResult& result, cover::Method m, std::uint64_t budget);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] std::size_t hits() const { return hits_; }

 private:
  using Key = std::tuple<std::uint64_t, std::size_t, int, std::uint64_t>;
  struct Entry {
    std::string word_text;
    cover::CoverageResult result;
  };

  std::optional<std::filesystem::path> file_;
  std::map<Key, Entry> entries_;
  mutable std::size_t hits_ = 0;
};

struct ExperimentConfig {
  std::string family;
  std::vector<long long> ns;
  std::vector<std::size_t> Ns;
  std::vector<cover::Method> methods{cover::Method::Exact};
  std::uint64_t node_budget = cover::kDefaultNodeBudget;
  std::optional<std::uint64_t> seed;  ///< overrides the family's sampler seed
  std::vector<double> epsilons = cover::kDefaultEpsilonGrid;
  std::filesystem::path out_dir = ".";
  bool use_cache = true;
  bool timing = false;
  int threads = 0;  ///< 0 keeps the OpenMP default
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ConfigError for empty ranges, negative N, zero budget or an
/// unparseable family.
void validate(const ExperimentConfig& config);

struct ExperimentOutcome {
  cover::CoverageProfile profile;
  cover::NegligibilityVerdict verdict;
  std::filesystem::path csv_path;
  std::filesystem::path verdict_path;
  std::size_t cache_hits = 0;
};

/// Builds the profile (consulting and updating the cache), then writes
/// profile.csv and verdict.json into out_dir. Deterministic in the config.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

[[nodiscard]] inline std::filesystem::path cache_path(const std::filesystem::path& out_dir) {
  return out_dir / "cover-cache.tsv";
}

/// Plain-text table: one line per (N, method) series with min/max/last
/// fractions, followed by every row.
[[nodiscard]] std::string summary_table(const cover::CoverageProfile& profile);

/// Standalone SVG of uncovered fraction against n, one series per
/// (N, method). Throws std::invalid_argument on an empty profile.
[[nodiscard]] std::string render_svg(const cover::CoverageProfile& profile, const std::string& title);

/// Writes render_svg to `svg_path` and summary_table next to it (".txt").
void render_report(const cover::CoverageProfile& profile, const std::filesystem::path& svg_path);

}  // namespace fg::lab
