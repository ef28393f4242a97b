#include "fg/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fg::lab {

namespace {

long long parse_integer(const std::string& text) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<long long> parse_range(const std::string& text) {
  std::set<long long> values;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (const auto dots = part.find(".."); dots != std::string::npos) {
      const long long lo = parse_integer(part.substr(0, dots));
      const long long hi = parse_integer(part.substr(dots + 2));
      if (hi < lo) {
        throw ParseError("empty range '" + part + "'");
      }
      if (hi - lo > 1'000'000) {
        throw ParseError("range '" + part + "' is too long");
      }
      for (long long v = lo; v <= hi; ++v) {
        values.insert(v);
      }
    } else {
      values.insert(parse_integer(part));
    }
  }
  if (values.empty()) {
    throw ParseError("empty range '" + text + "'");
  }
  return {values.begin(), values.end()};
}

std::vector<double> parse_epsilons(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || !(v > 0.0) || v > 1.0) {
      throw ParseError("epsilon must be in (0, 1], got '" + part + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw ParseError("empty epsilon grid");
  }
  return out;
}

std::uint64_t word_digest(const Word& w) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(w.rank()));
  mix(w.size());
  for (Letter l : w.letters()) {
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l.signed_value())));
  }
  return h;
}

// ---------------------------------------------------------------------------
// ResultCache file format, one entry per line, tab separated:
//   digest N method budget rank word uncovered optimality nodes pairs

namespace {

cover::Optimality parse_optimality(const std::string& s) {
  if (s == "exact") {
    return cover::Optimality::Exact;
  }
  if (s == "greedy-bound") {
    return cover::Optimality::GreedyBound;
  }
  if (s == "budget-exhausted") {
    return cover::Optimality::BudgetExhausted;
  }
  throw ParseError("bad optimality '" + s + "'");
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(*file_);
  if (!in) {
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) {
      f.push_back(field);
    }
    if (f.size() != 10) {
      continue;  // torn trailing line from an interrupted run
    }
    try {
      const int rank = static_cast<int>(std::stol(f[4]));
      Entry e;
      e.word_text = f[5];
      e.result.cover.word = Word::parse(f[5], rank);
      e.result.cover.budget = std::stoull(f[1]);
      e.result.uncovered_letters = std::stoull(f[6]);
      e.result.optimality = parse_optimality(f[7]);
      e.result.nodes = std::stoull(f[8]);
      e.result.cover.pairs = cover::parse_pairs(f[9]);
      const Key key{std::stoull(f[0]), std::stoull(f[1]), static_cast<int>(cover::parse_method(f[2])),
                    std::stoull(f[3])};
      if (key == Key{word_digest(e.result.cover.word), e.result.cover.budget, std::get<2>(key), std::get<3>(key)}) {
        entries_.insert_or_assign(key, std::move(e));
      }
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::optional<cover::CoverageResult> ResultCache::find(const Word& w, std::size_t N, cover::Method m,
                                                       std::uint64_t budget) const {
  const auto it = entries_.find(Key{word_digest(w), N, static_cast<int>(m), budget});
  if (it == entries_.end() || !(it->second.result.cover.word == w)) {
    return std::nullopt;
  }
  ++hits_;
  return it->second.result;
}

void ResultCache::insert(const cover::CoverageResult& result, cover::Method m, std::uint64_t budget) {
  const Word& w = result.cover.word;
  const Key key{word_digest(w), result.cover.budget, static_cast<int>(m), budget};
  if (entries_.count(key) != 0) {
    return;
  }
  entries_.emplace(key, Entry{w.str(), result});
  if (file_) {
    std::ofstream out(*file_, std::ios::app);
    out << std::get<0>(key) << '\t' << result.cover.budget << '\t' << cover::to_string(m) << '\t' << budget << '\t'
        << w.rank() << '\t' << (w.rank() > 26 ? w.verbose_str() : w.str()) << '\t' << result.uncovered_letters
        << '\t' << cover::to_string(result.optimality) << '\t' << result.nodes << '\t'
        << cover::format_pairs(result.cover.pairs) << '\n';
  }
}

// ---------------------------------------------------------------------------

void validate(const ExperimentConfig& config) {
  if (config.ns.empty()) {
    throw ConfigError("n-range is empty");
  }
  if (config.Ns.empty()) {
    throw ConfigError("N-range is empty");
  }
  if (config.methods.empty()) {
    throw ConfigError("no solver method selected");
  }
  if (config.node_budget == 0) {
    throw ConfigError("node budget must be positive");
  }
  if (config.epsilons.empty()) {
    throw ConfigError("epsilon grid is empty");
  }
  try {
    (void)families::FamilySpec::parse(config.family);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad family spec: ") + e.what());
  }
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  validate(config);
  auto spec = families::FamilySpec::parse(config.family);
  if (config.seed) {
    spec = spec.reseeded(*config.seed);
  }
  if (config.threads > 0) {
    omp_set_num_threads(config.threads);
  }
  std::filesystem::create_directories(config.out_dir);

  ResultCache cache = config.use_cache ? ResultCache(cache_path(config.out_dir)) : ResultCache();

  std::set<long long> ns(config.ns.begin(), config.ns.end());
  std::set<std::size_t> Ns(config.Ns.begin(), config.Ns.end());
  std::set<cover::Method> methods(config.methods.begin(), config.methods.end());

  cover::CoverageProfile profile;
  std::vector<cover::SolveJob> pending;
  std::vector<std::size_t> pending_rows;
  for (long long n : ns) {
    Word w = [&] {
      try {
        return spec.at(n);
      } catch (const std::exception& e) {
        throw ConfigError("family " + spec.str() + " undefined at n=" + std::to_string(n) + ": " + e.what());
      }
    }();
    for (std::size_t N : Ns) {
      for (cover::Method m : methods) {
        cover::ProfileRow row;
        row.family = spec.name();
        row.params = spec.params();
        row.n = n;
        row.length = w.size();
        row.N = N;
        row.method = m;
        if (auto hit = config.use_cache ? cache.find(w, N, m, config.node_budget) : std::nullopt) {
          row.uncovered = hit->uncovered_letters;
          row.optimality = hit->optimality;
        } else {
          pending.push_back({w, N, m});
          pending_rows.push_back(profile.rows.size());
        }
        profile.rows.push_back(row);
      }
    }
  }

  // The same kernel as family_profile, with per-row timing when requested.
  std::vector<cover::CoverageResult> results(pending.size());
  std::vector<double> ms(pending.size(), 0.0);
  const auto count = static_cast<std::ptrdiff_t>(pending.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double t0 = omp_get_wtime();
    const std::vector<cover::SolveJob> one{pending[k]};
    results[k] = cover::solve_batch(one, config.node_budget, cover::Execution::Serial).front();
    if (config.timing) {
      ms[k] = (omp_get_wtime() - t0) * 1000.0;
    }
  }
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto& row = profile.rows[pending_rows[k]];
    row.uncovered = results[k].uncovered_letters;
    row.optimality = results[k].optimality;
    row.ms = ms[k];
    if (config.use_cache) {
      cache.insert(results[k], pending[k].method, config.node_budget);
    }
  }
  cover::sort_rows(profile);

  ExperimentOutcome outcome;
  outcome.verdict = cover::negligibility_report(profile, config.epsilons);
  outcome.csv_path = config.out_dir / "profile.csv";
  outcome.verdict_path = config.out_dir / "verdict.json";
  {
    std::ofstream csv(outcome.csv_path, std::ios::binary | std::ios::trunc);
    cover::write_csv(profile, csv);
  }
  {
    std::ofstream v(outcome.verdict_path, std::ios::binary | std::ios::trunc);
    v << outcome.verdict.to_json() << '\n';
  }
  outcome.cache_hits = cache.hits();
  outcome.profile = std::move(profile);
  return outcome;
}

}  // namespace fg::lab
