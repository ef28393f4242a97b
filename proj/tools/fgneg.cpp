// fgneg: word calculus, matched-pair covers, family profiles and
// pseudoplane walks from the command line.
//
// Exit codes: 0 success, 1 domain or empty-input error, 2 usage or parse error.

#include "fg/experiment.hpp"
#include "fg/pseudoplane.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fg::Word parse_word(const std::string& text, int rank) {
  try {
    return fg::Word::parse(text, rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<fg::cover::Method> parse_methods(const std::string& text) {
  if (text == "both") {
    return {fg::cover::Method::Exact, fg::cover::Method::Greedy};
  }
  try {
    return {fg::cover::parse_method(text)};
  } catch (const fg::ParseError& e) {
    throw UsageError(std::string(e.what()) + " (or both)");
  }
}

void print_result(const fg::cover::CoverageResult& r, const char* method) {
  std::cout << method << ": uncovered " << r.uncovered_letters << "/" << r.length() << " fraction "
            << r.uncovered_fraction() << " (" << fg::cover::to_string(r.optimality) << ")\n"
            << "  cover " << fg::cover::format_pairs(r.cover.pairs) << '\n';
}

int run_pseudoplane(std::size_t branching, std::size_t depth, std::size_t components, std::uint64_t seed,
                    std::size_t walk, const std::string& export_path, const std::string& check_path) {
  namespace plane = fg::plane;
  if (!check_path.empty()) {
    std::ifstream in(check_path);
    if (!in) {
      throw UsageError("cannot open " + check_path);
    }
    plane::PseudoplaneGraph g;
    try {
      g = plane::PseudoplaneGraph::read_edge_list(in, branching);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto report = plane::axiom_check(g);
    std::cout << "vertices " << g.size() << " edges " << g.edge_count() << '\n'
              << "axioms " << (report.passed() ? "pass" : "fail") << '\n'
              << "boundary vertices " << report.boundary.size() << '\n';
    for (const auto& v : report.violations) {
      std::cout << "  violation: " << v << '\n';
    }
    return report.passed() ? kOk : kDomain;
  }

  if (branching < 2 || depth < 1 || components < 1) {
    throw UsageError("--branching >= 2, --depth >= 1 and --components >= 1 are required");
  }
  const bool explicit_tree = plane::tree_vertex_count(branching, depth) * components <= 2'000'000;
  if (explicit_tree) {
    const auto g = plane::generate_tree(branching, depth, components, seed);
    const auto report = plane::axiom_check(g);
    std::cout << "tree b=" << branching << " d=" << depth << " c=" << components << ": " << g.size()
              << " vertices, axioms " << (report.passed() ? "pass" : "fail") << ", " << report.boundary.size()
              << " boundary vertices\n";
    if (!export_path.empty()) {
      std::ofstream out(export_path);
      g.write_edge_list(out);
    }
    // Start from the root of the first tree, where every branch has full depth.
    const plane::Vertex a0 = plane::tree_centers(g).front();
    const plane::Vertex b0 = g.neighbors(a0).front();
    const auto w = plane::claim_walk(g, a0, b0, walk, seed);
    std::cout << "walk";
    for (auto v : w.sequence) {
      std::cout << ' ' << v;
    }
    std::cout << "\nBFS distance b0..b" << walk << " = " << w.distance.str() << " (expected " << 2 * walk << ")\n";
    return kOk;
  }

  plane::LazyRegularForest forest(branching, depth, components);
  const plane::Vertex a0 = forest.root(0);
  const plane::Vertex b0 = forest.neighbors(a0).front();
  const auto w = plane::claim_walk(forest, a0, b0, walk, seed);
  const auto snapshot = forest.snapshot();
  const auto report = plane::axiom_check(snapshot);
  std::cout << "lazy forest b=" << branching << " d=" << depth << " c=" << components << ": " << snapshot.size()
            << " vertices materialized, axioms " << (report.passed() ? "pass" : "fail") << '\n';
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    snapshot.write_edge_list(out);
  }
  std::cout << "walk";
  for (auto v : w.sequence) {
    std::cout << ' ' << v;
  }
  std::cout << "\nBFS distance b0..b" << walk << " = " << plane::rank(snapshot, w.b(0), w.b(walk)).str()
            << ", tree distance " << w.distance.str() << " (expected " << 2 * walk << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-group word calculus and matched-pair cover laboratory"};
  app.require_subcommand(1);

  int rank = 4;
  std::string word_a;
  std::string word_b;

  auto* reduce = app.add_subcommand("reduce", "print the reduced form of a word");
  reduce->add_option("word", word_a, "word text")->required();
  reduce->add_option("--rank", rank, "generator count r");

  auto* root = app.add_subcommand("root", "primitive root and exponent");
  root->add_option("word", word_a)->required();
  root->add_option("--rank", rank);

  auto* commutes = app.add_subcommand("commutes", "whether two words commute");
  commutes->add_option("u", word_a)->required();
  commutes->add_option("v", word_b)->required();
  commutes->add_option("--rank", rank);

  auto* conj = app.add_subcommand("conj", "conjugate x by g (g^-1 x g)");
  conj->add_option("x", word_a)->required();
  conj->add_option("g", word_b)->required();
  conj->add_option("--rank", rank);

  int bound = 6;
  auto* squarecube = app.add_subcommand("squarecube", "search x, y with w = x^2 y^3");
  squarecube->add_option("word", word_a)->required();
  squarecube->add_option("--bound", bound, "maximum |x|")->check(CLI::NonNegativeNumber);
  squarecube->add_option("--rank", rank);

  std::size_t N = 2;
  std::string method = "exact";
  std::uint64_t budget = fg::cover::kDefaultNodeBudget;
  std::string pairs_text;
  auto* cover = app.add_subcommand("cover", "best matched-pair cover of a word");
  cover->add_option("word", word_a)->required();
  cover->add_option("--N", N, "number of pairs");
  cover->add_option("--method", method, "exact, greedy or both");
  cover->add_option("--budget", budget, "branch-and-bound node budget");
  cover->add_option("--pairs", pairs_text, "evaluate this cover instead of solving");
  cover->add_option("--rank", rank);

  std::string family;
  std::string n_range;
  std::string N_range = "1..2";
  std::string eps_text = "0.2,0.1,0.05,0.02";
  std::string out_dir = "fgneg-out";
  std::uint64_t seed = 0;
  bool no_cache = false;
  bool timing = false;
  int threads = 0;
  auto* profile = app.add_subcommand("profile", "coverage profile of a word family");
  profile->add_option("--family", family, "family spec, e.g. \"Y k=2\"")->required();
  profile->add_option("--n", n_range, "family indices, e.g. 3..7")->required();
  profile->add_option("--N", N_range, "pair budgets, e.g. 1..2");
  profile->add_option("--method", method, "exact, greedy or both");
  profile->add_option("--budget", budget, "branch-and-bound node budget per row");
  auto* seed_opt = profile->add_option("--seed", seed, "override the family's sampler seed");
  profile->add_option("--eps", eps_text, "epsilon grid for the verdict");
  profile->add_option("--out", out_dir, "output directory");
  profile->add_flag("--no-cache", no_cache, "ignore and do not update the result cache");
  profile->add_flag("--timing", timing, "fill the ms column (output is then not reproducible)");
  profile->add_option("--threads", threads, "OpenMP threads (0 = default)");

  std::string csv_path;
  std::string svg_path = "profile.svg";
  auto* report = app.add_subcommand("report", "plot a profile CSV and print a summary");
  report->add_option("--csv", csv_path, "profile CSV")->required();
  report->add_option("--out", svg_path, "SVG output path (summary goes next to it as .txt)");

  std::size_t branching = 3;
  std::size_t depth = 8;
  std::size_t components = 1;
  std::size_t walk = 3;
  std::string export_path;
  std::string check_path;
  auto* pseudo = app.add_subcommand("pseudoplane", "forest generation, axiom check and the 2n walk");
  pseudo->add_option("--branching", branching);
  pseudo->add_option("--depth", depth);
  pseudo->add_option("--components", components);
  pseudo->add_option("--seed", seed);
  pseudo->add_option("--walk", walk, "walk length n");
  pseudo->add_option("--export", export_path, "write the (materialized) graph as an edge list");
  pseudo->add_option("--check", check_path, "axiom-check an edge-list file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    app.exit(e);
    return kUsage;
  }

  try {
    if (rank < 2) {
      throw UsageError("--rank must be at least 2");
    }
    if (*reduce) {
      std::cout << parse_word(word_a, rank).str() << '\n';
    } else if (*root) {
      const auto r = fg::primitive_root(parse_word(word_a, rank));
      std::cout << r.root.str() << ' ' << r.exponent << '\n';
    } else if (*commutes) {
      std::cout << (fg::commutes(parse_word(word_a, rank), parse_word(word_b, rank)) ? "true" : "false") << '\n';
    } else if (*conj) {
      std::cout << fg::conjugate(parse_word(word_a, rank), parse_word(word_b, rank)).str() << '\n';
    } else if (*squarecube) {
      const auto w = parse_word(word_a, rank);
      if (auto found = fg::square_cube_decompose(w, bound)) {
        std::cout << found->first.str() << ' ' << found->second.str() << '\n';
      } else {
        std::cout << "none within bound " << bound << '\n';
      }
    } else if (*cover) {
      const auto w = parse_word(word_a, rank);
      if (!pairs_text.empty()) {
        std::vector<fg::cover::MatchedPair> pairs;
        try {
          pairs = fg::cover::parse_pairs(pairs_text);
        } catch (const fg::ParseError& e) {
          throw UsageError(e.what());
        }
        print_result(fg::cover::evaluate_cover({w, pairs, N}), "given");
      } else {
        for (auto m : parse_methods(method)) {
          const auto r = m == fg::cover::Method::Exact ? fg::cover::best_cover_exact(w, N, budget)
                                                       : fg::cover::best_cover_greedy(w, N);
          print_result(r, fg::cover::to_string(m));
        }
      }
    } else if (*profile) {
      fg::lab::ExperimentConfig config;
      config.family = family;
      try {
        config.ns = fg::lab::parse_range(n_range);
        for (long long v : fg::lab::parse_range(N_range)) {
          if (v < 0) {
            throw UsageError("N must be non-negative");
          }
          config.Ns.push_back(static_cast<std::size_t>(v));
        }
        config.epsilons = fg::lab::parse_epsilons(eps_text);
      } catch (const fg::ParseError& e) {
        throw UsageError(e.what());
      }
      config.methods = parse_methods(method);
      config.node_budget = budget;
      if (*seed_opt) {
        config.seed = seed;
      }
      config.out_dir = out_dir;
      config.use_cache = !no_cache;
      config.timing = timing;
      config.threads = threads;
      fg::lab::ExperimentOutcome outcome;
      try {
        outcome = fg::lab::run_experiment(config);
      } catch (const fg::lab::ConfigError& e) {
        throw UsageError(e.what());
      }
      std::ifstream csv(outcome.csv_path);
      std::cout << csv.rdbuf();
      std::cout << "verdict: " << outcome.verdict.label() << " (heuristic)\n";
      std::cerr << "wrote " << outcome.csv_path.string() << " and " << outcome.verdict_path.string() << "\n";
    } else if (*report) {
      std::ifstream in(csv_path);
      if (!in) {
        throw UsageError("cannot open " + csv_path);
      }
      fg::cover::CoverageProfile p;
      try {
        p = fg::cover::read_csv(in);
      } catch (const fg::ParseError& e) {
        throw UsageError(e.what());
      }
      if (p.rows.empty()) {
        std::cerr << "error: profile " << csv_path << " has no rows\n";
        return kDomain;
      }
      fg::lab::render_report(p, svg_path);
      std::cout << fg::lab::summary_table(p);
    } else if (*pseudo) {
      return run_pseudoplane(branching, depth, components, seed, walk, export_path, check_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
