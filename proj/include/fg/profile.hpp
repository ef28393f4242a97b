#pragma once

#include "fg/families.hpp"
#include "fg/negligibility.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fg::cover {

enum class Method : std::uint8_t { Exact, Greedy };

[[nodiscard]] const char* to_string(Method m);
/// "exact" or "greedy"; throws ParseError otherwise.
[[nodiscard]] Method parse_method(const std::string& text);

/// How a batch kernel runs. Serial is the reference the parallel path is
/// tested against; both must return identical results.
enum class Execution : std::uint8_t { Serial, Parallel };

struct SolveJob {
  Word word;
  std::size_t N = 0;
  Method method = Method::Exact;
};

/// Solves every job. Results are positionally aligned with `jobs` and do not
/// depend on the execution mode or thread count.
[[nodiscard]] std::vector<CoverageResult> solve_batch(std::span<const SolveJob> jobs, std::uint64_t node_budget,
                                                      Execution exec);

struct ProfileRow {
  std::string family;
  std::string params;
  long long n = 0;
  std::size_t length = 0;
  std::size_t N = 0;
  Method method = Method::Exact;
  std::size_t uncovered = 0;
  Optimality optimality = Optimality::Exact;
  double ms = 0.0;

  [[nodiscard]] double fraction() const {
    return length == 0 ? 0.0 : static_cast<double>(uncovered) / static_cast<double>(length);
  }
};

/// Rows ordered by (n, N, method name); one row per (n, N, method).
struct CoverageProfile {
  std::vector<ProfileRow> rows;
};

void sort_rows(CoverageProfile& profile);

struct ProfileRequest {
  std::vector<long long> ns;
  std::vector<std::size_t> Ns;
  std::vector<Method> methods{Method::Exact};
  std::uint64_t node_budget = kDefaultNodeBudget;
  Execution exec = Execution::Parallel;
  bool timing = false;  ///< when false the ms column is 0 so output is reproducible
};

[[nodiscard]] CoverageProfile family_profile(const families::FamilySpec& spec, const ProfileRequest& request);

inline constexpr const char* kCsvHeader = "family,params,n,length,N,method,uncovered,fraction,ms";

/// Method column: "exact", "greedy", or "exact-budget" for a row whose
/// solver ran out of nodes.
void write_csv(const CoverageProfile& profile, std::ostream& out);
/// Throws ParseError on a bad header or row.
[[nodiscard]] CoverageProfile read_csv(std::istream& in);

enum class VerdictKind : std::uint8_t { EmpiricallyNegligible, EmpiricallyNonnegligible, Inconclusive };

[[nodiscard]] const char* to_string(VerdictKind v);

struct BudgetVerdict {
  std::size_t N = 0;
  std::size_t lengths = 0;  ///< distinct n values seen for this N
  bool sufficient = false;  ///< at least three lengths
  bool from_exact = false;  ///< tail values come from the exact solver
  double tail_max = 0.0;
  double tail_min = 0.0;
  std::vector<bool> below;  ///< aligned with the epsilon grid: tail_max <= eps
};

/// Tail-trend reading of a profile. Always heuristic: a finite sample cannot
/// establish negligibility, which quantifies over cofinite subsets.
struct NegligibilityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t witness_N = 0;  ///< smallest passing N when kind is EmpiricallyNegligible
  std::vector<double> epsilons;
  std::vector<BudgetVerdict> per_N;

  [[nodiscard]] std::string label() const;
  [[nodiscard]] std::string to_json() const;
};

inline const std::vector<double> kDefaultEpsilonGrid{0.2, 0.1, 0.05, 0.02};

[[nodiscard]] NegligibilityVerdict negligibility_report(const CoverageProfile& profile,
                                                        const std::vector<double>& epsilons = kDefaultEpsilonGrid);

}  // namespace fg::cover
